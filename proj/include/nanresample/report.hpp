#pragma once

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "nanresample/dataset.hpp"

namespace nanresample {

struct Report {
    std::map<ClassLabel, std::size_t> class_counts;
    /// Majority count over minority count; 1 for a single class.
    double imbalance_ratio = 1.0;
    double nan_rate = 0.0;
    std::vector<double> per_feature_nan_rate;
    MissingnessProfile profile;
    std::vector<std::string> feature_names;
};

Report make_report(const LabeledDataset& dataset);

/// {"classes": {label: count}, "imbalance_ratio": x, "nan_rate": x,
///  "per_feature_nan_rate": [x], "per_class_rates": {label: [x]}}
nlohmann::ordered_json to_json(const Report& report);

std::string format_report(const Report& report);

}  // namespace nanresample
