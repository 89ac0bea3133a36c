#include "nanresample/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace nanresample {

Report make_report(const LabeledDataset& dataset) {
    const auto& x = dataset.features;
    const auto partition = partition_by_class(dataset);

    Report report;
    report.class_counts = class_counts(partition);
    std::size_t largest = 0;
    std::size_t smallest = x.rows();
    for (const auto& [label, n] : report.class_counts) {
        largest = std::max(largest, n);
        smallest = std::min(smallest, n);
    }
    report.imbalance_ratio = static_cast<double>(largest) / static_cast<double>(smallest);
    report.nan_rate = nan_rate(x);

    report.per_feature_nan_rate.assign(x.cols(), 0.0);
    for (std::size_t k = 0; k < x.cols(); ++k) {
        std::size_t missing = 0;
        for (std::size_t i = 0; i < x.rows(); ++i) missing += x.missing(i, k) ? 1 : 0;
        report.per_feature_nan_rate[k] = static_cast<double>(missing) / static_cast<double>(x.rows());
    }
    report.profile = missingness_profile(dataset, partition);

    if (dataset.column_names) {
        report.feature_names = *dataset.column_names;
    } else {
        for (std::size_t k = 0; k < x.cols(); ++k) report.feature_names.push_back("x" + std::to_string(k));
    }
    return report;
}

nlohmann::ordered_json to_json(const Report& report) {
    nlohmann::ordered_json classes = nlohmann::ordered_json::object();
    for (const auto& [label, n] : report.class_counts) classes[label.text()] = n;
    nlohmann::ordered_json per_class = nlohmann::ordered_json::object();
    for (const auto& [label, rates] : report.profile.rates) per_class[label.text()] = rates;

    nlohmann::ordered_json j;
    j["classes"] = std::move(classes);
    j["imbalance_ratio"] = report.imbalance_ratio;
    j["nan_rate"] = report.nan_rate;
    j["per_feature_nan_rate"] = report.per_feature_nan_rate;
    j["per_class_rates"] = std::move(per_class);
    return j;
}

std::string format_report(const Report& report) {
    std::ostringstream out;
    char buf[64];
    std::size_t total = 0;
    for (const auto& [label, n] : report.class_counts) total += n;
    out << "rows: " << total << ", features: " << report.per_feature_nan_rate.size() << '\n';
    out << "classes:\n";
    for (const auto& [label, n] : report.class_counts) out << "  " << label.text() << ": " << n << '\n';
    std::snprintf(buf, sizeof buf, "%.4f", report.imbalance_ratio);
    out << "imbalance ratio: " << buf << '\n';
    std::snprintf(buf, sizeof buf, "%.2f%%", 100.0 * report.nan_rate);
    out << "NaN rate: " << buf << '\n';
    out << "per-feature NaN rate:\n";
    for (std::size_t k = 0; k < report.per_feature_nan_rate.size(); ++k) {
        std::snprintf(buf, sizeof buf, "%.2f%%", 100.0 * report.per_feature_nan_rate[k]);
        out << "  " << report.feature_names[k] << ": " << buf;
        for (const auto& [label, rates] : report.profile.rates) {
            std::snprintf(buf, sizeof buf, "%.2f%%", 100.0 * rates[k]);
            out << "  [" << label.text() << " " << buf << ']';
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace nanresample
