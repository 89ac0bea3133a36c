#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "nanresample/dataset.hpp"
#include "nanresample/samplers.hpp"
#include "nanresample/strategy.hpp"

namespace nanresample {

/// Where a synthetic row came from.
struct Provenance {
    ClassLabel label;
    std::uint32_t batch_index = 0;
    std::size_t within_batch = 0;
};

struct ResampleResult {
    /// Original rows in input order, then synthetic rows grouped by ascending
    /// class, batch index and position within the batch.
    LabeledDataset dataset;
    std::size_t original_rows = 0;
    std::vector<Provenance> provenance;  // one entry per synthetic row
    SamplingPlan plan;
    std::vector<std::string> warnings;

    std::size_t synthetic_rows() const noexcept { return provenance.size(); }
};

/// Resolves the sampling plan, then generates every synthetic row in batches
/// of config.batch_size on up to config.jobs threads. The output is a pure
/// function of (dataset, config minus jobs).
///
/// Throws Error("nothing to resample") on single-class input and on invalid
/// configuration or strategy.
ResampleResult resample(const LabeledDataset& dataset, const SynthesisConfig& config);

}  // namespace nanresample
