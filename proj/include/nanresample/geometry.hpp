#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "nanresample/dataset.hpp"

namespace nanresample {

/// Feature indices observed in both rows, ascending.
struct SharedDims {
    std::vector<std::size_t> indices;
    std::size_t size() const noexcept { return indices.size(); }
};

/// Euclidean distance over the shared observed dimensions, without
/// normalisation by their count. `value` is empty (incomparable) exactly when
/// the rows share no observed dimension.
struct MaskedDistance {
    std::optional<double> value;
    std::size_t shared = 0;

    bool comparable() const noexcept { return value.has_value(); }
};

struct Neighbor {
    std::size_t row;
    double distance;
    std::size_t shared;
};

/// Nearest comparable rows for one seed, ascending by (distance, row).
struct NeighborList {
    std::size_t seed = 0;
    std::vector<Neighbor> neighbors;
};

SharedDims shared_observed_dims(std::span<const double> a, std::span<const double> b);

MaskedDistance masked_distance(std::span<const double> a, std::span<const double> b);

/// Exhaustive scan of `candidates` (the seed itself is skipped). Incomparable
/// candidates are excluded; ties are broken by ascending row index. The list
/// may be shorter than k, or empty.
NeighborList k_nearest(std::size_t seed, std::span<const std::size_t> candidates,
                       const FeatureMatrix& features, std::size_t k);

/// k_nearest for every seed, one query per seed, run on up to `jobs` threads.
std::vector<NeighborList> neighbor_table(std::span<const std::size_t> seeds,
                                         std::span<const std::size_t> candidates,
                                         const FeatureMatrix& features, std::size_t k,
                                         std::size_t jobs);

/// Single-threaded reference for neighbor_table.
std::vector<NeighborList> neighbor_table_serial(std::span<const std::size_t> seeds,
                                                std::span<const std::size_t> candidates,
                                                const FeatureMatrix& features, std::size_t k);

}  // namespace nanresample
