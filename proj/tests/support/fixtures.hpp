#pragma once

// Test-only fixture generators and brute-force oracles. Nothing here calls
// into the library's geometry or sampling code.

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "nanresample/dataset.hpp"

namespace nanresample::testing {

/// Portable uniform/normal draws on top of mt19937_64.
class FixtureRng {
public:
    explicit FixtureRng(std::uint64_t seed) : engine_(seed) {}
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double normal();
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }

private:
    std::mt19937_64 engine_;
};

struct FixtureSpec {
    std::map<long long, std::size_t> class_sizes;
    std::size_t features = 10;
    double missing_rate = 0.2;
    /// Mean offset between consecutive classes, per feature.
    double class_shift = 1.0;
    std::uint64_t seed = 1;
};

/// Gaussian blobs (one per class) with cells dropped independently at
/// missing_rate. Rows are shuffled so classes interleave.
LabeledDataset make_fixture(const FixtureSpec& spec);

/// Random matrix with values drawn from a small integer grid so that exact
/// distance ties occur. Every row keeps at least `min_observed` cells.
FeatureMatrix random_matrix(FixtureRng& rng, std::size_t rows, std::size_t cols, double missing_rate,
                            std::size_t min_observed = 0);

struct OracleNeighbor {
    std::size_t row;
    double distance;
};

/// Computes every masked distance from `seed` to every candidate, sorts the
/// full list by (distance, row) and truncates to k.
std::vector<OracleNeighbor> brute_force_knn(const FeatureMatrix& x, std::size_t seed,
                                            const std::vector<std::size_t>& candidates,
                                            std::size_t k);

/// Missing count in one row range.
std::size_t count_missing(const FeatureMatrix& x, std::size_t first, std::size_t last);

}  // namespace nanresample::testing
