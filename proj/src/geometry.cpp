#include "nanresample/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "nanresample/error.hpp"

namespace nanresample {

SharedDims shared_observed_dims(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw Error("rows differ in length");
    SharedDims dims;
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (!is_missing(a[k]) && !is_missing(b[k])) dims.indices.push_back(k);
    }
    return dims;
}

MaskedDistance masked_distance(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw Error("rows differ in length");
    double sum = 0.0;
    std::size_t shared = 0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        // NaN in either operand makes the difference NaN.
        const double diff = a[k] - b[k];
        if (std::isnan(diff)) continue;
        sum += diff * diff;
        ++shared;
    }
    if (shared == 0) return {};
    return {std::sqrt(sum), shared};
}

NeighborList k_nearest(std::size_t seed, std::span<const std::size_t> candidates,
                       const FeatureMatrix& features, std::size_t k) {
    NeighborList result{seed, {}};
    if (k == 0) return result;
    const auto seed_row = features.row(seed);
    std::vector<Neighbor> found;
    found.reserve(candidates.size());
    for (std::size_t j : candidates) {
        if (j == seed) continue;
        const auto dist = masked_distance(seed_row, features.row(j));
        if (!dist.comparable()) continue;
        found.push_back({j, *dist.value, dist.shared});
    }
    const auto closer = [](const Neighbor& a, const Neighbor& b) {
        return a.distance != b.distance ? a.distance < b.distance : a.row < b.row;
    };
    const std::size_t keep = std::min(k, found.size());
    std::partial_sort(found.begin(), found.begin() + static_cast<std::ptrdiff_t>(keep), found.end(),
                      closer);
    found.resize(keep);
    result.neighbors = std::move(found);
    return result;
}

std::vector<NeighborList> neighbor_table_serial(std::span<const std::size_t> seeds,
                                                std::span<const std::size_t> candidates,
                                                const FeatureMatrix& features, std::size_t k) {
    std::vector<NeighborList> table(seeds.size());
    for (std::size_t s = 0; s < seeds.size(); ++s) {
        table[s] = k_nearest(seeds[s], candidates, features, k);
    }
    return table;
}

std::vector<NeighborList> neighbor_table(std::span<const std::size_t> seeds,
                                         std::span<const std::size_t> candidates,
                                         const FeatureMatrix& features, std::size_t k,
                                         std::size_t jobs) {
    if (jobs <= 1) return neighbor_table_serial(seeds, candidates, features, k);
    std::vector<NeighborList> table(seeds.size());
    const auto n = static_cast<std::ptrdiff_t>(seeds.size());
#pragma omp parallel for num_threads(static_cast<int>(jobs)) schedule(dynamic, 16)
    for (std::ptrdiff_t s = 0; s < n; ++s) {
        table[static_cast<std::size_t>(s)] =
            k_nearest(seeds[static_cast<std::size_t>(s)], candidates, features, k);
    }
    return table;
}

}  // namespace nanresample
