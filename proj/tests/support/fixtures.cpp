#include "fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace nanresample::testing {

double FixtureRng::normal() {
    const double u1 = (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

LabeledDataset make_fixture(const FixtureSpec& spec) {
    FixtureRng rng(spec.seed);
    std::vector<std::pair<long long, std::vector<double>>> rows;
    double shift = 0.0;
    for (const auto& [label, size] : spec.class_sizes) {
        for (std::size_t i = 0; i < size; ++i) {
            std::vector<double> row(spec.features);
            for (auto& v : row) v = shift + rng.normal();
            rows.emplace_back(label, std::move(row));
        }
        shift += spec.class_shift;
    }
    // Fisher-Yates with the fixture rng.
    for (std::size_t i = rows.size(); i > 1; --i) std::swap(rows[i - 1], rows[rng.index(i)]);

    std::vector<double> cells;
    std::vector<ClassLabel> labels;
    for (auto& [label, row] : rows) {
        for (double v : row) cells.push_back(rng.uniform() < spec.missing_rate ? kMissing : v);
        labels.emplace_back(label);
    }
    return LabeledDataset(FeatureMatrix(rows.size(), spec.features, std::move(cells)), std::move(labels));
}

FeatureMatrix random_matrix(FixtureRng& rng, std::size_t rows, std::size_t cols, double missing_rate,
                            std::size_t min_observed) {
    std::vector<double> cells(rows * cols);
    for (std::size_t i = 0; i < rows; ++i) {
        std::size_t observed = 0;
        for (std::size_t k = 0; k < cols; ++k) {
            const bool drop = rng.uniform() < missing_rate;
            cells[i * cols + k] = drop ? kMissing : static_cast<double>(rng.index(7)) - 3.0;
            observed += drop ? 0 : 1;
        }
        for (std::size_t k = 0; observed < std::min(min_observed, cols) && k < cols; ++k) {
            if (std::isnan(cells[i * cols + k])) {
                cells[i * cols + k] = static_cast<double>(rng.index(7)) - 3.0;
                ++observed;
            }
        }
    }
    return FeatureMatrix(rows, cols, std::move(cells));
}

std::vector<OracleNeighbor> brute_force_knn(const FeatureMatrix& x, std::size_t seed,
                                            const std::vector<std::size_t>& candidates,
                                            std::size_t k) {
    std::vector<OracleNeighbor> all;
    for (std::size_t j : candidates) {
        if (j == seed) continue;
        double sum = 0.0;
        bool any = false;
        for (std::size_t f = 0; f < x.cols(); ++f) {
            const double a = x.at(seed, f);
            const double b = x.at(j, f);
            if (std::isnan(a) || std::isnan(b)) continue;
            sum += (a - b) * (a - b);
            any = true;
        }
        if (any) all.push_back({j, std::sqrt(sum)});
    }
    std::sort(all.begin(), all.end(), [](const OracleNeighbor& a, const OracleNeighbor& b) {
        return a.distance < b.distance || (a.distance == b.distance && a.row < b.row);
    });
    if (all.size() > k) all.resize(k);
    return all;
}

std::size_t count_missing(const FeatureMatrix& x, std::size_t first, std::size_t last) {
    std::size_t n = 0;
    for (std::size_t i = first; i < last; ++i) {
        for (std::size_t k = 0; k < x.cols(); ++k) n += std::isnan(x.at(i, k)) ? 1 : 0;
    }
    return n;
}

}  // namespace nanresample::testing
