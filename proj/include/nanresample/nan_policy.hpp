#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "nanresample/dataset.hpp"

namespace nanresample {

enum class NanStrategy {
    /// Missing in either parent -> missing.
    PreservePattern,
    /// Missing only when no parent observes the feature.
    Interpolate,
    /// Missing with the class's empirical per-feature rate, else Interpolate.
    RandomPattern,
};

NanStrategy parse_nan_strategy(std::string_view name);
std::string_view to_string(NanStrategy strategy);

/// Interpolation coefficient, validated to [0, 1].
class InterpolationDraw {
public:
    explicit InterpolationDraw(double lambda);
    double lambda() const noexcept { return lambda_; }

private:
    double lambda_;
};

/// Returns a donor value for feature k, or nullopt when none exists.
using DonorLookup = std::function<std::optional<double>(std::size_t)>;

/// Feature-wise synthesis from two parents. `bernoulli_draws` is read only
/// for RandomPattern and must then hold one uniform draw per feature.
/// Throws Error("unknown class in profile") when RandomPattern is requested
/// for a class the profile does not cover.
std::vector<double> combine_pair(std::span<const double> a, std::span<const double> b,
                                 InterpolationDraw draw, NanStrategy strategy,
                                 const MissingnessProfile& profile, const ClassLabel& cls,
                                 std::span<const double> bernoulli_draws);

/// Feature-wise synthesis from one seed perturbed by `noise_offsets`.
std::vector<double> combine_single(std::span<const double> seed,
                                   std::span<const double> noise_offsets, NanStrategy strategy,
                                   const DonorLookup& donor_lookup,
                                   const MissingnessProfile& profile, const ClassLabel& cls,
                                   std::span<const double> bernoulli_draws);

namespace detail {

// Allocation-free forms used by the samplers. `missing_rates` is the class's
// profile row (may be empty unless strategy is RandomPattern).
void combine_pair_into(std::span<const double> a, std::span<const double> b, double lambda,
                       NanStrategy strategy, std::span<const double> missing_rates,
                       std::span<const double> bernoulli_draws, std::span<double> out);

void combine_single_into(std::span<const double> seed, std::span<const double> noise_offsets,
                         NanStrategy strategy, const DonorLookup& donor_lookup,
                         std::span<const double> missing_rates,
                         std::span<const double> bernoulli_draws, std::span<double> out);

}  // namespace detail

}  // namespace nanresample
