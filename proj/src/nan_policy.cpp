#include "nanresample/nan_policy.hpp"

#include <cmath>
#include <string>

#include "nanresample/error.hpp"

namespace nanresample {

namespace {

void check_draws(NanStrategy strategy, std::size_t d, std::span<const double> missing_rates,
                 std::span<const double> bernoulli_draws) {
    if (strategy != NanStrategy::RandomPattern) return;
    if (missing_rates.size() != d) throw Error("profile width does not match row width");
    if (bernoulli_draws.size() != d) throw Error("expected one Bernoulli draw per feature");
}

std::span<const double> class_rates(const MissingnessProfile& profile, const ClassLabel& cls,
                                    NanStrategy strategy) {
    if (strategy != NanStrategy::RandomPattern) return {};
    const auto it = profile.rates.find(cls);
    if (it == profile.rates.end()) throw Error("unknown class in profile");
    return it->second;
}

// A zero offset leaves the value bit-identical (including the sign of zero).
double perturb(double value, double offset) { return offset == 0.0 ? value : value + offset; }

}  // namespace

NanStrategy parse_nan_strategy(std::string_view name) {
    if (name == "preserve") return NanStrategy::PreservePattern;
    if (name == "interpolate") return NanStrategy::Interpolate;
    if (name == "random") return NanStrategy::RandomPattern;
    throw UsageError("unknown NaN strategy '" + std::string(name) + "'");
}

std::string_view to_string(NanStrategy strategy) {
    switch (strategy) {
        case NanStrategy::PreservePattern: return "preserve";
        case NanStrategy::Interpolate: return "interpolate";
        case NanStrategy::RandomPattern: return "random";
    }
    return "?";
}

InterpolationDraw::InterpolationDraw(double lambda) : lambda_(lambda) {
    if (!(lambda >= 0.0 && lambda <= 1.0)) throw Error("interpolation draw outside [0, 1]");
}

namespace detail {

void combine_pair_into(std::span<const double> a, std::span<const double> b, double lambda,
                       NanStrategy strategy, std::span<const double> missing_rates,
                       std::span<const double> bernoulli_draws, std::span<double> out) {
    const std::size_t d = a.size();
    if (b.size() != d || out.size() != d) throw Error("rows differ in length");
    check_draws(strategy, d, missing_rates, bernoulli_draws);

    for (std::size_t k = 0; k < d; ++k) {
        const bool has_a = !is_missing(a[k]);
        const bool has_b = !is_missing(b[k]);
        if (strategy == NanStrategy::RandomPattern && bernoulli_draws[k] < missing_rates[k]) {
            out[k] = kMissing;
        } else if (has_a && has_b) {
            // std::lerp stays inside [a, b] for lambda in [0, 1].
            out[k] = std::lerp(a[k], b[k], lambda);
        } else if (strategy == NanStrategy::PreservePattern) {
            out[k] = kMissing;
        } else if (has_a) {
            out[k] = a[k];
        } else if (has_b) {
            out[k] = b[k];
        } else {
            out[k] = kMissing;
        }
    }
}

void combine_single_into(std::span<const double> seed, std::span<const double> noise_offsets,
                         NanStrategy strategy, const DonorLookup& donor_lookup,
                         std::span<const double> missing_rates,
                         std::span<const double> bernoulli_draws, std::span<double> out) {
    const std::size_t d = seed.size();
    if (noise_offsets.size() != d || out.size() != d) throw Error("rows differ in length");
    check_draws(strategy, d, missing_rates, bernoulli_draws);

    for (std::size_t k = 0; k < d; ++k) {
        if (strategy == NanStrategy::RandomPattern && bernoulli_draws[k] < missing_rates[k]) {
            out[k] = kMissing;
        } else if (!is_missing(seed[k])) {
            out[k] = perturb(seed[k], noise_offsets[k]);
        } else if (strategy == NanStrategy::PreservePattern || !donor_lookup) {
            out[k] = kMissing;
        } else if (const auto donor = donor_lookup(k); donor && !is_missing(*donor)) {
            out[k] = perturb(*donor, noise_offsets[k]);
        } else {
            out[k] = kMissing;
        }
    }
}

}  // namespace detail

std::vector<double> combine_pair(std::span<const double> a, std::span<const double> b,
                                 InterpolationDraw draw, NanStrategy strategy,
                                 const MissingnessProfile& profile, const ClassLabel& cls,
                                 std::span<const double> bernoulli_draws) {
    std::vector<double> out(a.size());
    detail::combine_pair_into(a, b, draw.lambda(), strategy, class_rates(profile, cls, strategy),
                              bernoulli_draws, out);
    return out;
}

std::vector<double> combine_single(std::span<const double> seed,
                                   std::span<const double> noise_offsets, NanStrategy strategy,
                                   const DonorLookup& donor_lookup,
                                   const MissingnessProfile& profile, const ClassLabel& cls,
                                   std::span<const double> bernoulli_draws) {
    std::vector<double> out(seed.size());
    detail::combine_single_into(seed, noise_offsets, strategy, donor_lookup,
                                class_rates(profile, cls, strategy), bernoulli_draws, out);
    return out;
}

}  // namespace nanresample
