#pragma once

#include <cstddef>
#include <map>
#include <string_view>
#include <variant>

#include "nanresample/dataset.hpp"

namespace nanresample {

namespace sampling {
/// Raise every class except the majority to the majority count.
struct Auto {};
/// Raise only the least populated class(es) to the majority count.
struct Minority {};
/// Same targets as Auto.
struct NotMajority {};
/// Binary only: minority target total = round(alpha * majority count).
struct Ratio {
    double alpha;
};
/// Requested total count per listed class.
struct Explicit {
    std::map<ClassLabel, std::size_t> targets;
};
}  // namespace sampling

using SamplingSpec = std::variant<sampling::Auto, sampling::Minority, sampling::NotMajority,
                                  sampling::Ratio, sampling::Explicit>;

struct SamplingPlan {
    std::map<ClassLabel, std::size_t> synth_counts;

    std::size_t total() const noexcept;
    std::size_t count(const ClassLabel& label) const noexcept;
};

/// Majority class: largest count, smallest identifier among ties.
ClassLabel majority_class(const std::map<ClassLabel, std::size_t>& class_counts);

SamplingPlan resolve(const SamplingSpec& spec,
                     const std::map<ClassLabel, std::size_t>& class_counts);

/// Parses "auto", "minority", "not-majority", a decimal ratio in (0, 1], or
/// "class=target,class=target". Throws UsageError naming the bad token.
SamplingSpec parse_sampling_spec(std::string_view text);

}  // namespace nanresample
