#include "nanresample/strategy.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <string>

#include "nanresample/error.hpp"

namespace nanresample {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t");
    return s.substr(first, last - first + 1);
}

// Every class below `target` is raised to it.
SamplingPlan raise_to(std::size_t target, const std::map<ClassLabel, std::size_t>& counts,
                      bool only_minimum) {
    std::size_t minimum = counts.begin()->second;
    for (const auto& [label, n] : counts) minimum = std::min(minimum, n);
    SamplingPlan plan;
    for (const auto& [label, n] : counts) {
        const bool eligible = !only_minimum || n == minimum;
        plan.synth_counts[label] = eligible && n < target ? target - n : 0;
    }
    return plan;
}

}  // namespace

std::size_t SamplingPlan::total() const noexcept {
    std::size_t sum = 0;
    for (const auto& [label, n] : synth_counts) sum += n;
    return sum;
}

std::size_t SamplingPlan::count(const ClassLabel& label) const noexcept {
    const auto it = synth_counts.find(label);
    return it == synth_counts.end() ? 0 : it->second;
}

ClassLabel majority_class(const std::map<ClassLabel, std::size_t>& class_counts) {
    // Ascending iteration plus strict comparison keeps the smallest tied label.
    auto best = class_counts.begin();
    for (auto it = class_counts.begin(); it != class_counts.end(); ++it) {
        if (it->second > best->second) best = it;
    }
    return best->first;
}

SamplingPlan resolve(const SamplingSpec& spec,
                     const std::map<ClassLabel, std::size_t>& class_counts) {
    if (class_counts.size() < 2) throw Error("nothing to resample: need at least two classes");
    for (const auto& [label, n] : class_counts) {
        if (n == 0) throw Error("empty class " + label.text());
    }
    const std::size_t majority_count = class_counts.at(majority_class(class_counts));

    return std::visit(
        overloaded{
            [&](const sampling::Auto&) { return raise_to(majority_count, class_counts, false); },
            [&](const sampling::NotMajority&) {
                return raise_to(majority_count, class_counts, false);
            },
            [&](const sampling::Minority&) { return raise_to(majority_count, class_counts, true); },
            [&](const sampling::Ratio& r) {
                if (class_counts.size() != 2) throw Error("ratio strategy requires binary labels");
                if (!(r.alpha > 0.0 && r.alpha <= 1.0)) {
                    throw Error("ratio must lie in (0, 1]");
                }
                const ClassLabel majority = majority_class(class_counts);
                const auto target = static_cast<std::size_t>(
                    std::round(r.alpha * static_cast<double>(majority_count)));
                SamplingPlan plan;
                for (const auto& [label, n] : class_counts) {
                    plan.synth_counts[label] = (label == majority || target <= n) ? 0 : target - n;
                }
                return plan;
            },
            [&](const sampling::Explicit& e) {
                SamplingPlan plan;
                for (const auto& [label, n] : class_counts) plan.synth_counts[label] = 0;
                for (const auto& [label, target] : e.targets) {
                    const auto it = class_counts.find(label);
                    if (it == class_counts.end()) {
                        throw Error("unknown class in sampling strategy: " + label.text());
                    }
                    if (target < it->second) throw Error("undersampling not supported");
                    plan.synth_counts[label] = target - it->second;
                }
                return plan;
            },
        },
        spec);
}

SamplingSpec parse_sampling_spec(std::string_view text) {
    const auto s = trim(text);
    if (s == "auto") return sampling::Auto{};
    if (s == "minority") return sampling::Minority{};
    if (s == "not-majority" || s == "not majority") return sampling::NotMajority{};

    if (s.find('=') == std::string_view::npos) {
        double alpha = 0.0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), alpha);
        if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(alpha)) {
            throw UsageError("unknown sampling strategy '" + std::string(text) + "'");
        }
        if (!(alpha > 0.0 && alpha <= 1.0)) {
            throw UsageError("sampling ratio '" + std::string(text) + "' must lie in (0, 1]");
        }
        return sampling::Ratio{alpha};
    }

    sampling::Explicit spec;
    std::string_view rest = s;
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        const auto item = trim(rest.substr(0, comma));
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        const auto eq = item.find('=');
        if (eq == std::string_view::npos) {
            throw UsageError("malformed strategy entry '" + std::string(item) + "'");
        }
        const auto label = trim(item.substr(0, eq));
        const auto value = trim(item.substr(eq + 1));
        std::size_t target = 0;
        auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), target);
        if (label.empty() || ec != std::errc() || ptr != value.data() + value.size()) {
            throw UsageError("malformed strategy entry '" + std::string(item) + "'");
        }
        if (!spec.targets.emplace(ClassLabel(std::string(label)), target).second) {
            throw UsageError("class '" + std::string(label) + "' listed twice in strategy");
        }
    }
    return spec;
}

}  // namespace nanresample
