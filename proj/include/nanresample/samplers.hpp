#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nanresample/dataset.hpp"
#include "nanresample/geometry.hpp"
#include "nanresample/nan_policy.hpp"
#include "nanresample/random.hpp"
#include "nanresample/strategy.hpp"

namespace nanresample {

enum class Method : std::uint8_t { SmoteNan = 1, AdasynNan = 2, RoseNan = 3 };

Method parse_method(std::string_view name);
std::string_view to_string(Method method);

struct SynthesisConfig {
    Method method = Method::SmoteNan;
    std::size_t k = 5;
    SamplingSpec strategy = sampling::Auto{};
    NanStrategy nan_strategy = NanStrategy::PreservePattern;
    /// Multiplier on the ROSE kernel bandwidth; ignored by the other methods.
    double shrinkage = 1.0;
    std::uint64_t seed = 0;
    std::size_t batch_size = 64;
    std::size_t jobs = 1;

    /// Throws Error on k == 0, negative or non-finite shrinkage, batch_size == 0
    /// or jobs == 0.
    void validate() const;
};

/// ADASYN bookkeeping for one minority seed.
struct AdasynSeed {
    std::size_t row = 0;
    /// Neighbours (over all classes) that belong to the reference class.
    std::size_t opposing_neighbors = 0;
    /// opposing_neighbors / k
    double difficulty = 0.0;
    /// difficulty normalised over the class's seeds
    double weight = 0.0;
    std::size_t quota = 0;
};

struct AdasynAllocation {
    ClassLabel label;
    std::vector<AdasynSeed> seeds;
    /// True when no seed had an opposing neighbour and quotas were spread evenly.
    bool uniform_fallback = false;

    std::size_t total() const noexcept;
};

/// Difficulty scores and per-seed quotas for growing `label` by `budget`
/// rows. Neighbours are searched over the whole dataset; a neighbour counts
/// as opposing when it belongs to `reference`, or, when `label` is itself the
/// reference class, when it belongs to any other class. Quotas are
/// round-half-away-from-zero of weight * budget with no redistribution.
AdasynAllocation adasyn_allocation(const LabeledDataset& dataset, const ClassPartition& partition,
                                   const ClassLabel& label, const ClassLabel& reference,
                                   std::size_t budget, std::size_t k, std::size_t jobs = 1);

/// Per-class diagonal kernel bandwidth for ROSE:
///   h_k = shrinkage * (4 / ((d + 2) n_c))^(1 / (d + 4)) * sd_k
/// where sd_k is the sample standard deviation of the class's observed values
/// in feature k (zero when fewer than two are observed).
struct RoseBandwidth {
    std::map<ClassLabel, std::vector<double>> h;
};

RoseBandwidth rose_bandwidth(const LabeledDataset& dataset, const ClassPartition& partition,
                             double shrinkage);

/// Synthetic rows owed to one class.
struct ClassWork {
    ClassLabel label;
    std::uint32_t ordinal = 0;  // position of the class in ascending label order
    std::size_t count = 0;
};

/// Produces synthetic rows one task at a time. All state is prepared at
/// construction; emit() is const and safe to call concurrently as long as
/// each caller owns its stream, output row and scratch buffer.
class Generator {
public:
    virtual ~Generator() = default;

    Method method() const noexcept { return method_; }
    std::size_t width() const noexcept { return width_; }
    const std::vector<ClassWork>& work() const noexcept { return work_; }
    const std::vector<std::string>& warnings() const noexcept { return warnings_; }

    /// Scratch doubles emit() needs per call.
    std::size_t scratch_size() const noexcept { return 2 * width_; }

    /// Writes task `task` of work item `work_index` into `out`.
    virtual void emit(std::size_t work_index, std::size_t task, RandomStream& rng,
                      std::span<double> out, std::span<double> scratch) const = 0;

protected:
    Generator(Method method, std::size_t width) : method_(method), width_(width) {}

    Method method_;
    std::size_t width_;
    std::vector<ClassWork> work_;
    std::vector<std::string> warnings_;
};

/// Builds the generator selected by config.method. `dataset` must outlive it.
std::unique_ptr<Generator> make_generator(const LabeledDataset& dataset, const SamplingPlan& plan,
                                          const SynthesisConfig& config);

struct SyntheticSample {
    std::vector<double> row;
    ClassLabel label;
};

/// Pair interpolation between a seed and one of its k nearest same-class
/// neighbours. Seeds cycle through the class rows in index order, so each
/// class receives exactly plan.synth_counts[c] rows.
std::vector<SyntheticSample> smote_nan(const LabeledDataset& dataset, const SamplingPlan& plan,
                                       const SynthesisConfig& config);

/// SMOTE-style interpolation with per-seed quotas from adasyn_allocation.
/// The emitted total can differ from the plan by rounding.
std::vector<SyntheticSample> adasyn_nan(const LabeledDataset& dataset, const SamplingPlan& plan,
                                        const SynthesisConfig& config);

/// Gaussian perturbation of seeds drawn with replacement from the class.
std::vector<SyntheticSample> rose_nan(const LabeledDataset& dataset, const SamplingPlan& plan,
                                      const SynthesisConfig& config);

}  // namespace nanresample
