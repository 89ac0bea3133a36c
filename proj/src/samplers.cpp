#include "nanresample/samplers.hpp"

#include <cmath>
#include <string>

#include "nanresample/batch.hpp"
#include "nanresample/error.hpp"

namespace nanresample {

namespace {

std::uint32_t class_ordinal(const ClassPartition& partition, const ClassLabel& label) {
    return static_cast<std::uint32_t>(std::distance(partition.begin(), partition.find(label)));
}

// Round-half-away-from-zero of numerator / denominator for nonnegative integers.
std::size_t rounded_quotient(std::size_t numerator, std::size_t denominator) {
    return (2 * numerator + denominator) / (2 * denominator);
}

std::vector<double> profile_row(const MissingnessProfile& profile, const ClassLabel& label) {
    const auto it = profile.rates.find(label);
    if (it == profile.rates.end()) throw Error("unknown class in profile");
    return it->second;
}

/// Shared machinery for the two interpolating methods. Subclasses fill
/// classes_ and work_ and decide which seed serves each task.
class PairGenerator : public Generator {
public:
    void emit(std::size_t work_index, std::size_t task, RandomStream& rng, std::span<double> out,
              std::span<double> scratch) const override {
        const auto& cls = classes_[work_index];
        const std::size_t seed_pos = seed_position(work_index, task);
        const std::size_t seed = cls.rows[seed_pos];
        const auto& neighbors = cls.neighbors[seed_pos].neighbors;

        // One draw per choice regardless of outcome; a seed without comparable
        // neighbours pairs with itself.
        const std::size_t pick = rng.index(neighbors.empty() ? 1 : neighbors.size());
        const std::size_t partner = neighbors.empty() ? seed : neighbors[pick].row;
        const double lambda = rng.uniform();

        std::span<const double> draws;
        if (strategy_ == NanStrategy::RandomPattern) {
            const auto buf = scratch.first(width_);
            for (double& u : buf) u = rng.uniform();
            draws = buf;
        }
        const auto& x = dataset_.features;
        detail::combine_pair_into(x.row(seed), x.row(partner), lambda, strategy_, cls.missing_rates,
                                  draws, out);
    }

protected:
    struct ClassState {
        std::vector<std::size_t> rows;
        std::vector<NeighborList> neighbors;  // same-class, indexed like rows
        std::vector<double> missing_rates;
    };

    PairGenerator(Method method, const LabeledDataset& dataset, const SynthesisConfig& config)
        : Generator(method, dataset.features.cols()),
          dataset_(dataset),
          strategy_(config.nan_strategy) {}

    ClassState make_class_state(const std::vector<std::size_t>& rows, const ClassLabel& label,
                                const MissingnessProfile& profile,
                                const SynthesisConfig& config) const {
        ClassState state;
        state.rows = rows;
        state.neighbors = neighbor_table(rows, rows, dataset_.features, config.k, config.jobs);
        state.missing_rates = profile_row(profile, label);
        return state;
    }

    virtual std::size_t seed_position(std::size_t work_index, std::size_t task) const = 0;

    const LabeledDataset& dataset_;
    NanStrategy strategy_;
    std::vector<ClassState> classes_;
};

class SmoteGenerator final : public PairGenerator {
public:
    SmoteGenerator(const LabeledDataset& dataset, const SamplingPlan& plan,
                   const SynthesisConfig& config)
        : PairGenerator(Method::SmoteNan, dataset, config) {
        const auto partition = partition_by_class(dataset);
        const auto profile = missingness_profile(dataset, partition);
        for (const auto& [label, rows] : partition) {
            const std::size_t m = plan.count(label);
            if (m == 0) continue;
            classes_.push_back(make_class_state(rows, label, profile, config));
            work_.push_back({label, class_ordinal(partition, label), m});
        }
    }

protected:
    std::size_t seed_position(std::size_t work_index, std::size_t task) const override {
        return task % classes_[work_index].rows.size();
    }
};

class AdasynGenerator final : public PairGenerator {
public:
    AdasynGenerator(const LabeledDataset& dataset, const SamplingPlan& plan,
                    const SynthesisConfig& config)
        : PairGenerator(Method::AdasynNan, dataset, config) {
        const auto partition = partition_by_class(dataset);
        const auto profile = missingness_profile(dataset, partition);
        const ClassLabel reference = majority_class(class_counts(partition));
        for (const auto& [label, rows] : partition) {
            const std::size_t budget = plan.count(label);
            if (budget == 0) continue;
            const auto allocation =
                adasyn_allocation(dataset, partition, label, reference, budget, config.k, config.jobs);
            if (allocation.uniform_fallback) {
                warnings_.push_back("class " + label.text() +
                                    ": no seed has an opposing neighbour; using uniform quotas");
            }
            std::vector<std::size_t> task_seeds;
            task_seeds.reserve(allocation.total());
            for (std::size_t s = 0; s < allocation.seeds.size(); ++s) {
                task_seeds.insert(task_seeds.end(), allocation.seeds[s].quota, s);
            }
            if (task_seeds.empty()) continue;
            classes_.push_back(make_class_state(rows, label, profile, config));
            work_.push_back({label, class_ordinal(partition, label), task_seeds.size()});
            task_seeds_.push_back(std::move(task_seeds));
        }
    }

protected:
    std::size_t seed_position(std::size_t work_index, std::size_t task) const override {
        return task_seeds_[work_index][task];
    }

private:
    std::vector<std::vector<std::size_t>> task_seeds_;
};

class RoseGenerator final : public Generator {
public:
    RoseGenerator(const LabeledDataset& dataset, const SamplingPlan& plan,
                  const SynthesisConfig& config)
        : Generator(Method::RoseNan, dataset.features.cols()),
          dataset_(dataset),
          strategy_(config.nan_strategy) {
        const auto partition = partition_by_class(dataset);
        const auto profile = missingness_profile(dataset, partition);
        const auto bandwidth = rose_bandwidth(dataset, partition, config.shrinkage);
        const auto& x = dataset.features;
        for (const auto& [label, rows] : partition) {
            const std::size_t m = plan.count(label);
            if (m == 0) continue;
            ClassState state;
            state.rows = rows;
            state.bandwidth = bandwidth.h.at(label);
            state.missing_rates = profile_row(profile, label);
            state.observed.resize(width_);
            for (std::size_t k = 0; k < width_; ++k) {
                for (std::size_t i : rows) {
                    if (!x.missing(i, k)) state.observed[k].push_back(i);
                }
            }
            classes_.push_back(std::move(state));
            work_.push_back({label, class_ordinal(partition, label), m});
        }
    }

    void emit(std::size_t work_index, std::size_t /*task*/, RandomStream& rng,
              std::span<double> out, std::span<double> scratch) const override {
        const auto& cls = classes_[work_index];
        const auto& x = dataset_.features;
        const std::size_t seed = cls.rows[rng.index(cls.rows.size())];

        const auto offsets = scratch.first(width_);
        for (std::size_t k = 0; k < width_; ++k) offsets[k] = cls.bandwidth[k] * rng.normal();

        std::span<const double> draws;
        if (strategy_ == NanStrategy::RandomPattern) {
            const auto buf = scratch.subspan(width_, width_);
            for (double& u : buf) u = rng.uniform();
            draws = buf;
        }

        DonorLookup donor;
        if (strategy_ != NanStrategy::PreservePattern) {
            donor = [&](std::size_t k) -> std::optional<double> {
                const auto& pool = cls.observed[k];
                if (pool.empty()) return std::nullopt;
                return x.at(pool[rng.index(pool.size())], k);
            };
        }
        detail::combine_single_into(x.row(seed), offsets, strategy_, donor, cls.missing_rates,
                                    draws, out);
    }

private:
    struct ClassState {
        std::vector<std::size_t> rows;
        std::vector<double> bandwidth;
        std::vector<double> missing_rates;
        std::vector<std::vector<std::size_t>> observed;  // per feature, rows observing it
    };

    const LabeledDataset& dataset_;
    NanStrategy strategy_;
    std::vector<ClassState> classes_;
};

std::vector<SyntheticSample> generate(const LabeledDataset& dataset, const SamplingPlan& plan,
                                      const SynthesisConfig& config, Method expected) {
    if (config.method != expected) throw Error("configuration names a different method");
    const auto generator = make_generator(dataset, plan, config);
    const auto batches = plan_batches(generator->work(), config.batch_size);
    const std::size_t d = generator->width();
    std::vector<double> cells(batch_rows(batches) * d);
    run_batches(*generator, batches, config.seed, config.jobs, cells);

    std::vector<SyntheticSample> samples;
    samples.reserve(batch_rows(batches));
    for (const auto& batch : batches) {
        const auto& label = generator->work()[batch.work_index].label;
        for (std::size_t t = 0; t < batch.task_count; ++t) {
            const auto first = cells.begin() + static_cast<std::ptrdiff_t>((batch.output_row + t) * d);
            samples.push_back({std::vector<double>(first, first + static_cast<std::ptrdiff_t>(d)), label});
        }
    }
    return samples;
}

}  // namespace

Method parse_method(std::string_view name) {
    if (name == "smote") return Method::SmoteNan;
    if (name == "adasyn") return Method::AdasynNan;
    if (name == "rose") return Method::RoseNan;
    throw UsageError("unknown method '" + std::string(name) + "'");
}

std::string_view to_string(Method method) {
    switch (method) {
        case Method::SmoteNan: return "smote";
        case Method::AdasynNan: return "adasyn";
        case Method::RoseNan: return "rose";
    }
    return "?";
}

void SynthesisConfig::validate() const {
    if (k == 0) throw Error("k must be at least 1");
    if (!(shrinkage >= 0.0) || !std::isfinite(shrinkage)) {
        throw Error("shrinkage must be a finite nonnegative number");
    }
    if (batch_size == 0) throw Error("batch size must be at least 1");
    if (jobs == 0) throw Error("jobs must be at least 1");
}

std::size_t AdasynAllocation::total() const noexcept {
    std::size_t sum = 0;
    for (const auto& s : seeds) sum += s.quota;
    return sum;
}

AdasynAllocation adasyn_allocation(const LabeledDataset& dataset, const ClassPartition& partition,
                                   const ClassLabel& label, const ClassLabel& reference,
                                   std::size_t budget, std::size_t k, std::size_t jobs) {
    const auto it = partition.find(label);
    if (it == partition.end() || it->second.empty()) throw Error("empty class " + label.text());
    if (k == 0) throw Error("k must be at least 1");
    const auto& rows = it->second;

    std::vector<std::size_t> everyone(dataset.labels.size());
    for (std::size_t i = 0; i < everyone.size(); ++i) everyone[i] = i;
    const auto table = neighbor_table(rows, everyone, dataset.features, k, jobs);

    const bool self_is_reference = label == reference;
    AdasynAllocation allocation{label, {}, false};
    allocation.seeds.reserve(rows.size());
    std::size_t total_opposing = 0;
    for (std::size_t s = 0; s < rows.size(); ++s) {
        std::size_t opposing = 0;
        for (const auto& nb : table[s].neighbors) {
            const auto& nb_label = dataset.labels[nb.row];
            opposing += (self_is_reference ? nb_label != label : nb_label == reference) ? 1 : 0;
        }
        total_opposing += opposing;
        allocation.seeds.push_back(
            {rows[s], opposing, static_cast<double>(opposing) / static_cast<double>(k), 0.0, 0});
    }

    if (total_opposing == 0) {
        allocation.uniform_fallback = true;
        const std::size_t quota = rounded_quotient(budget, rows.size());
        for (auto& seed : allocation.seeds) {
            seed.weight = 1.0 / static_cast<double>(rows.size());
            seed.quota = quota;
        }
        return allocation;
    }
    // weight = difficulty / sum(difficulty) = opposing / total_opposing, kept
    // in integers so the quota rounding is exact.
    for (auto& seed : allocation.seeds) {
        seed.weight = static_cast<double>(seed.opposing_neighbors) / static_cast<double>(total_opposing);
        seed.quota = rounded_quotient(seed.opposing_neighbors * budget, total_opposing);
    }
    return allocation;
}

RoseBandwidth rose_bandwidth(const LabeledDataset& dataset, const ClassPartition& partition,
                             double shrinkage) {
    const auto& x = dataset.features;
    const auto d = static_cast<double>(x.cols());
    RoseBandwidth result;
    for (const auto& [label, rows] : partition) {
        const auto n = static_cast<double>(rows.size());
        const double factor = std::pow(4.0 / ((d + 2.0) * n), 1.0 / (d + 4.0));
        std::vector<double> h(x.cols(), 0.0);
        for (std::size_t k = 0; k < x.cols(); ++k) {
            double sum = 0.0;
            std::size_t observed = 0;
            for (std::size_t i : rows) {
                if (x.missing(i, k)) continue;
                sum += x.at(i, k);
                ++observed;
            }
            if (observed < 2) continue;
            const double mean = sum / static_cast<double>(observed);
            double ss = 0.0;
            for (std::size_t i : rows) {
                if (x.missing(i, k)) continue;
                const double dev = x.at(i, k) - mean;
                ss += dev * dev;
            }
            const double sd = std::sqrt(ss / static_cast<double>(observed - 1));
            h[k] = shrinkage * factor * sd;
        }
        result.h.emplace(label, std::move(h));
    }
    return result;
}

std::unique_ptr<Generator> make_generator(const LabeledDataset& dataset, const SamplingPlan& plan,
                                          const SynthesisConfig& config) {
    config.validate();
    switch (config.method) {
        case Method::SmoteNan: return std::make_unique<SmoteGenerator>(dataset, plan, config);
        case Method::AdasynNan: return std::make_unique<AdasynGenerator>(dataset, plan, config);
        case Method::RoseNan: return std::make_unique<RoseGenerator>(dataset, plan, config);
    }
    throw Error("unknown method");
}

std::vector<SyntheticSample> smote_nan(const LabeledDataset& dataset, const SamplingPlan& plan,
                                       const SynthesisConfig& config) {
    return generate(dataset, plan, config, Method::SmoteNan);
}

std::vector<SyntheticSample> adasyn_nan(const LabeledDataset& dataset, const SamplingPlan& plan,
                                        const SynthesisConfig& config) {
    return generate(dataset, plan, config, Method::AdasynNan);
}

std::vector<SyntheticSample> rose_nan(const LabeledDataset& dataset, const SamplingPlan& plan,
                                      const SynthesisConfig& config) {
    return generate(dataset, plan, config, Method::RoseNan);
}

}  // namespace nanresample
