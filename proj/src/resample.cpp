#include "nanresample/resample.hpp"

#include <algorithm>

#include "nanresample/batch.hpp"
#include "nanresample/error.hpp"

namespace nanresample {

ResampleResult resample(const LabeledDataset& dataset, const SynthesisConfig& config) {
    config.validate();
    const auto partition = partition_by_class(dataset);
    if (partition.size() < 2) throw Error("nothing to resample: dataset has a single class");

    auto plan = resolve(config.strategy, class_counts(partition));
    const auto generator = make_generator(dataset, plan, config);
    const auto batches = plan_batches(generator->work(), config.batch_size);

    const auto& x = dataset.features;
    const std::size_t d = x.cols();
    const std::size_t n = x.rows();
    const std::size_t synthetic = batch_rows(batches);

    // The output is allocated once; batches write their rows in place.
    std::vector<double> cells((n + synthetic) * d);
    std::copy(x.cells().begin(), x.cells().end(), cells.begin());
    run_batches(*generator, batches, config.seed, config.jobs,
                std::span<double>(cells).subspan(n * d));

    std::vector<ClassLabel> labels = dataset.labels;
    labels.reserve(n + synthetic);
    std::vector<Provenance> provenance;
    provenance.reserve(synthetic);
    for (const auto& batch : batches) {
        const auto& label = generator->work()[batch.work_index].label;
        for (std::size_t t = 0; t < batch.task_count; ++t) {
            labels.push_back(label);
            provenance.push_back({label, batch.batch_index, t});
        }
    }

    return ResampleResult{
        LabeledDataset(FeatureMatrix(n + synthetic, d, std::move(cells)), std::move(labels),
                       dataset.column_names, dataset.label_name, dataset.label_position),
        n,
        std::move(provenance),
        std::move(plan),
        generator->warnings(),
    };
}

}  // namespace nanresample
