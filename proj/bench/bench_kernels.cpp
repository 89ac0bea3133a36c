// Serial reference versus OpenMP kernels on a 1000 x 10 resampling task.
//
//   ./build/bench/bench_kernels --benchmark_filter=Batches
//
// Arguments are the worker count; 1 runs the serial reference.

#include <benchmark/benchmark.h>

#include <numeric>

#include "fixtures.hpp"
#include "nanresample/batch.hpp"
#include "nanresample/geometry.hpp"
#include "nanresample/resample.hpp"

using namespace nanresample;

namespace {

const LabeledDataset& dataset() {
    static const LabeledDataset ds = testing::make_fixture(
        {.class_sizes = {{0, 500}, {1, 100}}, .features = 10, .missing_rate = 0.2, .seed = 2024});
    return ds;
}

void NeighborTable(benchmark::State& state) {
    const auto& x = dataset().features;
    std::vector<std::size_t> rows(x.rows());
    std::iota(rows.begin(), rows.end(), 0);
    const auto jobs = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        auto table = jobs == 1 ? neighbor_table_serial(rows, rows, x, 5)
                               : neighbor_table(rows, rows, x, 5, jobs);
        benchmark::DoNotOptimize(table.data());
    }
}

void Batches(benchmark::State& state, Method method) {
    const auto& ds = dataset();
    SynthesisConfig config;
    config.method = method;
    config.seed = 7;
    const auto plan = resolve(config.strategy, class_counts(partition_by_class(ds)));
    const auto generator = make_generator(ds, plan, config);
    const auto batches = plan_batches(generator->work(), config.batch_size);
    std::vector<double> out(batch_rows(batches) * generator->width());
    const auto jobs = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        if (jobs == 1) {
            run_batches_serial(*generator, batches, config.seed, out);
        } else {
            run_batches(*generator, batches, config.seed, jobs, out);
        }
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(batch_rows(batches)));
}

void EndToEnd(benchmark::State& state, Method method) {
    SynthesisConfig config;
    config.method = method;
    config.seed = 7;
    config.jobs = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        auto result = resample(dataset(), config);
        benchmark::DoNotOptimize(result.dataset.features.cells().data());
    }
}

}  // namespace

BENCHMARK(NeighborTable)->Arg(1)->Arg(2)->Arg(4)->UseRealTime();
BENCHMARK_CAPTURE(Batches, smote, Method::SmoteNan)->Arg(1)->Arg(2)->Arg(4)->UseRealTime();
BENCHMARK_CAPTURE(Batches, adasyn, Method::AdasynNan)->Arg(1)->Arg(2)->Arg(4)->UseRealTime();
BENCHMARK_CAPTURE(Batches, rose, Method::RoseNan)->Arg(1)->Arg(2)->Arg(4)->UseRealTime();
BENCHMARK_CAPTURE(EndToEnd, smote, Method::SmoteNan)->Arg(1)->Arg(4)->UseRealTime();
BENCHMARK_CAPTURE(EndToEnd, adasyn, Method::AdasynNan)->Arg(1)->Arg(4)->UseRealTime();
BENCHMARK_CAPTURE(EndToEnd, rose, Method::RoseNan)->Arg(1)->Arg(4)->UseRealTime();

BENCHMARK_MAIN();
