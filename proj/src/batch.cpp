#include "nanresample/batch.hpp"

#include <exception>
#include <limits>

#include "nanresample/error.hpp"

namespace nanresample {

namespace {

void run_one(const Generator& generator, const BatchSpan& batch, std::uint64_t seed,
             std::span<double> out, std::vector<double>& scratch) {
    const auto& work = generator.work()[batch.work_index];
    auto rng = derive_stream({seed, static_cast<std::uint8_t>(generator.method()), work.ordinal,
                              batch.batch_index});
    const std::size_t d = generator.width();
    for (std::size_t t = 0; t < batch.task_count; ++t) {
        const auto row = out.subspan((batch.output_row + t) * d, d);
        generator.emit(batch.work_index, batch.first_task + t, rng, row, scratch);
    }
}

void check_output(const Generator& generator, std::span<const BatchSpan> batches,
                  std::span<double> out) {
    if (out.size() != batch_rows(batches) * generator.width()) {
        throw Error("synthetic output buffer has the wrong size");
    }
}

}  // namespace

std::vector<BatchSpan> plan_batches(std::span<const ClassWork> work, std::size_t batch_size) {
    if (batch_size == 0) throw Error("batch size must be positive");
    std::vector<BatchSpan> batches;
    std::size_t output_row = 0;
    for (std::size_t w = 0; w < work.size(); ++w) {
        const std::size_t count = work[w].count;
        const std::size_t n_batches = (count + batch_size - 1) / batch_size;
        if (n_batches > std::numeric_limits<std::uint32_t>::max()) {
            throw Error("too many batches; raise the batch size");
        }
        for (std::size_t b = 0; b < n_batches; ++b) {
            const std::size_t first = b * batch_size;
            const std::size_t size = std::min(batch_size, count - first);
            batches.push_back({w, static_cast<std::uint32_t>(b), first, size, output_row});
            output_row += size;
        }
    }
    return batches;
}

std::size_t batch_rows(std::span<const BatchSpan> batches) noexcept {
    return batches.empty() ? 0 : batches.back().output_row + batches.back().task_count;
}

void run_batches_serial(const Generator& generator, std::span<const BatchSpan> batches,
                        std::uint64_t seed, std::span<double> out) {
    check_output(generator, batches, out);
    std::vector<double> scratch(generator.scratch_size());
    for (const auto& batch : batches) run_one(generator, batch, seed, out, scratch);
}

void run_batches(const Generator& generator, std::span<const BatchSpan> batches,
                 std::uint64_t seed, std::size_t jobs, std::span<double> out) {
    if (jobs <= 1 || batches.size() <= 1) {
        run_batches_serial(generator, batches, seed, out);
        return;
    }
    check_output(generator, batches, out);

    std::exception_ptr failure;
    const auto n = static_cast<std::ptrdiff_t>(batches.size());
#pragma omp parallel num_threads(static_cast<int>(jobs))
    {
        std::vector<double> scratch(generator.scratch_size());
#pragma omp for schedule(dynamic, 1)
        for (std::ptrdiff_t b = 0; b < n; ++b) {
            try {
                run_one(generator, batches[static_cast<std::size_t>(b)], seed, out, scratch);
            } catch (...) {
#pragma omp critical(nanresample_batch_failure)
                if (!failure) failure = std::current_exception();
            }
        }
    }
    if (failure) std::rethrow_exception(failure);
}

}  // namespace nanresample
