#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "nanresample/samplers.hpp"

namespace nanresample {

/// A contiguous run of tasks from one class, drawn from a single substream.
struct BatchSpan {
    std::size_t work_index = 0;
    std::uint32_t batch_index = 0;  // within the class
    std::size_t first_task = 0;
    std::size_t task_count = 0;
    std::size_t output_row = 0;  // offset into the synthetic block
};

/// Splits each class's tasks into batches of at most batch_size, ordered by
/// class then batch index. output_row offsets are the running prefix sum.
std::vector<BatchSpan> plan_batches(std::span<const ClassWork> work, std::size_t batch_size);

/// Row count covered by a batch plan.
std::size_t batch_rows(std::span<const BatchSpan> batches) noexcept;

/// Runs every batch on up to `jobs` OpenMP threads, writing rows directly
/// into `out` (batch_rows * width cells). Each batch draws only from
/// derive_stream({seed, method, class ordinal, batch index}), so the result
/// does not depend on `jobs` or on scheduling.
void run_batches(const Generator& generator, std::span<const BatchSpan> batches,
                 std::uint64_t seed, std::size_t jobs, std::span<double> out);

/// Single-threaded reference for run_batches.
void run_batches_serial(const Generator& generator, std::span<const BatchSpan> batches,
                        std::uint64_t seed, std::span<double> out);

}  // namespace nanresample
