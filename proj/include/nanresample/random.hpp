#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

namespace nanresample {

/// Philox4x32-10 block function (Salmon et al., SC'11).
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key) noexcept;

/// Identity of one substream. Distinct keys map to disjoint Philox counter
/// ranges, so their draws never overlap.
struct StreamKey {
    std::uint64_t global_seed = 0;
    std::uint8_t method_tag = 0;
    std::uint32_t class_ordinal = 0;  // < 2^24
    std::uint32_t batch_index = 0;

    bool operator==(const StreamKey&) const = default;
};

/// Sequential draws from one counter-based substream. Copying a stream forks
/// it at the current position.
class RandomStream {
public:
    explicit RandomStream(const StreamKey& key);

    /// Uniform on [0, 1) with 53 bits of resolution.
    double uniform() noexcept;
    /// Uniform on (0, 1); never returns an endpoint.
    double open_uniform() noexcept;
    /// Standard normal via the inverse CDF of one open_uniform() draw.
    double normal();
    /// Uniform integer in [0, n). n must be positive.
    std::size_t index(std::size_t n) noexcept;

    std::uint64_t next_u64() noexcept;

private:
    std::array<std::uint32_t, 2> key_;
    std::uint32_t stream_word_;
    std::uint32_t batch_word_;
    std::uint64_t block_ = 0;
    std::array<std::uint32_t, 4> buffer_{};
    int used_;  // 64-bit words consumed from buffer_, two per block
};

/// Pure function of the key; equal keys give identical draw sequences.
/// Throws Error if class_ordinal does not fit in 24 bits.
RandomStream derive_stream(const StreamKey& key);

}  // namespace nanresample
