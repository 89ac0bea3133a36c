#include "nanresample/random.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/special_functions/erf.hpp>

#include "nanresample/error.hpp"

namespace nanresample {

namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;
constexpr double kTwoPow53Inv = 1.0 / 9007199254740992.0;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) {
    const std::uint64_t product = static_cast<std::uint64_t>(a) * b;
    hi = static_cast<std::uint32_t>(product >> 32);
    lo = static_cast<std::uint32_t>(product);
}

}  // namespace

std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> ctr,
                                        std::array<std::uint32_t, 2> key) noexcept {
    for (int round = 0; round < 10; ++round) {
        if (round > 0) {
            key[0] += kWeyl0;
            key[1] += kWeyl1;
        }
        std::uint32_t hi0, lo0, hi1, lo1;
        mulhilo(kMul0, ctr[0], hi0, lo0);
        mulhilo(kMul1, ctr[2], hi1, lo1);
        ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    }
    return ctr;
}

RandomStream::RandomStream(const StreamKey& key)
    : key_{static_cast<std::uint32_t>(key.global_seed),
           static_cast<std::uint32_t>(key.global_seed >> 32)},
      stream_word_((static_cast<std::uint32_t>(key.method_tag) << 24) | key.class_ordinal),
      batch_word_(key.batch_index),
      used_(2) {}

std::uint64_t RandomStream::next_u64() noexcept {
    if (used_ == 2) {
        buffer_ = philox4x32({static_cast<std::uint32_t>(block_),
                              static_cast<std::uint32_t>(block_ >> 32), batch_word_, stream_word_},
                             key_);
        ++block_;
        used_ = 0;
    }
    const std::size_t base = static_cast<std::size_t>(used_) * 2;
    ++used_;
    return (static_cast<std::uint64_t>(buffer_[base + 1]) << 32) | buffer_[base];
}

double RandomStream::uniform() noexcept {
    return static_cast<double>(next_u64() >> 11) * kTwoPow53Inv;
}

double RandomStream::open_uniform() noexcept {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * kTwoPow53Inv;
}

double RandomStream::normal() {
    const double u = open_uniform();
    return -std::numbers::sqrt2 * boost::math::erfc_inv(2.0 * u);
}

std::size_t RandomStream::index(std::size_t n) noexcept {
    const auto i = static_cast<std::size_t>(uniform() * static_cast<double>(n));
    return std::min(i, n - 1);
}

RandomStream derive_stream(const StreamKey& key) {
    if (key.class_ordinal >= (1u << 24)) throw Error("too many classes for stream keying");
    return RandomStream(key);
}

}  // namespace nanresample
