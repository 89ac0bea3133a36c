#include <doctest.h>

#include <cmath>
#include <vector>

#include "nanresample/error.hpp"
#include "nanresample/random.hpp"

using namespace nanresample;

TEST_CASE("philox4x32-10 known-answer vectors") {
    using C = std::array<std::uint32_t, 4>;
    using K = std::array<std::uint32_t, 2>;
    CHECK(philox4x32(C{0, 0, 0, 0}, K{0, 0}) == C{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
    CHECK(philox4x32(C{0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, K{0xffffffff, 0xffffffff}) ==
          C{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
    CHECK(philox4x32(C{0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, K{0xa4093822, 0x299f31d0}) ==
          C{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("derive_stream is a pure function of the key") {
    const StreamKey key{42, 1, 3, 7};
    auto a = derive_stream(key);
    auto b = derive_stream(key);
    for (int i = 0; i < 1000; ++i) CHECK(a.uniform() == b.uniform());
}

TEST_CASE("keys differing in one field give different sequences") {
    const StreamKey base{42, 1, 3, 7};
    auto first_draws = [](StreamKey key) {
        auto s = derive_stream(key);
        std::vector<double> v(16);
        for (auto& x : v) x = s.uniform();
        return v;
    };
    const auto ref = first_draws(base);
    CHECK(first_draws({42, 1, 3, 8}) != ref);
    CHECK(first_draws({42, 1, 4, 7}) != ref);
    CHECK(first_draws({42, 2, 3, 7}) != ref);
    CHECK(first_draws({43, 1, 3, 7}) != ref);
    CHECK(first_draws({42ull | (1ull << 40), 1, 3, 7}) != ref);
}

TEST_CASE("uniform draws stay in [0, 1) and open draws in (0, 1)") {
    auto s = derive_stream({1, 1, 0, 0});
    double sum = 0.0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
        const double u = s.uniform();
        CHECK_UNARY(u >= 0.0);
        CHECK_UNARY(u < 1.0);
        const double o = s.open_uniform();
        CHECK_UNARY(o > 0.0);
        CHECK_UNARY(o < 1.0);
        sum += u;
    }
    CHECK(sum / n == doctest::Approx(0.5).epsilon(0.01));
}

TEST_CASE("index covers its range uniformly") {
    auto s = derive_stream({9, 2, 1, 0});
    std::vector<int> hits(7, 0);
    const int n = 70000;
    for (int i = 0; i < n; ++i) {
        const auto j = s.index(7);
        REQUIRE(j < 7);
        ++hits[j];
    }
    for (int h : hits) CHECK(std::abs(h - n / 7) < 400);
    CHECK(s.index(1) == 0);
}

TEST_CASE("normal draws have unit moments") {
    auto s = derive_stream({5, 3, 0, 0});
    const int n = 200000;
    double sum = 0.0;
    double sq = 0.0;
    for (int i = 0; i < n; ++i) {
        const double z = s.normal();
        REQUIRE(std::isfinite(z));
        sum += z;
        sq += z * z;
    }
    const double mean = sum / n;
    CHECK(std::abs(mean) < 0.01);
    CHECK(sq / n - mean * mean == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("class ordinal must fit in 24 bits") {
    CHECK_THROWS_AS(derive_stream({0, 1, 1u << 24, 0}), Error);
}
