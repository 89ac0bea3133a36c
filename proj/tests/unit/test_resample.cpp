#include <doctest.h>

#include <tuple>

#include "../support/fixtures.hpp"
#include "nanresample/error.hpp"
#include "nanresample/resample.hpp"

using namespace nanresample;

namespace {

LabeledDataset basic_fixture(std::uint64_t seed = 2024) {
    return testing::make_fixture(
        {.class_sizes = {{0, 100}, {1, 20}}, .features = 10, .missing_rate = 0.2, .seed = seed});
}

SynthesisConfig config(Method method, std::uint64_t seed = 42) {
    SynthesisConfig c;
    c.method = method;
    c.seed = seed;
    return c;
}

}  // namespace

TEST_CASE("resample balances the 100/20 fixture") {
    const auto ds = basic_fixture();
    for (Method m : {Method::SmoteNan, Method::RoseNan}) {
        const auto r = resample(ds, config(m));
        CHECK(r.dataset.features.rows() == 200);
        CHECK(r.dataset.features.cols() == 10);
        const auto counts = class_counts(partition_by_class(r.dataset));
        CHECK(counts.at(ClassLabel(0)) == 100);
        CHECK(counts.at(ClassLabel(1)) == 100);
    }
    const auto ada = resample(ds, config(Method::AdasynNan));
    CHECK(std::abs(static_cast<long>(ada.dataset.features.rows()) - 200) <= 20);
}

TEST_CASE("originals come first and synthetic rows are ordered by class, batch, position") {
    const auto ds = testing::make_fixture(
        {.class_sizes = {{0, 150}, {1, 30}, {2, 12}}, .features = 5, .missing_rate = 0.25, .seed = 3});
    auto cfg = config(Method::SmoteNan);
    cfg.batch_size = 16;
    const auto r = resample(ds, cfg);
    REQUIRE(r.original_rows == ds.features.rows());
    for (std::size_t i = 0; i < ds.features.rows(); ++i) {
        CHECK(r.dataset.labels[i] == ds.labels[i]);
        for (std::size_t k = 0; k < 5; ++k) {
            CHECK(FeatureMatrix(1, 1, {r.dataset.features.at(i, k)})
                      .same_cells(FeatureMatrix(1, 1, {ds.features.at(i, k)})));
        }
    }
    REQUIRE(r.synthetic_rows() == r.dataset.features.rows() - ds.features.rows());
    for (std::size_t s = 1; s < r.provenance.size(); ++s) {
        const auto& a = r.provenance[s - 1];
        const auto& b = r.provenance[s];
        CHECK(std::tie(a.label, a.batch_index, a.within_batch) < std::tie(b.label, b.batch_index, b.within_batch));
        CHECK(b.within_batch < cfg.batch_size);
    }
    for (std::size_t s = 0; s < r.provenance.size(); ++s) {
        CHECK(r.dataset.labels[r.original_rows + s] == r.provenance[s].label);
    }
}

TEST_CASE("resample is deterministic and independent of jobs") {
    const auto ds = basic_fixture();
    for (Method m : {Method::SmoteNan, Method::AdasynNan, Method::RoseNan}) {
        for (NanStrategy strategy : {NanStrategy::PreservePattern, NanStrategy::RandomPattern}) {
            auto cfg = config(m);
            cfg.nan_strategy = strategy;
            cfg.batch_size = 8;
            const auto reference = resample(ds, cfg);
            for (std::size_t jobs : {1, 2, 4}) {
                cfg.jobs = jobs;
                const auto again = resample(ds, cfg);
                CHECK(again.dataset.features.same_cells(reference.dataset.features));
                CHECK(again.dataset.labels == reference.dataset.labels);
            }
        }
    }
}

TEST_CASE("changing the seed changes the synthetic rows") {
    const auto ds = basic_fixture();
    for (Method m : {Method::SmoteNan, Method::AdasynNan, Method::RoseNan}) {
        const auto a = resample(ds, config(m, 1));
        const auto b = resample(ds, config(m, 2));
        CHECK_FALSE(a.dataset.features.same_cells(b.dataset.features));
    }
}

TEST_CASE("resample error paths") {
    const auto single = LabeledDataset(FeatureMatrix::from_rows({{1}, {2}}), {ClassLabel(0), ClassLabel(0)});
    CHECK_THROWS_AS(resample(single, {}), Error);
    auto bad = config(Method::SmoteNan);
    bad.k = 0;
    CHECK_THROWS_AS(resample(basic_fixture(), bad), Error);
    auto ratio = config(Method::SmoteNan);
    ratio.strategy = sampling::Ratio{0.5};
    const auto three = testing::make_fixture({.class_sizes = {{0, 10}, {1, 5}, {2, 3}}, .features = 2, .seed = 1});
    CHECK_THROWS_WITH_AS(resample(three, ratio), "ratio strategy requires binary labels", Error);
}

TEST_CASE("column metadata survives resampling") {
    const LabeledDataset ds(FeatureMatrix::from_rows({{1, 2}, {2, 3}, {3, 4}, {9, 9}}),
                            {ClassLabel("a"), ClassLabel("a"), ClassLabel("a"), ClassLabel("b")},
                            std::vector<std::string>{"x", "y"}, "target", 1);
    const auto r = resample(ds, config(Method::RoseNan));
    CHECK(r.dataset.column_names == ds.column_names);
    CHECK(r.dataset.label_name == ds.label_name);
    CHECK(r.dataset.label_position == 1);
}
