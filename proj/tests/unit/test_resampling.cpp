#include "thermal/resampling.hpp"

#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

using namespace thermal;
using namespace thermal::resampling;

namespace {

SensationClass S(int v) { return SensationClass(v); }

LabeledData make_data(const std::vector<std::pair<int, std::size_t>>& counts, std::size_t cols, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> n(0.0, 1.0);
    LabeledData d;
    std::size_t total = 0;
    for (auto [c, k] : counts) total += k;
    d.features.resize(static_cast<Eigen::Index>(total), static_cast<Eigen::Index>(cols));
    for (std::size_t j = 0; j < cols; ++j) d.feature_names.push_back("f" + std::to_string(j));
    std::size_t r = 0;
    for (auto [c, k] : counts) {
        for (std::size_t i = 0; i < k; ++i, ++r) {
            for (std::size_t j = 0; j < cols; ++j) d.features(r, j) = c * 3.0 + n(rng);
            d.labels.push_back(S(c));
            d.tags.push_back({r * 10, false});
        }
    }
    return d;
}

}  // namespace

TEST_SUITE("resampling") {
    TEST_CASE("plan reproduces the published post-synthesis counts") {
        const auto plan = make_plan({{S(0), 981}, {S(-1), 416}, {S(1), 367}, {S(-2), 139}, {S(2), 118}});
        CHECK(plan.target.at(S(0)) == 981);
        CHECK(plan.target.at(S(-1)) == 624);
        CHECK(plan.target.at(S(1)) == 551);  // 550.5 rounded away from zero
        CHECK(plan.target.at(S(-2)) == 209);  // 208.5; the published 208 sits within one
        CHECK(plan.target.at(S(2)) == 177);
        CHECK(plan.deficit(S(0)) == 0);
        CHECK(plan.deficit(S(-1)) == 208);
        CHECK(plan.total_target() == 981 + 624 + 551 + 209 + 177);
    }

    TEST_CASE("plan caps at the majority and leaves balanced data alone") {
        const auto capped = make_plan({{S(0), 100}, {S(1), 80}});
        CHECK(capped.target.at(S(1)) == 100);
        const auto equal = make_plan({{S(-1), 50}, {S(0), 50}, {S(1), 50}});
        for (auto [c, n] : equal.target) CHECK(n == 50);
        CHECK_THROWS_AS(make_plan(std::map<SensationClass, std::size_t>{}), DataError);
        CHECK_THROWS_AS(make_plan({{S(0), 10}, {S(1), 0}}), DataError);
    }

    TEST_CASE("interpolated samples lie on the segment between neighbours") {
        LabeledData d;
        d.features.resize(2, 2);
        d.features << 0, 0, 1, 1;
        d.labels = {S(1), S(1)};
        d.feature_names = {"a", "b"};
        d.tags = {{0, false}, {1, false}};
        ResamplePlan plan;
        plan.current = {{S(1), 2}};
        plan.target = {{S(1), 3}};
        plan.seed = 3;
        const auto out = oversample_interpolation(d, plan);
        REQUIRE(out.data.rows() == 3);
        const double x = out.data.features(2, 0), y = out.data.features(2, 1);
        CHECK(x == doctest::Approx(y));
        CHECK(x >= 0.0);
        CHECK(x <= 1.0);
        CHECK(out.data.tags[2].synthetic);
    }

    TEST_CASE("counts match the plan and originals come first") {
        const auto d = make_data({{-2, 7}, {-1, 20}, {0, 60}, {1, 15}, {2, 1}}, 4, 5);
        const auto plan = make_plan(d.labels, Synthesizer::interpolation, 17);
        const auto out = resample(d, plan);
        const auto counts = class_counts(out.data.labels);
        for (auto c : kAllClasses) CHECK(counts[c.index()] == plan.target.at(c));
        CHECK(out.data.features.topRows(d.rows()) == d.features);
        for (std::size_t i = 0; i < d.rows(); ++i) CHECK(out.data.tags[i] == d.tags[i]);
        for (std::size_t i = d.rows(); i < out.data.rows(); ++i) CHECK(out.data.tags[i].synthetic);
        // the lone +2 row is duplicated
        const auto lone = d.features.row(d.rows() - 1);
        for (std::size_t i = d.rows(); i < out.data.rows(); ++i) {
            if (out.data.labels[i] == S(2)) CHECK(out.data.features.row(i) == lone);
        }
        // the synthesizer only saw the given rows
        std::set<std::size_t> given;
        for (const auto& t : d.tags) given.insert(t.origin);
        for (const auto& t : out.inputs) CHECK(given.count(t.origin) == 1);
    }

    TEST_CASE("identity plan and determinism") {
        const auto d = make_data({{0, 10}, {1, 10}}, 3, 2);
        const auto same = resample(d, make_plan(d.labels, Synthesizer::interpolation, 1));
        CHECK(same.data.features == d.features);
        CHECK(same.data.labels == d.labels);

        const auto u = make_data({{0, 30}, {1, 9}}, 3, 2);
        const auto a = resample(u, make_plan(u.labels, Synthesizer::interpolation, 8));
        const auto b = resample(u, make_plan(u.labels, Synthesizer::interpolation, 8));
        const auto c = resample(u, make_plan(u.labels, Synthesizer::interpolation, 9));
        CHECK(a.data.features == b.data.features);
        CHECK(a.data.features != c.data.features);
    }

    TEST_CASE("plan must match the data") {
        const auto d = make_data({{0, 10}, {1, 4}}, 2, 1);
        ResamplePlan plan = make_plan(d.labels);
        plan.target[S(2)] = 5;
        plan.current[S(2)] = 1;
        CHECK_THROWS_AS(resample(d, plan), DataError);
    }

    TEST_CASE("generator matches the moments of a Gaussian class") {
        std::mt19937_64 rng(99);
        std::normal_distribution<double> n(0.0, 1.0);
        Matrix real(500, 3);
        for (Eigen::Index i = 0; i < real.size(); ++i) real.data()[i] = n(rng);
        GanConfig cfg;
        cfg.seed = 4;
        const Matrix fake = train_and_sample_gan(real, 500, cfg);
        REQUIRE(fake.rows() == 500);
        for (Eigen::Index j = 0; j < 3; ++j) {
            const double mean = fake.col(j).mean();
            const double sd = std::sqrt((fake.col(j).array() - mean).square().mean());
            CAPTURE(j);
            CHECK(std::abs(mean) <= 0.3);
            CHECK(std::abs(sd - 1.0) <= 0.4);
        }
        CHECK(train_and_sample_gan(real, 20, cfg) == train_and_sample_gan(real, 20, cfg));
    }

    TEST_CASE("gan resampling honours the plan") {
        const auto d = make_data({{0, 60}, {1, 20}}, 3, 6);
        GanConfig cfg;
        cfg.epochs = 50;
        const auto plan = make_plan(d.labels, Synthesizer::gan, 2);
        const auto out = oversample_gan(d, plan, cfg);
        CHECK(out.data.rows() == 60 + 30);
        CHECK(out.synthesized == std::vector<SensationClass>{S(1)});

        const auto balanced = make_data({{0, 20}, {1, 20}}, 3, 6);
        const auto none = oversample_gan(balanced, make_plan(balanced.labels, Synthesizer::gan, 2), cfg);
        CHECK(none.synthesized.empty());
        CHECK(none.data.rows() == 40);

        GanConfig bad;
        bad.latent_dim = 0;
        CHECK_THROWS_AS(bad.validate(), TrainingError);
    }

    TEST_CASE("synthesizer names") {
        CHECK(parse_synthesizer("gan") == Synthesizer::gan);
        CHECK(parse_synthesizer("interpolation") == Synthesizer::interpolation);
        CHECK(parse_synthesizer("none") == Synthesizer::none);
        CHECK_FALSE(parse_synthesizer("smote2").has_value());
        CHECK(synthesizer_name(Synthesizer::gan) == "gan");
    }
}
