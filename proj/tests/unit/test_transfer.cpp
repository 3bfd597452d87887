#include "thermal/synthetic.hpp"
#include "thermal/transfer.hpp"

#include <doctest.h>

#include <algorithm>

using namespace thermal;
using namespace thermal::transfer;

namespace {

synthetic::SyntheticScenario small_scenario(std::uint64_t seed) {
    synthetic::ScenarioSpec spec;
    spec.source_rows = 600;
    spec.target_rows = 120;
    return synthetic::generate_synthetic_scenario(spec, seed);
}

TransferPlan quick_plan() {
    TransferPlan plan;
    plan.hidden_width = 16;
    plan.source_train.max_epochs = 15;
    plan.source_train.seed = 3;
    plan.fine_tune.max_epochs = 15;
    plan.fine_tune.seed = 4;
    return plan;
}

DomainDataset target_data(const synthetic::SyntheticScenario& s) {
    const auto raw = assemble(s.target, FeatureSet::of(FeatureSetTag::Xc).members);
    auto prepared = prepare_training(raw, resampling::Synthesizer::interpolation, 9);
    return DomainDataset::make(prepared.resampled.data, Provenance::target);
}

}  // namespace

TEST_SUITE("transfer") {
    TEST_CASE("source pools") {
        const auto s = small_scenario(1);
        auto plan = quick_plan();
        const auto all = assemble_source_pool(s.source_first, s.source_second, plan);
        CHECK(all.pool.data.rows() == 600);
        CHECK(all.from_first + all.from_second == 600);
        CHECK(all.pool.data.cols() == 8);
        CHECK(all.pool.provenance == Provenance::source);

        plan.source_pool = SourcePool::same_zone(ClimateZone::C);
        const auto c = assemble_source_pool(s.source_first, s.source_second, plan);
        CHECK(c.pool.data.rows() == 150);
        CHECK(std::all_of(c.records.begin(), c.records.end(),
                          [](const auto& r) { return r.climate_zone == ClimateZone::C; }));

        plan.source_pool = SourcePool::same_zone(ClimateZone::E);
        CHECK_THROWS_AS(assemble_source_pool(s.source_first, s.source_second, plan), DataError);

        auto nv = s.source_first;
        for (auto& r : nv) r.ventilation = Ventilation::nv;
        plan.source_pool = SourcePool::all();
        CHECK(assemble_source_pool(nv, s.source_second, plan).from_first == 0);
    }

    TEST_CASE("pool descriptions parse back") {
        CHECK(SourcePool::parse("all") == SourcePool::all());
        CHECK(SourcePool::parse("zone:C") == SourcePool::same_zone(ClimateZone::C));
        CHECK(SourcePool::parse(SourcePool::same_zone(ClimateZone::B).describe()) ==
              SourcePool::same_zone(ClimateZone::B));
        CHECK_THROWS_AS(SourcePool::parse("zone:Q"), InputError);
    }

    TEST_CASE("retained layer is copied bit for bit and frozen") {
        const auto s = small_scenario(2);
        const auto plan = quick_plan();
        const auto pool = assemble_source_pool(s.source_first, s.source_second, plan);
        const auto source = train_source(pool.pool, plan);
        REQUIRE(source.model.hidden_layer_count() == 2);
        const auto target = target_data(s);
        const auto tuned = transfer_fine_tune(source.model, target, plan);

        CHECK(tuned.model.layers[1].weights == source.model.layers[1].weights);
        CHECK(tuned.model.layers[1].biases == source.model.layers[1].biases);
        CHECK(tuned.model.layers[1].frozen);
        CHECK_FALSE(tuned.model.layers[0].frozen);
        CHECK_FALSE(tuned.model.layers[2].frozen);
        CHECK(tuned.model.input_width() == 10);
        CHECK(tuned.model.retained_layer == std::size_t{1});
        CHECK(tuned.model.retained_from == source.model.fingerprint());
        CHECK(tuned.lower_layers_adapted);
        CHECK(tuned.model.layers[2].weights != source.model.layers[2].weights);

        auto keep = plan;
        keep.retain_output = true;
        const auto with_output = transfer_fine_tune(source.model, target, keep);
        CHECK(with_output.model.layers[2].weights == source.model.layers[2].weights);
        CHECK(with_output.model.layers[2].frozen);

        CHECK(transfer_fine_tune(source.model, target, plan).model.fingerprint() == tuned.model.fingerprint());
    }

    TEST_CASE("a single hidden layer retains the input layer") {
        const auto s = small_scenario(3);
        auto plan = quick_plan();
        plan.hidden_layers = 1;
        const auto pool = assemble_source_pool(s.source_first, s.source_second, plan);
        const auto source = train_source(pool.pool, plan);
        const auto tuned = transfer_fine_tune(source.model, target_data(s), plan);
        CHECK_FALSE(tuned.lower_layers_adapted);
        CHECK(tuned.model.feature_names == source.model.feature_names);
        CHECK(tuned.model.layers[0].weights == source.model.layers[0].weights);
    }

    TEST_CASE("shape and plan checks") {
        const auto s = small_scenario(4);
        auto plan = quick_plan();
        const auto pool = assemble_source_pool(s.source_first, s.source_second, plan);
        const auto source = train_source(pool.pool, plan);
        auto wide = plan;
        wide.hidden_width = 32;
        CHECK_THROWS_AS(transfer_fine_tune(source.model, target_data(s), wide), ShapeError);
        auto bad = plan;
        bad.retained_layer = 5;
        CHECK_THROWS(transfer_fine_tune(source.model, target_data(s), bad));

        LabeledData dup;
        dup.features = Matrix::Zero(1, 2);
        dup.labels = {SensationClass(0)};
        dup.feature_names = {"a", "a"};
        dup.tags = {{0, false}};
        CHECK_THROWS_AS(DomainDataset::make(dup, Provenance::target), DataError);
    }

    TEST_CASE("training preparation only sees the given rows") {
        const auto s = small_scenario(5);
        const auto raw = assemble(s.target, FeatureSet::of(FeatureSetTag::Xc).members);
        std::vector<std::size_t> half;
        for (std::size_t i = 0; i < raw.rows(); i += 2) half.push_back(i);
        const auto subset = raw.subset(half);
        const auto prepared = prepare_training(subset, resampling::Synthesizer::interpolation, 1);
        CHECK(prepared.standardizer.fit_rows() == subset.tags);
        for (const auto& t : prepared.resampled.inputs) CHECK(t.origin % 2 == 0);
    }
}
