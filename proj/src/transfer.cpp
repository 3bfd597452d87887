#include "thermal/transfer.hpp"

#include "thermal/csv.hpp"

#include <set>

namespace thermal::transfer {

DomainDataset DomainDataset::make(LabeledData data, Provenance provenance) {
    std::set<std::string> seen;
    for (const auto& n : data.feature_names) {
        if (!seen.insert(n).second) throw DataError("duplicate feature name '" + n + "'");
    }
    if (static_cast<std::size_t>(data.features.cols()) != data.feature_names.size() ||
        static_cast<std::size_t>(data.features.rows()) != data.labels.size()) {
        throw ShapeError("domain dataset shape does not match its labels and names");
    }
    return {std::move(data), provenance};
}

SourcePool SourcePool::parse(std::string_view text) {
    const std::string t = csv::to_lower(csv::trim(text));
    if (t == "all" || t == "all_hvac") return all();
    if (t.starts_with("zone:")) {
        if (auto z = parse_zone(std::string_view(t).substr(5))) return same_zone(*z);
    }
    throw InputError("bad source pool '" + std::string(text) + "' (expected all or zone:<A-E>)");
}

std::string SourcePool::describe() const {
    return zone ? std::string("zone:") + zone_letter(*zone) : std::string("all");
}

neural::TrainConfig default_source_config() {
    return {};
}

neural::TrainConfig default_fine_tune_config() {
    neural::TrainConfig c;
    c.early_stopping = true;
    return c;
}

void TransferPlan::validate() const {
    if (hidden_layers < 1) throw DataError("transfer needs at least one hidden layer");
    if (hidden_width < 1) throw DataError("hidden width must be positive");
    if (retained_index() >= hidden_layers) {
        throw DataError("retained layer " + std::to_string(retained_index()) + " is not a hidden layer");
    }
    source_train.validate();
    fine_tune.validate();
}

SourcePoolResult assemble_source_pool(const std::vector<ComfortRecord>& first,
                                      const std::vector<ComfortRecord>& second, const TransferPlan& plan) {
    const PoolFilter filter{Ventilation::hvac, plan.source_pool.zone};
    const auto shared = shared_source_features();
    auto complete = [&](const std::vector<ComfortRecord>& records) {
        std::vector<ComfortRecord> out;
        for (auto& r : filter_pool(records, filter)) {
            bool ok = true;
            for (Feature f : shared) ok = ok && r.value(f).has_value();
            if (ok) out.push_back(std::move(r));
        }
        return out;
    };
    SourcePoolResult result;
    result.records = complete(first);
    result.from_first = result.records.size();
    auto rest = complete(second);
    result.from_second = rest.size();
    result.records.insert(result.records.end(), rest.begin(), rest.end());
    if (result.records.empty()) {
        throw DataError("source pool '" + plan.source_pool.describe() + "' is empty after filtering");
    }
    result.pool = DomainDataset::make(assemble(result.records, shared), Provenance::source);
    return result;
}

PreparedTraining prepare_training(const LabeledData& raw, resampling::Synthesizer synthesizer, std::uint64_t seed,
                                  const resampling::GanConfig& gan) {
    PreparedTraining out{Standardizer::fit(raw.features, raw.feature_names, raw.tags), {}};
    const LabeledData standardized = out.standardizer.apply(raw);
    auto plan = resampling::make_plan(standardized.labels, synthesizer, seed);
    auto cfg = gan;
    cfg.seed = seed;
    out.resampled = resampling::resample(standardized, plan, cfg);
    return out;
}

SourceModel train_source(const DomainDataset& pool, const TransferPlan& plan) {
    plan.validate();
    if (pool.data.rows() == 0) throw DataError("empty source pool");
    auto prepared = prepare_training(pool.data, plan.resampler, plan.source_train.seed, plan.gan);
    const auto& train = prepared.resampled.data;

    std::vector<std::size_t> widths{train.cols()};
    for (std::size_t i = 0; i < plan.hidden_layers; ++i) widths.push_back(plan.hidden_width);
    widths.push_back(SensationClass::kCount);
    auto model = neural::init_model(widths, plan.source_train.seed, train.feature_names);
    auto trained = neural::train(std::move(model), train.features, train.labels, plan.source_train);

    SourceModel out;
    out.model = std::move(trained.model);
    out.standardizer = std::move(prepared.standardizer);
    out.loss_history = std::move(trained.loss_history);
    out.pool_rows = pool.data.rows();
    out.trained_rows = train.rows();
    out.warnings = std::move(prepared.resampled.warnings);
    return out;
}

FineTuneResult transfer_fine_tune(const neural::MlpModel& source, const DomainDataset& target,
                                  const TransferPlan& plan) {
    plan.validate();
    if (target.data.rows() == 0) throw DataError("empty target dataset");
    const std::size_t hidden = source.hidden_layer_count();
    if (hidden < 1) throw ShapeError("source model has no hidden layer");
    for (std::size_t i = 0; i < hidden; ++i) {
        if (source.layers[i].outputs() != plan.hidden_width) {
            throw ShapeError("source hidden layer " + std::to_string(i) + " has width " +
                             std::to_string(source.layers[i].outputs()) + ", expected " +
                             std::to_string(plan.hidden_width));
        }
    }
    const std::size_t retained = plan.retained_layer.value_or(hidden - 1);
    if (retained >= hidden) throw DataError("retained layer is not a hidden layer of the source model");

    LabeledData data = target.data;
    if (retained == 0) {
        // The retained weights read the input directly, so the columns must line up.
        data = data.select_columns(source.feature_names);
    }

    std::vector<std::size_t> widths{data.cols()};
    for (std::size_t i = 0; i < hidden; ++i) widths.push_back(plan.hidden_width);
    widths.push_back(SensationClass::kCount);
    auto model = neural::init_model(widths, plan.fine_tune.seed, data.feature_names);

    auto copy_layer = [&](std::size_t i) {
        model.layers[i].weights = source.layers[i].weights;
        model.layers[i].biases = source.layers[i].biases;
        model.layers[i].frozen = true;
    };
    copy_layer(retained);
    if (plan.retain_output) copy_layer(hidden);
    model.retained_layer = retained;
    model.retained_from = source.fingerprint();

    auto trained = neural::train(std::move(model), data.features, data.labels, plan.fine_tune);
    FineTuneResult out;
    out.model = std::move(trained.model);
    out.loss_history = std::move(trained.loss_history);
    out.stopped_early = trained.stopped_early;
    out.lower_layers_adapted = retained > 0;
    return out;
}

}  // namespace thermal::transfer
