#include "thermal/csv.hpp"
#include "thermal/dataset.hpp"
#include "thermal/evaluation.hpp"
#include "thermal/manifest.hpp"
#include "thermal/pmv.hpp"
#include "thermal/synthetic.hpp"
#include "thermal/transfer.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace thermal;
namespace fs = std::filesystem;

namespace {

struct Common {
    std::string out_dir;
    std::size_t jobs = 1;
    std::string zones_file;
};

struct Input {
    std::string path;
    std::string map;
};

struct LoadedInput {
    std::vector<ComfortRecord> records;
    std::size_t raw_rows = 0;
    std::size_t dropped = 0;
    std::size_t unknown_cities = 0;
};

CityZoneTable zone_table(const Common& c) {
    return c.zones_file.empty() ? CityZoneTable::builtin() : CityZoneTable::load(c.zones_file);
}

LoadedInput load_input(const Input& in, std::string_view id, const CityZoneTable& zones) {
    const auto mapping = in.map.empty() ? ColumnMapping::canonical() : ColumnMapping::load(in.map);
    auto loaded = load_dataset(in.path, mapping, id);
    auto enriched = enrich_climate(std::move(loaded.records), zones);
    return {std::move(enriched.records), loaded.raw_rows, loaded.dropped.size(), enriched.unknown_cities};
}

fs::path prepare_out(const Common& c) {
    fs::path dir = c.out_dir;
    if (dir.empty()) {
        const char* env = std::getenv("THERMAL_OUT_DIR");
        dir = env && *env ? env : "out";
    }
    fs::create_directories(dir);
    return dir;
}

template <typename Fn>
void write_file(const fs::path& path, Fn&& fn) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path.string());
    fn(out);
    if (!out) throw InputError("write failed: " + path.string());
}

void add_input(CLI::App* cmd, Input& in, const std::string& name, const std::string& what, bool required) {
    auto* opt = cmd->add_option("--" + name, in.path, what);
    if (required) opt->required();
    cmd->add_option("--" + name + "-map", in.map, "Column mapping for --" + name);
}

void record_input(manifest::RunManifest& m, const std::string& name, const Input& in, const LoadedInput& loaded) {
    m.dataset(name, in.path, loaded.records.size());
    m.flag(name, in.path);
    if (!in.map.empty()) m.flag(name + "-map", in.map);
    m.count(name + ".raw_rows", loaded.raw_rows);
    m.count(name + ".dropped", loaded.dropped);
    m.count(name + ".unknown_cities", loaded.unknown_cities);
}

struct TrainFlags {
    double lr = 0.001;
    std::size_t batch = 200;
    std::size_t epochs = 500;
    std::size_t hidden_layers = 2;
    std::size_t hidden_width = 64;
    std::string resampler = "interp";
    bool retain_output = false;
    bool no_early_stop = false;

    void add(CLI::App* cmd) {
        cmd->add_option("--lr", lr, "Adam learning rate")->capture_default_str();
        cmd->add_option("--batch", batch, "Mini-batch size")->capture_default_str();
        cmd->add_option("--epochs", epochs, "Training epochs")->capture_default_str();
        cmd->add_option("--hidden-layers", hidden_layers, "Hidden layers")->capture_default_str();
        cmd->add_option("--hidden-width", hidden_width, "Units per hidden layer")->capture_default_str();
        cmd->add_option("--resampler", resampler, "none, interp or gan")->capture_default_str();
        cmd->add_flag("--retain-output", retain_output, "Also copy and freeze the source output layer");
        cmd->add_flag("--no-early-stop", no_early_stop, "Fine-tune for the full epoch budget");
    }

    resampling::Synthesizer synthesizer() const {
        auto s = resampling::parse_synthesizer(resampler);
        if (!s) throw InputError("unknown resampler '" + resampler + "'");
        return *s;
    }

    neural::TrainConfig config(std::uint64_t seed) const {
        neural::TrainConfig c;
        c.learning_rate = lr;
        c.batch_size = batch;
        c.max_epochs = epochs;
        c.seed = seed;
        try {
            c.validate();
        } catch (const TrainingError& e) {
            throw InputError(e.what());
        }
        return c;
    }

    transfer::TransferPlan plan(std::uint64_t seed) const {
        transfer::TransferPlan p;
        p.hidden_layers = hidden_layers;
        p.hidden_width = hidden_width;
        p.retain_output = retain_output;
        p.source_train = config(seed);
        p.fine_tune = config(seed);
        p.fine_tune.early_stopping = !no_early_stop;
        p.resampler = synthesizer();
        p.gan.seed = seed;
        p.validate();
        return p;
    }

    void record(manifest::RunManifest& m) const {
        m.flag("lr", csv::format_double(lr));
        m.flag("batch", std::to_string(batch));
        m.flag("epochs", std::to_string(epochs));
        m.flag("hidden-layers", std::to_string(hidden_layers));
        m.flag("hidden-width", std::to_string(hidden_width));
        m.flag("resampler", std::string(resampling::synthesizer_name(synthesizer())));
        m.flag("retain-output", retain_output ? "true" : "false");
        m.flag("early-stop", no_early_stop ? "false" : "true");
    }
};

struct Sources {
    Input a, s;
    std::string model_path;

    void add(CLI::App* cmd) {
        add_input(cmd, a, "source-a", "First source dataset (canonical CSV unless mapped)", false);
        add_input(cmd, s, "source-s", "Second source dataset", false);
        cmd->add_option("--source-model", model_path, "Pre-trained source model (skips source training)");
    }
};

// Loads or trains the source model for a pool, recording what it did.
std::shared_ptr<const neural::MlpModel> source_model(const Sources& src, const transfer::TransferPlan& plan,
                                                     const CityZoneTable& zones, manifest::RunManifest& m,
                                                     const std::string& tag) {
    if (!src.model_path.empty()) {
        m.flag("source-model", src.model_path);
        m.dataset("source-model", src.model_path, 0);
        return std::make_shared<const neural::MlpModel>(neural::load_model(src.model_path));
    }
    if (src.a.path.empty() && src.s.path.empty()) {
        throw InputError("transfer models need --source-a/--source-s or --source-model");
    }
    std::vector<ComfortRecord> a, s;
    if (!src.a.path.empty()) {
        auto loaded = load_input(src.a, "source-a", zones);
        record_input(m, "source-a", src.a, loaded);
        a = std::move(loaded.records);
    }
    if (!src.s.path.empty()) {
        auto loaded = load_input(src.s, "source-s", zones);
        record_input(m, "source-s", src.s, loaded);
        s = std::move(loaded.records);
    }
    auto pool = transfer::assemble_source_pool(a, s, plan);
    m.count(tag + ".pool_rows", pool.pool.data.rows());
    m.count(tag + ".pool_rows_a", pool.from_first);
    m.count(tag + ".pool_rows_s", pool.from_second);
    auto trained = transfer::train_source(pool.pool, plan);
    m.count(tag + ".trained_rows", trained.trained_rows);
    m.flag(tag + ".final_loss", csv::format_double(trained.loss_history.back()));
    for (const auto& w : trained.warnings) m.note(tag + ": " + w);
    return std::make_shared<const neural::MlpModel>(std::move(trained.model));
}

FeatureSet feature_set(const std::string& text) {
    auto tag = parse_feature_set(text);
    if (!tag) throw InputError("unknown feature set '" + text + "' (expected Xa, Xb or Xc)");
    return FeatureSet::of(*tag);
}

ClimateZone zone_flag(const std::string& text) {
    auto z = parse_zone(text);
    if (!z) throw InputError("unknown climate zone '" + text + "'");
    return *z;
}

void write_manifest(const fs::path& dir, const manifest::RunManifest& m, const manifest::Timing& t) {
    m.write(dir / "manifest.json");
    t.write(dir / "timing.json");
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream s(text);
    std::string item;
    while (std::getline(s, item, ',')) {
        item = csv::trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

struct EvalFlags {
    std::string feature_set = "Xc";
    std::size_t k = 10;
    std::uint64_t seed = 42;
    bool stratified = false;
    std::string zone = "C";
    std::size_t knn_k = 5;
    std::size_t trees = 100;

    void add(CLI::App* cmd) {
        cmd->add_option("--feature-set", feature_set, "Xa, Xb or Xc")->capture_default_str();
        cmd->add_option("--k", k, "Cross-validation folds")->capture_default_str();
        cmd->add_option("--seed", seed, "Master seed")->capture_default_str();
        cmd->add_flag("--stratified", stratified, "Stratify folds by class");
        cmd->add_option("--zone", zone, "Climate zone for tl-mlp-c")->capture_default_str();
        cmd->add_option("--knn-k", knn_k, "Neighbours for knn")->capture_default_str();
        cmd->add_option("--trees", trees, "Trees for forest")->capture_default_str();
    }

    void record(manifest::RunManifest& m) const {
        m.flag("feature-set", feature_set);
        m.flag("k", std::to_string(k));
        m.flag("stratified", stratified ? "true" : "false");
        m.flag("zone", zone);
        m.flag("knn-k", std::to_string(knn_k));
        m.flag("trees", std::to_string(trees));
        m.seed("master", seed);
    }
};

evaluation::AlgorithmSpec algorithm_spec(evaluation::Algorithm a, const TrainFlags& tf, const EvalFlags& ef,
                                         std::size_t jobs) {
    evaluation::AlgorithmSpec spec;
    spec.algorithm = a;
    spec.train = tf.config(ef.seed);
    spec.hidden.assign(tf.hidden_layers, tf.hidden_width);
    spec.knn_k = ef.knn_k;
    spec.forest.n_trees = ef.trees;
    spec.forest.jobs = jobs;
    spec.plan = tf.plan(ef.seed);
    return spec;
}

// Attaches the source model the algorithm needs, training it when necessary.
void attach_source(evaluation::AlgorithmSpec& spec, const Sources& src, const TrainFlags& tf, const EvalFlags& ef,
                   const CityZoneTable& zones, manifest::RunManifest& m) {
    if (!evaluation::is_transfer(spec.algorithm)) return;
    auto plan = tf.plan(ef.seed);
    if (spec.algorithm == evaluation::Algorithm::tl_mlp_c) plan.source_pool = transfer::SourcePool::same_zone(zone_flag(ef.zone));
    m.seed("source", plan.source_train.seed);
    spec.source_model = source_model(src, plan, zones, m, std::string(evaluation::algorithm_name(spec.algorithm)));
}

evaluation::CvOptions cv_options(const TrainFlags& tf, const EvalFlags& ef, std::size_t jobs) {
    evaluation::CvOptions o;
    o.resampler = tf.synthesizer();
    o.k = ef.k;
    o.seed = ef.seed;
    o.stratified = ef.stratified;
    o.jobs = jobs;
    return o;
}

int run(int argc, char** argv) {
    CLI::App app{"Thermal sensation modelling with transfer learning"};
    app.require_subcommand(1);
    app.fallthrough();
    Common common;
    app.add_option("--out", common.out_dir, "Output directory (default $THERMAL_OUT_DIR or ./out)");
    app.add_option("--jobs", common.jobs, "Worker threads for folds and trees")->check(CLI::PositiveNumber);
    app.add_option("--zones", common.zones_file, "City to climate-zone table");

    // ingest
    auto* ingest = app.add_subcommand("ingest", "Load a raw survey CSV into canonical records");
    Input ingest_in;
    std::string dataset_id = "dataset";
    add_input(ingest, ingest_in, "input", "Raw survey CSV", true);
    ingest->add_option("--dataset-id", dataset_id, "Identifier stored on every record");

    // summarize
    auto* summarize = app.add_subcommand("summarize", "Class counts and feature quartiles");
    Input summarize_in;
    add_input(summarize, summarize_in, "input", "Canonical or mapped CSV", true);

    // pmv
    auto* pmv_cmd = app.add_subcommand("pmv", "Heat-balance score for one condition or a whole file");
    pmv::PmvInput point{};
    Input pmv_in;
    pmv_cmd->add_option("--ta", point.ta, "Air temperature, C");
    pmv_cmd->add_option("--tr", point.tr, "Mean radiant temperature, C");
    pmv_cmd->add_option("--vel", point.vel, "Air velocity, m/s");
    pmv_cmd->add_option("--rh", point.rh, "Relative humidity, %");
    pmv_cmd->add_option("--met", point.met, "Metabolic rate, met");
    pmv_cmd->add_option("--clo", point.clo, "Clothing insulation, clo");
    add_input(pmv_cmd, pmv_in, "input", "Score every complete record of this CSV instead", false);

    // train-source
    auto* train_source = app.add_subcommand("train-source", "Train the source model on pooled HVAC data");
    Sources ts_src;
    TrainFlags ts_train;
    std::string pool_text = "all";
    std::uint64_t ts_seed = 42;
    ts_src.add(train_source);
    ts_train.add(train_source);
    train_source->add_option("--pool", pool_text, "all or zone:<A-E>")->capture_default_str();
    train_source->add_option("--seed", ts_seed, "Seed")->capture_default_str();

    // transfer
    auto* transfer_cmd = app.add_subcommand("transfer", "Fine-tune a source model on the target dataset");
    Sources tr_src;
    Input tr_target;
    TrainFlags tr_train;
    std::string tr_features = "Xc";
    std::uint64_t tr_seed = 42;
    transfer_cmd->add_option("--source-model", tr_src.model_path, "Source model file")->required();
    add_input(transfer_cmd, tr_target, "target", "Target dataset", true);
    tr_train.add(transfer_cmd);
    transfer_cmd->add_option("--feature-set", tr_features, "Xa, Xb or Xc")->capture_default_str();
    transfer_cmd->add_option("--seed", tr_seed, "Seed")->capture_default_str();

    // evaluate
    auto* evaluate = app.add_subcommand("evaluate", "Cross-validate one algorithm on the target dataset");
    Sources ev_src;
    Input ev_target;
    TrainFlags ev_train;
    EvalFlags ev_flags;
    std::string ev_model = "tl-mlp-c";
    evaluate->add_option("--model", ev_model, "random, knn, nb, tree, forest, pmv, mlp, tl-mlp or tl-mlp-c")
        ->capture_default_str();
    add_input(evaluate, ev_target, "target", "Target dataset", true);
    ev_src.add(evaluate);
    ev_train.add(evaluate);
    ev_flags.add(evaluate);

    // ablation
    auto* ablation = app.add_subcommand("ablation", "Every algorithm on feature sets Xa, Xb and Xc");
    Sources ab_src;
    Input ab_target;
    TrainFlags ab_train;
    EvalFlags ab_flags;
    std::string ab_models = "random,knn,nb,tree,forest,mlp,tl-mlp,tl-mlp-c";
    ablation->add_option("--models", ab_models, "Comma-separated algorithms")->capture_default_str();
    add_input(ablation, ab_target, "target", "Target dataset", true);
    ab_src.add(ablation);
    ab_train.add(ablation);
    ab_flags.add(ablation);

    // sweep
    auto* sweep = app.add_subcommand("sweep", "Transfer model accuracy against hidden-layer count");
    Sources sw_src;
    Input sw_target;
    TrainFlags sw_train;
    EvalFlags sw_flags;
    std::string depths_text = "1,2,3,4";
    sweep->add_option("--depths", depths_text, "Comma-separated hidden-layer counts")->capture_default_str();
    add_input(sweep, sw_target, "target", "Target dataset", true);
    add_input(sweep, sw_src.a, "source-a", "First source dataset", false);
    add_input(sweep, sw_src.s, "source-s", "Second source dataset", false);
    sw_train.add(sweep);
    sw_flags.add(sweep);

    // synth
    auto* synth = app.add_subcommand("synth", "Write the synthetic transfer scenario as canonical CSVs");
    synthetic::ScenarioSpec synth_spec;
    std::uint64_t synth_seed = 42;
    synth->add_option("--seed", synth_seed, "Seed")->capture_default_str();
    synth->add_option("--source-rows", synth_spec.source_rows, "Source rows")->capture_default_str();
    synth->add_option("--target-rows", synth_spec.target_rows, "Target rows")->capture_default_str();
    synth->add_option("--label-noise", synth_spec.label_noise, "Label noise probability")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    manifest::Timing timing;
    timing.start("total");

    if (*ingest) {
        const auto out = prepare_out(common);
        manifest::RunManifest m("ingest");
        const auto mapping = ingest_in.map.empty() ? ColumnMapping::canonical() : ColumnMapping::load(ingest_in.map);
        auto loaded = load_dataset(ingest_in.path, mapping, dataset_id);
        auto enriched = enrich_climate(std::move(loaded.records), zone_table(common));
        write_file(out / "records.csv", [&](std::ostream& o) { write_records(o, enriched.records); });
        write_file(out / "dropped.csv", [&](std::ostream& o) {
            csv::write_row(o, {"line", "reason", "detail"});
            for (const auto& d : loaded.dropped) {
                csv::write_row(o, {std::to_string(d.line), std::string(drop_reason_name(d.reason)), d.detail});
            }
        });
        m.dataset("input", ingest_in.path, enriched.records.size());
        m.flag("input", ingest_in.path);
        if (!ingest_in.map.empty()) m.flag("input-map", ingest_in.map);
        m.flag("dataset-id", dataset_id);
        m.count("raw_rows", loaded.raw_rows);
        m.count("records", enriched.records.size());
        m.count("dropped", loaded.dropped.size());
        m.count("unknown_cities", enriched.unknown_cities);
        for (const auto& c : enriched.unknown_city_names) m.note("unknown city: " + c);
        m.artifact("records", "records.csv");
        m.artifact("dropped", "dropped.csv");
        timing.stop("total");
        write_manifest(out, m, timing);
        std::cout << enriched.records.size() << " records, " << loaded.dropped.size() << " dropped, "
                  << enriched.unknown_cities << " with unknown city\n";
        return 0;
    }

    if (*summarize) {
        const auto out = prepare_out(common);
        manifest::RunManifest m("summarize");
        auto loaded = load_input(summarize_in, "input", zone_table(common));
        record_input(m, "input", summarize_in, loaded);
        write_file(out / "summary.csv",
                   [&](std::ostream& o) { write_summary_csv(o, summarize_dataset(loaded.records)); });
        m.artifact("summary", "summary.csv");
        timing.stop("total");
        write_manifest(out, m, timing);
        write_summary_csv(std::cout, summarize_dataset(loaded.records));
        return 0;
    }

    if (*pmv_cmd) {
        const auto out = prepare_out(common);
        manifest::RunManifest m("pmv");
        if (!pmv_in.path.empty()) {
            auto loaded = load_input(pmv_in, "input", zone_table(common));
            record_input(m, "input", pmv_in, loaded);
            const auto data = assemble(loaded.records, pmv_features());
            const auto labels = pmv::pmv_baseline_predict(data.features, data.feature_names);
            write_file(out / "pmv.csv", [&](std::ostream& o) {
                csv::write_row(o, {"record", "pmv", "class", "vote_class"});
                for (std::size_t i = 0; i < data.rows(); ++i) {
                    const auto& r = loaded.records[data.tags[i].origin];
                    const auto score = pmv::compute_pmv({*r.indoor_at, *r.indoor_mrt, *r.indoor_av, *r.indoor_rh,
                                                         *r.met, *r.clo});
                    csv::write_row(o, {std::to_string(data.tags[i].origin), csv::format_fixed(score.value, 4),
                                       std::to_string(labels[i].value()), std::to_string(data.labels[i].value())});
                }
            });
            m.count("scored", data.rows());
            m.artifact("scores", "pmv.csv");
            std::cout << data.rows() << " records scored\n";
        } else {
            for (const char* name : {"--ta", "--tr", "--vel", "--rh", "--met", "--clo"}) {
                if (pmv_cmd->count(name) == 0) throw InputError(std::string("pmv needs ") + name + " or --input");
            }
            const auto score = pmv::compute_pmv(point);
            const auto cls = pmv::pmv_class(score.value);
            for (auto [k, v] : {std::pair{"ta", point.ta}, {"tr", point.tr}, {"vel", point.vel}, {"rh", point.rh},
                                {"met", point.met}, {"clo", point.clo}}) {
                m.flag(k, csv::format_double(v));
            }
            m.flag("result.pmv", csv::format_fixed(score.value, 4));
            m.flag("result.class", std::to_string(cls.value()));
            std::cout << "pmv=" << csv::format_fixed(score.value, 2) << " class=" << cls.value() << '\n';
        }
        timing.stop("total");
        write_manifest(out, m, timing);
        return 0;
    }

    if (*train_source) {
        const auto out = prepare_out(common);
        manifest::RunManifest m("train-source");
        auto plan = ts_train.plan(ts_seed);
        plan.source_pool = transfer::SourcePool::parse(pool_text);
        ts_train.record(m);
        m.flag("pool", plan.source_pool.describe());
        m.seed("source", ts_seed);
        const auto zones = zone_table(common);
        std::vector<ComfortRecord> a, s;
        if (ts_src.a.path.empty() && ts_src.s.path.empty()) throw InputError("train-source needs --source-a or --source-s");
        if (!ts_src.a.path.empty()) {
            auto loaded = load_input(ts_src.a, "source-a", zones);
            record_input(m, "source-a", ts_src.a, loaded);
            a = std::move(loaded.records);
        }
        if (!ts_src.s.path.empty()) {
            auto loaded = load_input(ts_src.s, "source-s", zones);
            record_input(m, "source-s", ts_src.s, loaded);
            s = std::move(loaded.records);
        }
        auto pool = transfer::assemble_source_pool(a, s, plan);
        timing.start("train");
        auto trained = transfer::train_source(pool.pool, plan);
        timing.stop("train");
        neural::save_model(trained.model, out / "source_model.bin");
        write_file(out / "source_loss.csv", [&](std::ostream& o) {
            csv::write_row(o, {"epoch", "loss"});
            for (std::size_t e = 0; e < trained.loss_history.size(); ++e) {
                csv::write_row(o, {std::to_string(e + 1), csv::format_double(trained.loss_history[e])});
            }
        });
        m.count("pool_rows", pool.pool.data.rows());
        m.count("pool_rows_a", pool.from_first);
        m.count("pool_rows_s", pool.from_second);
        m.count("trained_rows", trained.trained_rows);
        m.count("epochs_run", trained.loss_history.size());
        m.flag("final_loss", csv::format_double(trained.loss_history.back()));
        m.flag("model_fingerprint", manifest::hex64(trained.model.fingerprint()));
        for (const auto& w : trained.warnings) m.note(w);
        m.artifact("model", "source_model.bin");
        m.artifact("loss", "source_loss.csv");
        timing.stop("total");
        write_manifest(out, m, timing);
        std::cout << "source model on " << pool.pool.data.rows() << " rows, final loss "
                  << csv::format_fixed(trained.loss_history.back(), 4) << '\n';
        return 0;
    }

    if (*transfer_cmd) {
        const auto out = prepare_out(common);
        manifest::RunManifest m("transfer");
        const auto plan = tr_train.plan(tr_seed);
        tr_train.record(m);
        m.seed("fine_tune", tr_seed);
        m.flag("feature-set", tr_features);
        m.flag("source-model", tr_src.model_path);
        m.dataset("source-model", tr_src.model_path, 0);
        const auto source = neural::load_model(tr_src.model_path);
        auto loaded = load_input(tr_target, "target", zone_table(common));
        record_input(m, "target", tr_target, loaded);
        const auto data = assemble(loaded.records, feature_set(tr_features).members);
        auto prepared = transfer::prepare_training(data, plan.resampler, tr_seed, plan.gan);
        auto tuned = transfer::transfer_fine_tune(
            source, transfer::DomainDataset::make(prepared.resampled.data, transfer::Provenance::target), plan);
        neural::save_model(tuned.model, out / "target_model.bin");
        m.count("target_rows", data.rows());
        m.count("trained_rows", prepared.resampled.data.rows());
        m.count("epochs_run", tuned.loss_history.size());
        m.flag("final_loss", csv::format_double(tuned.loss_history.back()));
        m.flag("retained_layer", std::to_string(*tuned.model.retained_layer));
        m.flag("retained_from", manifest::hex64(tuned.model.retained_from));
        if (!tuned.lower_layers_adapted) m.note("no lower layers adapted");
        m.artifact("model", "target_model.bin");
        timing.stop("total");
        write_manifest(out, m, timing);
        std::cout << "fine-tuned on " << data.rows() << " rows, " << tuned.loss_history.size() << " epochs\n";
        return 0;
    }

    if (*evaluate) {
        const auto out = prepare_out(common);
        manifest::RunManifest m("evaluate");
        const auto algorithm = evaluation::parse_algorithm(ev_model);
        if (!algorithm) throw InputError("unknown model '" + ev_model + "'");
        m.flag("model", std::string(evaluation::algorithm_name(*algorithm)));
        ev_train.record(m);
        ev_flags.record(m);
        const auto zones = zone_table(common);
        auto spec = algorithm_spec(*algorithm, ev_train, ev_flags, common.jobs);
        attach_source(spec, ev_src, ev_train, ev_flags, zones, m);
        auto loaded = load_input(ev_target, "target", zones);
        record_input(m, "target", ev_target, loaded);
        timing.start("cv");
        const auto report =
            evaluation::run_cv(spec, loaded.records, feature_set(ev_flags.feature_set), cv_options(ev_train, ev_flags, common.jobs));
        timing.stop("cv");
        write_file(out / "report.csv", [&](std::ostream& o) { evaluation::write_report_csv(o, report); });
        write_file(out / "confusion.csv", [&](std::ostream& o) { evaluation::write_confusion_csv(o, report); });
        write_file(out / "confusion_long.csv",
                   [&](std::ostream& o) { evaluation::write_confusion_long_csv(o, report); });
        m.count("rows_used", report.rows_used);
        for (const auto& n : report.notes) m.note(n);
        m.note("stddev is the population standard deviation over folds");
        m.artifact("report", "report.csv");
        m.artifact("confusion", "confusion.csv");
        m.artifact("confusion_long", "confusion_long.csv");
        timing.stop("total");
        write_manifest(out, m, timing);
        std::cout << report.algorithm << " " << report.feature_set << ": accuracy "
                  << csv::format_fixed(report.accuracy.mean, 2) << " (" << csv::format_fixed(report.accuracy.stddev, 2)
                  << "), weighted F1 " << csv::format_fixed(report.weighted_f1.mean, 2) << " ("
                  << csv::format_fixed(report.weighted_f1.stddev, 2) << ")\n";
        return 0;
    }

    if (*ablation) {
        const auto out = prepare_out(common);
        manifest::RunManifest m("ablation");
        m.flag("models", ab_models);
        ab_train.record(m);
        ab_flags.record(m);
        const auto zones = zone_table(common);
        std::vector<evaluation::AlgorithmSpec> specs;
        for (const auto& name : split_list(ab_models)) {
            auto a = evaluation::parse_algorithm(name);
            if (!a) throw InputError("unknown model '" + name + "'");
            specs.push_back(algorithm_spec(*a, ab_train, ab_flags, common.jobs));
            attach_source(specs.back(), ab_src, ab_train, ab_flags, zones, m);
        }
        auto loaded = load_input(ab_target, "target", zones);
        record_input(m, "target", ab_target, loaded);
        const auto rows = evaluation::run_feature_ablation(loaded.records, specs, cv_options(ab_train, ab_flags, common.jobs));
        write_file(out / "ablation.csv", [&](std::ostream& o) { evaluation::write_summary_csv(o, rows, "feature_set"); });
        m.artifact("ablation", "ablation.csv");
        timing.stop("total");
        write_manifest(out, m, timing);
        evaluation::write_summary_csv(std::cout, rows, "feature_set");
        return 0;
    }

    if (*sweep) {
        const auto out = prepare_out(common);
        manifest::RunManifest m("sweep");
        m.flag("depths", depths_text);
        sw_train.record(m);
        sw_flags.record(m);
        const auto zones = zone_table(common);
        std::vector<std::size_t> depths;
        for (const auto& d : split_list(depths_text)) {
            auto v = csv::parse_double(d);
            if (!v || *v < 1 || *v != std::floor(*v)) throw InputError("bad depth '" + d + "'");
            depths.push_back(static_cast<std::size_t>(*v));
        }
        std::vector<ComfortRecord> a, s;
        if (!sw_src.a.path.empty()) {
            auto loaded = load_input(sw_src.a, "source-a", zones);
            record_input(m, "source-a", sw_src.a, loaded);
            a = std::move(loaded.records);
        }
        if (!sw_src.s.path.empty()) {
            auto loaded = load_input(sw_src.s, "source-s", zones);
            record_input(m, "source-s", sw_src.s, loaded);
            s = std::move(loaded.records);
        }
        if (a.empty() && s.empty()) throw InputError("sweep needs --source-a or --source-s");
        auto plan = sw_train.plan(sw_flags.seed);
        plan.source_pool = transfer::SourcePool::same_zone(zone_flag(sw_flags.zone));
        const auto pool = transfer::assemble_source_pool(a, s, plan);
        m.count("pool_rows", pool.pool.data.rows());
        m.seed("source", sw_flags.seed);
        auto factory = [&](std::size_t depth) {
            auto p = plan;
            p.hidden_layers = depth;
            auto trained = transfer::train_source(pool.pool, p);
            m.flag("depth" + std::to_string(depth) + ".final_loss", csv::format_double(trained.loss_history.back()));
            return std::make_shared<const neural::MlpModel>(std::move(trained.model));
        };
        auto base = algorithm_spec(evaluation::Algorithm::tl_mlp_c, sw_train, sw_flags, common.jobs);
        auto loaded = load_input(sw_target, "target", zones);
        record_input(m, "target", sw_target, loaded);
        const auto rows = evaluation::run_hidden_layer_sweep(loaded.records, depths, factory, base,
                                                              feature_set(sw_flags.feature_set),
                                                              cv_options(sw_train, sw_flags, common.jobs));
        write_file(out / "sweep.csv", [&](std::ostream& o) { evaluation::write_summary_csv(o, rows, "hidden_layers"); });
        m.artifact("sweep", "sweep.csv");
        timing.stop("total");
        write_manifest(out, m, timing);
        evaluation::write_summary_csv(std::cout, rows, "hidden_layers");
        return 0;
    }

    if (*synth) {
        const auto out = prepare_out(common);
        manifest::RunManifest m("synth");
        const auto scenario = synthetic::generate_synthetic_scenario(synth_spec, synth_seed);
        write_file(out / "source_a.csv", [&](std::ostream& o) { write_records(o, scenario.source_first); });
        write_file(out / "source_s.csv", [&](std::ostream& o) { write_records(o, scenario.source_second); });
        write_file(out / "target.csv", [&](std::ostream& o) { write_records(o, scenario.target); });
        m.seed("scenario", synth_seed);
        m.flag("source-rows", std::to_string(synth_spec.source_rows));
        m.flag("target-rows", std::to_string(synth_spec.target_rows));
        m.flag("label-noise", csv::format_double(synth_spec.label_noise));
        m.count("source_a_rows", scenario.source_first.size());
        m.count("source_s_rows", scenario.source_second.size());
        m.count("target_rows", scenario.target.size());
        m.artifact("source_a", "source_a.csv");
        m.artifact("source_s", "source_s.csv");
        m.artifact("target", "target.csv");
        timing.stop("total");
        write_manifest(out, m, timing);
        std::cout << "wrote " << scenario.source_first.size() + scenario.source_second.size() << " source rows and "
                  << scenario.target.size() << " target rows to " << out.string() << '\n';
        return 0;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const Error& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    }
}
