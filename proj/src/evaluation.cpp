#include "thermal/evaluation.hpp"

#include "thermal/csv.hpp"
#include "thermal/pmv.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <ostream>
#include <set>
#include <thread>

namespace thermal::evaluation {

namespace {

constexpr std::array<std::pair<Algorithm, std::string_view>, 9> kAlgorithms{{
    {Algorithm::random, "random"},
    {Algorithm::knn, "knn"},
    {Algorithm::nb, "nb"},
    {Algorithm::tree, "tree"},
    {Algorithm::forest, "forest"},
    {Algorithm::pmv, "pmv"},
    {Algorithm::mlp, "mlp"},
    {Algorithm::tl_mlp, "tl-mlp"},
    {Algorithm::tl_mlp_c, "tl-mlp-c"},
}};

constexpr std::string_view kNoLowerLayers = "no lower layers adapted";

struct FoldOutcome {
    FoldResult result;
    FoldAudit audit;
    std::vector<std::string> notes;
};

Labels fit_predict(const AlgorithmSpec& spec, const LabeledData& train, const LabeledData& test, std::uint64_t seed,
                   std::vector<std::string>& notes) {
    using namespace baselines;
    switch (spec.algorithm) {
        case Algorithm::random:
            return RandomGuesser::fit(train.labels, seed).predict(test.rows());
        case Algorithm::knn:
            return Knn::fit(train.features, train.labels, spec.knn_k).predict(test.features);
        case Algorithm::nb:
            return GaussianNb::fit(train.features, train.labels).predict(test.features);
        case Algorithm::tree:
            return DecisionTree::fit(train.features, train.labels, spec.tree, seed).predict(test.features);
        case Algorithm::forest: {
            auto params = spec.forest;
            params.seed = seed;
            return RandomForest::fit(train.features, train.labels, params).predict(test.features);
        }
        case Algorithm::mlp: {
            std::vector<std::size_t> widths{train.cols()};
            widths.insert(widths.end(), spec.hidden.begin(), spec.hidden.end());
            widths.push_back(SensationClass::kCount);
            auto config = spec.train;
            config.seed = seed;
            auto trained = neural::train(neural::init_model(widths, seed, train.feature_names), train.features,
                                         train.labels, config);
            return neural::predict(trained.model, test.features);
        }
        case Algorithm::tl_mlp:
        case Algorithm::tl_mlp_c: {
            if (!spec.source_model) throw InputError("transfer evaluation needs a source model");
            auto plan = spec.plan;
            plan.hidden_layers = spec.source_model->hidden_layer_count();
            plan.fine_tune.seed = seed;
            auto tuned = transfer::transfer_fine_tune(
                *spec.source_model, transfer::DomainDataset::make(train, transfer::Provenance::target), plan);
            if (!tuned.lower_layers_adapted) notes.emplace_back(kNoLowerLayers);
            const LabeledData projected =
                tuned.model.feature_names == test.feature_names ? test : test.select_columns(tuned.model.feature_names);
            return neural::predict(tuned.model, projected.features);
        }
        case Algorithm::pmv:
            break;
    }
    throw InvariantError("unhandled algorithm");
}

FoldOutcome run_fold(const AlgorithmSpec& spec, const LabeledData& data, const metrics::FoldSplit& split,
                     std::size_t fold, const CvOptions& options) {
    const LabeledData train_raw = data.subset(split.training_indices(fold));
    const LabeledData test_raw = data.subset(split.folds[fold]);

    FoldOutcome out;
    for (const auto& tag : test_raw.tags) out.audit.test_records.push_back(tag.origin);

    const auto train_counts = class_counts(train_raw.labels);
    const auto test_counts = class_counts(test_raw.labels);
    for (std::size_t c = 0; c < train_counts.size(); ++c) {
        if (test_counts[c] > 0 && train_counts[c] == 0) {
            throw DataError("fold " + std::to_string(fold) + ": class " +
                            std::to_string(SensationClass::from_index(c).value()) +
                            " appears only in the held-out rows; too few samples for " + std::to_string(split.k()) +
                            " folds");
        }
    }

    const std::uint64_t seed = fold_seed(options.seed, fold);
    Labels predicted;
    std::size_t fitted_rows = train_raw.rows();
    if (spec.algorithm == Algorithm::pmv) {
        predicted = pmv::pmv_baseline_predict(test_raw.features, test_raw.feature_names);
    } else {
        auto prepared = transfer::prepare_training(train_raw, options.resampler, seed, options.gan);
        out.audit.standardizer_rows = prepared.standardizer.fit_rows();
        out.audit.resampler_inputs = prepared.resampled.inputs;
        for (auto& w : prepared.resampled.warnings) out.notes.push_back(std::move(w));
        const LabeledData& train = prepared.resampled.data;
        fitted_rows = train.rows();
        predicted = fit_predict(spec, train, prepared.standardizer.apply(test_raw), seed, out.notes);
    }

    auto& r = out.result;
    r.fold = fold;
    r.accuracy = metrics::accuracy(test_raw.labels, predicted);
    r.confusion = metrics::confusion(test_raw.labels, predicted);
    r.weighted_f1 = metrics::weighted_f1(r.confusion);
    r.train_rows = train_raw.rows();
    r.resampled_rows = fitted_rows;
    r.test_rows = test_raw.rows();
    return out;
}

std::string fixed(double v) {
    return csv::format_fixed(v, 4);
}

}  // namespace

std::string_view algorithm_name(Algorithm a) {
    for (const auto& [alg, name] : kAlgorithms) {
        if (alg == a) return name;
    }
    return "?";
}

std::optional<Algorithm> parse_algorithm(std::string_view text) {
    const std::string t = csv::to_lower(csv::trim(text));
    for (const auto& [alg, name] : kAlgorithms) {
        if (name == t) return alg;
    }
    if (t == "tl-mlp-c*" || t == "tl_mlp_c") return Algorithm::tl_mlp_c;
    if (t == "tl_mlp") return Algorithm::tl_mlp;
    return std::nullopt;
}

bool is_transfer(Algorithm a) {
    return a == Algorithm::tl_mlp || a == Algorithm::tl_mlp_c;
}

std::uint64_t fold_seed(std::uint64_t seed, std::size_t fold) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (fold + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

EvalReport run_cv(const AlgorithmSpec& spec, const std::vector<ComfortRecord>& records, const FeatureSet& features,
                  const CvOptions& options) {
    if (options.jobs < 1) throw DataError("jobs must be >= 1");
    const LabeledData data = assemble(records, features.members);
    if (data.rows() < options.k) {
        throw DataError(std::to_string(data.rows()) + " complete rows on " + std::string(features.label()) +
                        " is fewer than k=" + std::to_string(options.k));
    }
    const auto split = options.stratified ? metrics::kfold_split_stratified(data.labels, options.k, options.seed)
                                          : metrics::kfold_split(data.rows(), options.k, options.seed);

    std::vector<FoldOutcome> outcomes(options.k);
    const std::size_t jobs = std::min(options.jobs, options.k);
    if (jobs == 1) {
        for (std::size_t f = 0; f < options.k; ++f) outcomes[f] = run_fold(spec, data, split, f, options);
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        {
            std::vector<std::jthread> workers;
            for (std::size_t w = 0; w < jobs; ++w) {
                workers.emplace_back([&] {
                    for (std::size_t f = next++; f < options.k; f = next++) {
                        try {
                            outcomes[f] = run_fold(spec, data, split, f, options);
                        } catch (...) {
                            std::lock_guard lock(failure_mutex);
                            if (!failure) failure = std::current_exception();
                        }
                    }
                });
            }
        }
        if (failure) std::rethrow_exception(failure);
    }

    EvalReport report;
    report.algorithm = std::string(algorithm_name(spec.algorithm));
    report.feature_set = std::string(features.label());
    report.resampler = spec.algorithm == Algorithm::pmv ? "none" : std::string(resampling::synthesizer_name(options.resampler));
    report.k = options.k;
    report.seed = options.seed;
    report.stratified = options.stratified;
    report.records = records.size();
    report.rows_used = data.rows();
    std::set<std::string> seen_notes;
    std::vector<double> acc, f1;
    for (auto& o : outcomes) {
        acc.push_back(o.result.accuracy);
        f1.push_back(o.result.weighted_f1);
        for (std::size_t i = 0; i < report.confusion.size(); ++i) {
            for (std::size_t j = 0; j < report.confusion.size(); ++j) report.confusion[i][j] += o.result.confusion[i][j];
        }
        for (auto& n : o.notes) {
            if (seen_notes.insert(n).second) report.notes.push_back(n);
        }
        report.folds.push_back(o.result);
        report.audits.push_back(std::move(o.audit));
    }
    report.accuracy = metrics::mean_std(acc);
    report.weighted_f1 = metrics::mean_std(f1);
    return report;
}

std::optional<std::string> find_leak(const EvalReport& report) {
    for (std::size_t f = 0; f < report.audits.size(); ++f) {
        const auto& a = report.audits[f];
        const std::set<std::size_t> test(a.test_records.begin(), a.test_records.end());
        for (const auto& t : a.standardizer_rows) {
            if (t.synthetic) return "fold " + std::to_string(f) + ": standardizer saw a synthetic row";
            if (test.contains(t.origin)) {
                return "fold " + std::to_string(f) + ": test record " + std::to_string(t.origin) +
                       " reached the standardizer";
            }
        }
        for (const auto& t : a.resampler_inputs) {
            if (test.contains(t.origin)) {
                return "fold " + std::to_string(f) + ": test record " + std::to_string(t.origin) +
                       " reached the resampler";
            }
        }
    }
    return std::nullopt;
}

void write_report_csv(std::ostream& out, const EvalReport& r) {
    csv::write_row(out, {"fold", "algorithm", "feature_set", "resampler", "train_rows", "fitted_rows", "test_rows",
                         "accuracy", "weighted_f1"});
    for (const auto& f : r.folds) {
        csv::write_row(out, {std::to_string(f.fold), r.algorithm, r.feature_set, r.resampler,
                             std::to_string(f.train_rows), std::to_string(f.resampled_rows),
                             std::to_string(f.test_rows), fixed(f.accuracy), fixed(f.weighted_f1)});
    }
    csv::write_row(out, {"mean", r.algorithm, r.feature_set, r.resampler, "", "", std::to_string(r.rows_used),
                         fixed(r.accuracy.mean), fixed(r.weighted_f1.mean)});
    csv::write_row(out, {"stddev", r.algorithm, r.feature_set, r.resampler, "", "", "", fixed(r.accuracy.stddev),
                         fixed(r.weighted_f1.stddev)});
}

void write_confusion_csv(std::ostream& out, const EvalReport& r) {
    std::vector<std::string> header{"true\\predicted"};
    for (auto c : kAllClasses) header.push_back(std::to_string(c.value()));
    csv::write_row(out, header);
    for (auto t : kAllClasses) {
        std::vector<std::string> row{std::to_string(t.value())};
        for (auto p : kAllClasses) row.push_back(std::to_string(r.confusion[t.index()][p.index()]));
        csv::write_row(out, row);
    }
}

void write_confusion_long_csv(std::ostream& out, const EvalReport& r) {
    const auto norm = metrics::normalize_rows(r.confusion);
    csv::write_row(out, {"true", "predicted", "count", "proportion", "empty_row"});
    for (auto t : kAllClasses) {
        for (auto p : kAllClasses) {
            csv::write_row(out, {std::to_string(t.value()), std::to_string(p.value()),
                                 std::to_string(r.confusion[t.index()][p.index()]),
                                 fixed(norm.rows[t.index()][p.index()]), norm.empty_row[t.index()] ? "1" : "0"});
        }
    }
}

std::vector<SummaryRow> run_feature_ablation(const std::vector<ComfortRecord>& records,
                                             const std::vector<AlgorithmSpec>& algorithms, const CvOptions& options,
                                             std::vector<EvalReport>* reports) {
    std::vector<SummaryRow> rows;
    for (auto tag : {FeatureSetTag::Xa, FeatureSetTag::Xb, FeatureSetTag::Xc}) {
        const auto fs = FeatureSet::of(tag);
        for (const auto& spec : algorithms) {
            auto report = run_cv(spec, records, fs, options);
            rows.push_back({std::string(fs.label()), report.algorithm, report.accuracy, report.weighted_f1, ""});
            if (reports) reports->push_back(std::move(report));
        }
    }
    return rows;
}

std::vector<SummaryRow> run_hidden_layer_sweep(const std::vector<ComfortRecord>& records,
                                               const std::vector<std::size_t>& depths, const SourceFactory& source,
                                               const AlgorithmSpec& base, const FeatureSet& features,
                                               const CvOptions& options, std::vector<EvalReport>* reports) {
    if (depths.empty()) throw DataError("sweep needs at least one depth");
    std::vector<SummaryRow> rows;
    for (std::size_t depth : depths) {
        if (depth < 1) throw DataError("hidden-layer depth must be >= 1");
        AlgorithmSpec spec = base;
        if (!is_transfer(spec.algorithm)) spec.algorithm = Algorithm::tl_mlp_c;
        spec.source_model = source(depth);
        if (!spec.source_model || spec.source_model->hidden_layer_count() != depth) {
            throw InvariantError("source model for depth " + std::to_string(depth) + " has the wrong depth");
        }
        spec.plan.hidden_layers = depth;
        spec.plan.retained_layer.reset();
        auto report = run_cv(spec, records, features, options);
        const bool frozen_input =
            std::find(report.notes.begin(), report.notes.end(), kNoLowerLayers) != report.notes.end();
        rows.push_back({std::to_string(depth), report.algorithm, report.accuracy, report.weighted_f1,
                        frozen_input ? std::string(kNoLowerLayers) : std::string()});
        if (reports) reports->push_back(std::move(report));
    }
    return rows;
}

void write_summary_csv(std::ostream& out, const std::vector<SummaryRow>& rows, std::string_view group_header) {
    csv::write_row(out, {std::string(group_header), "algorithm", "accuracy_mean", "accuracy_stddev", "f1_mean",
                         "f1_stddev", "note"});
    for (const auto& r : rows) {
        csv::write_row(out, {r.group, r.algorithm, fixed(r.accuracy.mean), fixed(r.accuracy.stddev),
                             fixed(r.weighted_f1.mean), fixed(r.weighted_f1.stddev), r.note});
    }
}

}  // namespace thermal::evaluation
