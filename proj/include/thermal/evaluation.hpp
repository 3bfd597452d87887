#pragma once

#include "thermal/baselines.hpp"
#include "thermal/dataset.hpp"
#include "thermal/metrics.hpp"
#include "thermal/neural.hpp"
#include "thermal/resampling.hpp"
#include "thermal/transfer.hpp"

#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace thermal::evaluation {

enum class Algorithm : std::uint8_t { random, knn, nb, tree, forest, pmv, mlp, tl_mlp, tl_mlp_c };

std::string_view algorithm_name(Algorithm a);
std::optional<Algorithm> parse_algorithm(std::string_view text);
bool is_transfer(Algorithm a);

struct AlgorithmSpec {
    Algorithm algorithm = Algorithm::mlp;
    neural::TrainConfig train;  // scratch MLP
    std::vector<std::size_t> hidden{64, 64};  // scratch MLP
    std::size_t knn_k = 5;
    baselines::TreeParams tree;
    baselines::ForestParams forest;
    transfer::TransferPlan plan;  // fine-tune settings for the transfer variants
    // Trained once per run and shared read-only across folds.
    std::shared_ptr<const neural::MlpModel> source_model;
};

struct CvOptions {
    resampling::Synthesizer resampler = resampling::Synthesizer::interpolation;
    resampling::GanConfig gan;
    std::size_t k = 10;
    std::uint64_t seed = 42;
    bool stratified = false;
    std::size_t jobs = 1;
};

/// Seed handed to fold `fold`'s resampler, model init and baseline.
std::uint64_t fold_seed(std::uint64_t seed, std::size_t fold);

struct FoldResult {
    std::size_t fold = 0;
    double accuracy = 0;
    double weighted_f1 = 0;
    metrics::ConfusionMatrix confusion{};
    std::size_t train_rows = 0;      // before resampling
    std::size_t resampled_rows = 0;  // rows the model was fitted on
    std::size_t test_rows = 0;
};

/// Which record indices each stage of a fold touched.
struct FoldAudit {
    std::vector<std::size_t> test_records;
    std::vector<RowTag> standardizer_rows;
    std::vector<RowTag> resampler_inputs;
};

struct EvalReport {
    std::string algorithm;
    std::string feature_set;
    std::string resampler;
    std::size_t k = 0;
    std::uint64_t seed = 0;
    bool stratified = false;
    std::size_t records = 0;    // records supplied
    std::size_t rows_used = 0;  // records complete on the feature set
    std::vector<FoldResult> folds;
    std::vector<FoldAudit> audits;
    metrics::MeanStd accuracy;
    metrics::MeanStd weighted_f1;
    metrics::ConfusionMatrix confusion{};  // summed over folds
    std::vector<std::string> notes;
};

/// k-fold evaluation: each fold fits the standardizer and resampler on its
/// training rows only and scores the untouched held-out rows. The heat-balance
/// baseline uses raw physical inputs and skips both steps.
EvalReport run_cv(const AlgorithmSpec& spec, const std::vector<ComfortRecord>& records, const FeatureSet& features,
                  const CvOptions& options);

/// Empty when no test record reached a standardizer fit or a resampler;
/// otherwise a description of the first leak.
std::optional<std::string> find_leak(const EvalReport& report);

/// One row per fold, then `mean` and `stddev` rows.
void write_report_csv(std::ostream& out, const EvalReport& report);
/// 5x5 counts, rows true class, columns predicted class.
void write_confusion_csv(std::ostream& out, const EvalReport& report);
/// Long format: true, predicted, count, row proportion, empty-row flag.
void write_confusion_long_csv(std::ostream& out, const EvalReport& report);

struct SummaryRow {
    std::string group;  // feature set label or hidden-layer depth
    std::string algorithm;
    metrics::MeanStd accuracy;
    metrics::MeanStd weighted_f1;
    std::string note;
};

/// Every algorithm on each of Xa, Xb, Xc with the same folds and seeds.
std::vector<SummaryRow> run_feature_ablation(const std::vector<ComfortRecord>& records,
                                             const std::vector<AlgorithmSpec>& algorithms, const CvOptions& options,
                                             std::vector<EvalReport>* reports = nullptr);

/// Source model for a given hidden-layer depth.
using SourceFactory = std::function<std::shared_ptr<const neural::MlpModel>(std::size_t depth)>;

/// Transfer model with 1..n hidden layers, retaining the last one each time.
std::vector<SummaryRow> run_hidden_layer_sweep(const std::vector<ComfortRecord>& records,
                                               const std::vector<std::size_t>& depths, const SourceFactory& source,
                                               const AlgorithmSpec& base, const FeatureSet& features,
                                               const CvOptions& options, std::vector<EvalReport>* reports = nullptr);

void write_summary_csv(std::ostream& out, const std::vector<SummaryRow>& rows, std::string_view group_header);

}  // namespace thermal::evaluation
