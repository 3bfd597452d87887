#pragma once

#include "thermal/dataset.hpp"
#include "thermal/neural.hpp"
#include "thermal/resampling.hpp"

#include <optional>
#include <string>
#include <vector>

namespace thermal::transfer {

enum class Provenance : std::uint8_t { source, target };

/// A design matrix tagged with the domain it was drawn from.
struct DomainDataset {
    LabeledData data;
    Provenance provenance = Provenance::target;

    /// Throws DataError when feature names repeat or shapes disagree.
    static DomainDataset make(LabeledData data, Provenance provenance);
};

/// All HVAC rows, or only those in one climate zone.
struct SourcePool {
    std::optional<ClimateZone> zone;  // nullopt means every zone

    static SourcePool all() { return {}; }
    static SourcePool same_zone(ClimateZone z) { return {z}; }
    /// "all" or "zone:C".
    static SourcePool parse(std::string_view text);
    std::string describe() const;

    friend bool operator==(const SourcePool&, const SourcePool&) = default;
};

neural::TrainConfig default_source_config();
neural::TrainConfig default_fine_tune_config();

struct TransferPlan {
    SourcePool source_pool;
    std::size_t hidden_layers = 2;
    std::size_t hidden_width = 64;
    // Index into the layer stack of the retained layer; defaults to the last hidden layer.
    std::optional<std::size_t> retained_layer;
    bool retain_output = false;
    neural::TrainConfig source_train = default_source_config();
    neural::TrainConfig fine_tune = default_fine_tune_config();
    resampling::Synthesizer resampler = resampling::Synthesizer::interpolation;
    resampling::GanConfig gan;

    std::size_t retained_index() const { return retained_layer.value_or(hidden_layers - 1); }
    void validate() const;
};

struct SourcePoolResult {
    DomainDataset pool;
    std::vector<ComfortRecord> records;  // rows of `pool`, in order
    std::size_t from_first = 0;   // rows contributed by the first dataset
    std::size_t from_second = 0;  // rows contributed by the second dataset
};

/// HVAC rows of both datasets (zone-filtered when the plan says so) on the
/// eight shared features; incomplete rows are dropped.
SourcePoolResult assemble_source_pool(const std::vector<ComfortRecord>& first,
                                      const std::vector<ComfortRecord>& second, const TransferPlan& plan);

/// Standardizer fitted on the given rows, then the standardized rows resampled.
struct PreparedTraining {
    Standardizer standardizer;
    resampling::ResampleResult resampled;
};

PreparedTraining prepare_training(const LabeledData& raw, resampling::Synthesizer synthesizer, std::uint64_t seed,
                                  const resampling::GanConfig& gan = {});

struct SourceModel {
    neural::MlpModel model;
    Standardizer standardizer;
    std::vector<double> loss_history;
    std::size_t pool_rows = 0;
    std::size_t trained_rows = 0;  // after resampling
    std::vector<std::string> warnings;
};

/// Standardizes and resamples the pool, then trains an MLP of
/// `hidden_layers` x `hidden_width` ReLU units on it.
SourceModel train_source(const DomainDataset& pool, const TransferPlan& plan);

struct FineTuneResult {
    neural::MlpModel model;
    std::vector<double> loss_history;
    bool stopped_early = false;
    // False when the retained layer is the input layer, so only layers above it train.
    bool lower_layers_adapted = true;
};

/// Copies and freezes the retained layer of `source`, initializes every other
/// layer from the fine-tune seed, and trains on `target` (already
/// standardized and resampled). When the input layer is retained the target is
/// projected onto the source features by name.
FineTuneResult transfer_fine_tune(const neural::MlpModel& source, const DomainDataset& target,
                                  const TransferPlan& plan);

}  // namespace thermal::transfer
