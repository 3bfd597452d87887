#pragma once

#include "thermal/types.hpp"

#include <array>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace thermal {

/// Canonical numeric features, in the column order used everywhere.
enum class Feature : std::uint8_t {
    indoor_at,
    indoor_rh,
    indoor_av,
    indoor_mrt,
    outdoor_at,
    outdoor_rh,
    clo,
    met,
    age,
    gender,
};

inline constexpr std::size_t kFeatureCount = 10;
inline constexpr std::array<Feature, kFeatureCount> kAllFeatures{
    Feature::indoor_at, Feature::indoor_rh, Feature::indoor_av, Feature::indoor_mrt, Feature::outdoor_at,
    Feature::outdoor_rh, Feature::clo, Feature::met, Feature::age, Feature::gender};

std::string_view feature_name(Feature f);
std::optional<Feature> parse_feature(std::string_view name);

/// One survey response.
struct ComfortRecord {
    std::optional<double> indoor_at;   // °C
    std::optional<double> indoor_rh;   // %
    std::optional<double> indoor_av;   // m/s
    std::optional<double> indoor_mrt;  // °C
    std::optional<double> outdoor_at;  // °C
    std::optional<double> outdoor_rh;  // %
    std::optional<double> clo;
    std::optional<double> met;
    std::optional<double> age;  // years
    std::optional<Gender> gender;
    double raw_vote = 0.0;  // [-3, +3]
    std::string city;
    std::optional<ClimateZone> climate_zone;
    Ventilation ventilation = Ventilation::unknown;
    std::string dataset_id;

    /// Numeric value of a feature (gender encoded), nullopt when absent.
    std::optional<double> value(Feature f) const;
    void set(Feature f, std::optional<double> v);

    friend bool operator==(const ComfortRecord&, const ComfortRecord&) = default;
};

/// Rounds half away from zero, then folds ±3 into ±2.
SensationClass merge_classes(double raw_vote);

// ---------------------------------------------------------------------------
// Feature sets

enum class FeatureSetTag : std::uint8_t { Xa, Xb, Xc };

struct FeatureSet {
    FeatureSetTag tag;
    std::vector<Feature> members;

    static FeatureSet of(FeatureSetTag tag);
    std::vector<std::string> names() const;
    std::string_view label() const;
};

std::optional<FeatureSetTag> parse_feature_set(std::string_view text);

/// The six factors of the heat-balance model.
std::vector<Feature> pmv_features();
/// Features common to both source datasets and the target: four indoor, two
/// outdoor, age and gender.
std::vector<Feature> shared_source_features();
std::vector<std::string> feature_names(const std::vector<Feature>& features);

// ---------------------------------------------------------------------------
// Ingestion

/// Per-dataset mapping from source CSV columns to canonical fields.
///
/// Text format, one `key = value` per line, `#` starts a comment:
///
///     column.<field>      = <source column name>
///     unit.<field>        = C | F | K | m/s | cm/s | fpm | percent | fraction
///     gender.<male|female|other> = <source token>   (repeatable, comma separated)
///     ventilation.<hvac|nv|mixed> = <source token>  (repeatable, comma separated)
///     constant.<field>    = <value used when the column is unmapped>
///
/// Canonical fields are the ten feature names plus raw_vote, city,
/// climate_zone, ventilation and dataset_id.
struct ColumnMapping {
    std::map<std::string, std::string> columns;  // canonical field -> source column
    std::map<std::string, std::string> units;    // canonical field -> unit hint
    std::map<std::string, Gender> gender_tokens;            // lower-cased token
    std::map<std::string, Ventilation> ventilation_tokens;  // lower-cased token
    std::map<std::string, std::string> constants;  // canonical field -> literal value

    /// Identity mapping for canonical CSVs written by `write_records`.
    static ColumnMapping canonical();
    static ColumnMapping parse(std::string_view text);
    static ColumnMapping load(const std::filesystem::path& path);
};

std::vector<std::string> canonical_fields();

enum class DropReason : std::uint8_t { missing_vote, out_of_range, unparsable };

struct DroppedRow {
    std::size_t line = 0;  // 1-based data row index (header excluded)
    DropReason reason{};
    std::string detail;
};

struct LoadResult {
    std::vector<ComfortRecord> records;
    std::vector<DroppedRow> dropped;
    std::size_t raw_rows = 0;
};

std::string_view drop_reason_name(DropReason r);

/// Checks the range envelopes; returns a diagnostic for the first violation.
std::optional<std::string> range_violation(const ComfortRecord& r);

LoadResult load_dataset(const std::filesystem::path& csv_path, const ColumnMapping& mapping,
                        std::string_view dataset_id);
LoadResult load_dataset_text(std::string_view csv_text, const ColumnMapping& mapping, std::string_view dataset_id);

/// Canonical CSV (header = canonical_fields()).
void write_records(std::ostream& out, const std::vector<ComfortRecord>& records);

// ---------------------------------------------------------------------------
// Standardization

/// Per-feature affine scaling to zero mean and unit (population) variance.
/// Zero-variance columns keep scale 1.
class Standardizer {
public:
    static Standardizer fit(const Matrix& features, std::vector<std::string> names,
                            std::vector<RowTag> fit_rows = {});

    Matrix apply(const Matrix& features) const;
    Matrix invert(const Matrix& standardized) const;
    LabeledData apply(const LabeledData& data) const;

    const std::vector<double>& means() const { return means_; }
    const std::vector<double>& stddevs() const { return stddevs_; }
    const std::vector<std::string>& names() const { return names_; }
    /// Rows the statistics were computed from.
    const std::vector<RowTag>& fit_rows() const { return fit_rows_; }
    std::optional<FeatureSetTag> feature_set;

private:
    std::vector<double> means_;
    std::vector<double> stddevs_;
    std::vector<std::string> names_;
    std::vector<RowTag> fit_rows_;
};

/// Design matrix for a feature list. Records missing any member are skipped;
/// tags record the index of each kept record in `records`.
LabeledData assemble(const std::vector<ComfortRecord>& records, const std::vector<Feature>& features);

Standardizer fit_standardizer(const std::vector<ComfortRecord>& records, const FeatureSet& feature_set);
LabeledData apply_standardizer(const Standardizer& standardizer, const std::vector<ComfortRecord>& records);

// ---------------------------------------------------------------------------
// Climate and pool filtering

/// City name -> Köppen main group. Text format `City Name = C`, `#` comments.
/// Lookup is case-insensitive and whitespace-trimmed.
class CityZoneTable {
public:
    static CityZoneTable parse(std::string_view text);
    static CityZoneTable load(const std::filesystem::path& path);
    /// The table shipped in data/city_zones.cfg.
    static CityZoneTable builtin();

    std::optional<ClimateZone> lookup(std::string_view city) const;
    std::size_t size() const { return zones_.size(); }
    void insert(std::string_view city, ClimateZone zone);

private:
    std::map<std::string, ClimateZone> zones_;
};

struct EnrichResult {
    std::vector<ComfortRecord> records;
    std::size_t unknown_cities = 0;
    std::vector<std::string> unknown_city_names;  // distinct, sorted
};

/// Fills climate_zone from the city table for records that do not carry one.
EnrichResult enrich_climate(std::vector<ComfortRecord> records, const CityZoneTable& table);

struct PoolFilter {
    std::optional<Ventilation> ventilation;
    std::optional<ClimateZone> zone;
};

std::vector<ComfortRecord> filter_pool(const std::vector<ComfortRecord>& records, const PoolFilter& filter);

// ---------------------------------------------------------------------------
// Summaries

struct FeatureSummary {
    Feature feature{};
    std::size_t count = 0;
    double min = 0, q1 = 0, median = 0, q3 = 0, max = 0, mean = 0;
};

struct DatasetSummary {
    std::array<std::size_t, SensationClass::kCount> class_counts{};
    std::vector<FeatureSummary> features;  // only features present in at least one record
    // indoor_at quartiles per class (min, q1, median, q3, max); nullopt for empty classes
    std::array<std::optional<FeatureSummary>, SensationClass::kCount> indoor_at_by_class{};
};

/// Linear-interpolation quantile of sorted data (p in [0,1]).
double quantile_sorted(const std::vector<double>& sorted, double p);

DatasetSummary summarize_dataset(const std::vector<ComfortRecord>& records);
void write_summary_csv(std::ostream& out, const DatasetSummary& summary);

}  // namespace thermal
