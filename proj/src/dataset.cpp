#include "thermal/dataset.hpp"

#include "thermal/csv.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

namespace thermal {

// ---------------------------------------------------------------------------
// Enum helpers shared across the library

char zone_letter(ClimateZone zone) { return static_cast<char>('A' + static_cast<int>(zone)); }

std::string_view zone_name(ClimateZone zone) {
    switch (zone) {
        case ClimateZone::A: return "tropical";
        case ClimateZone::B: return "dry";
        case ClimateZone::C: return "temperate";
        case ClimateZone::D: return "continental";
        case ClimateZone::E: return "polar";
    }
    return "unknown";
}

std::optional<ClimateZone> parse_zone(std::string_view text) {
    const std::string t = csv::trim(text);
    if (t.empty()) return std::nullopt;
    const std::string lower = csv::to_lower(t);
    for (ClimateZone z : kAllZones) {
        if (lower == zone_name(z)) return z;
    }
    if (lower == "continental" || lower == "cold") return ClimateZone::D;
    if (lower == "arid") return ClimateZone::B;
    const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(t.front())));
    if (c < 'A' || c > 'E') return std::nullopt;
    // A Köppen code is the main-group letter followed by lowercase/letters ("Cfa", "BWh").
    if (t.size() > 1 && !std::all_of(t.begin() + 1, t.end(), [](unsigned char ch) { return std::isalpha(ch); })) {
        return std::nullopt;
    }
    if (t.size() > 4) return std::nullopt;
    return static_cast<ClimateZone>(c - 'A');
}

std::string_view ventilation_name(Ventilation v) {
    switch (v) {
        case Ventilation::hvac: return "HVAC";
        case Ventilation::nv: return "NV";
        case Ventilation::mixed: return "mixed";
        case Ventilation::unknown: return "unknown";
    }
    return "unknown";
}

std::optional<Ventilation> parse_ventilation(std::string_view text) {
    const std::string t = csv::to_lower(csv::trim(text));
    if (t == "hvac") return Ventilation::hvac;
    if (t == "nv") return Ventilation::nv;
    if (t == "mixed" || t == "mm") return Ventilation::mixed;
    if (t == "unknown") return Ventilation::unknown;
    return std::nullopt;
}

std::string_view gender_name(Gender g) {
    switch (g) {
        case Gender::male: return "male";
        case Gender::female: return "female";
        case Gender::other: return "other";
    }
    return "other";
}

std::optional<Gender> parse_gender(std::string_view text) {
    const std::string t = csv::to_lower(csv::trim(text));
    if (t == "male") return Gender::male;
    if (t == "female") return Gender::female;
    if (t == "other") return Gender::other;
    return std::nullopt;
}

double encode_gender(Gender g) {
    switch (g) {
        case Gender::male: return 0.0;
        case Gender::female: return 1.0;
        case Gender::other: return 0.5;
    }
    return 0.5;
}

LabeledData LabeledData::subset(const std::vector<std::size_t>& rows) const {
    LabeledData out;
    out.feature_names = feature_names;
    out.features.resize(static_cast<Eigen::Index>(rows.size()), features.cols());
    out.labels.reserve(rows.size());
    out.tags.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        out.features.row(static_cast<Eigen::Index>(i)) = features.row(static_cast<Eigen::Index>(rows[i]));
        out.labels.push_back(labels[rows[i]]);
        out.tags.push_back(tags[rows[i]]);
    }
    return out;
}

LabeledData LabeledData::select_columns(const std::vector<std::string>& names) const {
    LabeledData out;
    out.feature_names = names;
    out.labels = labels;
    out.tags = tags;
    out.features.resize(features.rows(), static_cast<Eigen::Index>(names.size()));
    for (std::size_t c = 0; c < names.size(); ++c) {
        auto it = std::find(feature_names.begin(), feature_names.end(), names[c]);
        if (it == feature_names.end()) throw ShapeError("feature '" + names[c] + "' not present in data");
        out.features.col(static_cast<Eigen::Index>(c)) = features.col(it - feature_names.begin());
    }
    return out;
}

std::array<std::size_t, SensationClass::kCount> class_counts(const Labels& labels) {
    std::array<std::size_t, SensationClass::kCount> counts{};
    for (auto c : labels) ++counts[c.index()];
    return counts;
}

// ---------------------------------------------------------------------------
// Features

std::string_view feature_name(Feature f) {
    switch (f) {
        case Feature::indoor_at: return "indoor_at";
        case Feature::indoor_rh: return "indoor_rh";
        case Feature::indoor_av: return "indoor_av";
        case Feature::indoor_mrt: return "indoor_mrt";
        case Feature::outdoor_at: return "outdoor_at";
        case Feature::outdoor_rh: return "outdoor_rh";
        case Feature::clo: return "clo";
        case Feature::met: return "met";
        case Feature::age: return "age";
        case Feature::gender: return "gender";
    }
    return "";
}

std::optional<Feature> parse_feature(std::string_view name) {
    for (Feature f : kAllFeatures) {
        if (feature_name(f) == name) return f;
    }
    return std::nullopt;
}

std::optional<double> ComfortRecord::value(Feature f) const {
    switch (f) {
        case Feature::indoor_at: return indoor_at;
        case Feature::indoor_rh: return indoor_rh;
        case Feature::indoor_av: return indoor_av;
        case Feature::indoor_mrt: return indoor_mrt;
        case Feature::outdoor_at: return outdoor_at;
        case Feature::outdoor_rh: return outdoor_rh;
        case Feature::clo: return clo;
        case Feature::met: return met;
        case Feature::age: return age;
        case Feature::gender:
            if (!gender) return std::nullopt;
            return encode_gender(*gender);
    }
    return std::nullopt;
}

void ComfortRecord::set(Feature f, std::optional<double> v) {
    switch (f) {
        case Feature::indoor_at: indoor_at = v; break;
        case Feature::indoor_rh: indoor_rh = v; break;
        case Feature::indoor_av: indoor_av = v; break;
        case Feature::indoor_mrt: indoor_mrt = v; break;
        case Feature::outdoor_at: outdoor_at = v; break;
        case Feature::outdoor_rh: outdoor_rh = v; break;
        case Feature::clo: clo = v; break;
        case Feature::met: met = v; break;
        case Feature::age: age = v; break;
        case Feature::gender:
            if (!v) {
                gender.reset();
            } else if (*v == 0.0) {
                gender = Gender::male;
            } else if (*v == 1.0) {
                gender = Gender::female;
            } else {
                gender = Gender::other;
            }
            break;
    }
}

SensationClass merge_classes(double raw_vote) {
    if (!std::isfinite(raw_vote) || raw_vote < -3.0 || raw_vote > 3.0) {
        throw DataError("thermal sensation vote outside [-3, 3]: " + csv::format_double(raw_vote));
    }
    const int rounded = static_cast<int>(std::round(raw_vote));  // half away from zero
    return SensationClass(std::clamp(rounded, -2, 2));
}

FeatureSet FeatureSet::of(FeatureSetTag tag) {
    std::vector<Feature> xa{Feature::indoor_at, Feature::indoor_av, Feature::indoor_rh,
                            Feature::indoor_mrt, Feature::clo, Feature::met};
    if (tag == FeatureSetTag::Xa) return {tag, xa};
    xa.push_back(Feature::age);
    xa.push_back(Feature::gender);
    if (tag == FeatureSetTag::Xb) return {tag, xa};
    xa.push_back(Feature::outdoor_at);
    xa.push_back(Feature::outdoor_rh);
    return {tag, xa};
}

std::vector<std::string> FeatureSet::names() const { return feature_names(members); }

std::string_view FeatureSet::label() const {
    switch (tag) {
        case FeatureSetTag::Xa: return "Xa";
        case FeatureSetTag::Xb: return "Xb";
        case FeatureSetTag::Xc: return "Xc";
    }
    return "";
}

std::optional<FeatureSetTag> parse_feature_set(std::string_view text) {
    const std::string t = csv::to_lower(csv::trim(text));
    if (t == "xa" || t == "a") return FeatureSetTag::Xa;
    if (t == "xb" || t == "b") return FeatureSetTag::Xb;
    if (t == "xc" || t == "c") return FeatureSetTag::Xc;
    return std::nullopt;
}

std::vector<Feature> pmv_features() {
    return {Feature::indoor_at, Feature::indoor_mrt, Feature::indoor_av, Feature::indoor_rh, Feature::met,
            Feature::clo};
}

std::vector<Feature> shared_source_features() {
    return {Feature::indoor_at, Feature::indoor_rh, Feature::indoor_av, Feature::indoor_mrt,
            Feature::outdoor_at, Feature::outdoor_rh, Feature::age, Feature::gender};
}

std::vector<std::string> feature_names(const std::vector<Feature>& features) {
    std::vector<std::string> names;
    names.reserve(features.size());
    for (Feature f : features) names.emplace_back(feature_name(f));
    return names;
}

// ---------------------------------------------------------------------------
// Column mapping

std::vector<std::string> canonical_fields() {
    std::vector<std::string> fields;
    for (Feature f : kAllFeatures) fields.emplace_back(feature_name(f));
    for (const char* extra : {"raw_vote", "city", "climate_zone", "ventilation", "dataset_id"}) {
        fields.emplace_back(extra);
    }
    return fields;
}

namespace {

bool is_canonical_field(const std::string& name) {
    const auto fields = canonical_fields();
    return std::find(fields.begin(), fields.end(), name) != fields.end();
}

std::vector<std::string> split_tokens(std::string_view value) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= value.size()) {
        const std::size_t comma = value.find(',', start);
        const std::string token =
            csv::trim(value.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        if (!token.empty()) out.push_back(token);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

const std::set<std::string> kKnownUnits{"c", "f", "k", "m/s", "cm/s", "fpm", "percent", "fraction", "years"};

double convert_unit(double v, const std::string& unit) {
    if (unit == "f") return (v - 32.0) * 5.0 / 9.0;
    if (unit == "k") return v - 273.15;
    if (unit == "cm/s") return v / 100.0;
    if (unit == "fpm") return v * 0.00508;
    if (unit == "fraction") return v * 100.0;
    return v;
}

}  // namespace

ColumnMapping ColumnMapping::canonical() {
    ColumnMapping m;
    for (const auto& f : canonical_fields()) m.columns[f] = f;
    m.gender_tokens = {{"male", Gender::male}, {"female", Gender::female}, {"other", Gender::other}};
    m.ventilation_tokens = {{"hvac", Ventilation::hvac},
                            {"nv", Ventilation::nv},
                            {"mixed", Ventilation::mixed},
                            {"unknown", Ventilation::unknown}};
    return m;
}

ColumnMapping ColumnMapping::parse(std::string_view text) {
    ColumnMapping m;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::string trimmed = csv::trim(line);
        if (trimmed.empty()) continue;
        const auto eq = trimmed.find('=');
        const auto where = "mapping line " + std::to_string(line_no) + ": ";
        if (eq == std::string::npos) throw FormatError(where + "expected key = value");
        const std::string key = csv::trim(std::string_view(trimmed).substr(0, eq));
        const std::string value = csv::trim(std::string_view(trimmed).substr(eq + 1));
        const auto dot = key.find('.');
        if (dot == std::string::npos) throw FormatError(where + "key '" + key + "' lacks a section prefix");
        const std::string section = key.substr(0, dot);
        const std::string name = key.substr(dot + 1);

        if (section == "column" || section == "unit" || section == "constant") {
            if (!is_canonical_field(name)) throw FormatError(where + "unknown canonical field '" + name + "'");
            auto& target = section == "column" ? m.columns : section == "unit" ? m.units : m.constants;
            if (target.contains(name)) throw FormatError(where + "field '" + name + "' mapped twice");
            if (section == "unit") {
                const std::string unit = csv::to_lower(value);
                if (!kKnownUnits.contains(unit)) throw FormatError(where + "unknown unit '" + value + "'");
                target[name] = unit;
            } else {
                target[name] = value;
            }
        } else if (section == "gender") {
            const auto g = parse_gender(name);
            if (!g) throw FormatError(where + "unknown gender key '" + name + "'");
            for (const auto& token : split_tokens(value)) m.gender_tokens[csv::to_lower(token)] = *g;
        } else if (section == "ventilation") {
            const auto v = parse_ventilation(name);
            if (!v) throw FormatError(where + "unknown ventilation key '" + name + "'");
            for (const auto& token : split_tokens(value)) m.ventilation_tokens[csv::to_lower(token)] = *v;
        } else {
            throw FormatError(where + "unknown section '" + section + "'");
        }
    }
    return m;
}

ColumnMapping ColumnMapping::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open mapping '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse(buffer.str());
    } catch (const FormatError& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

// ---------------------------------------------------------------------------
// Loading

std::string_view drop_reason_name(DropReason r) {
    switch (r) {
        case DropReason::missing_vote: return "missing_vote";
        case DropReason::out_of_range: return "out_of_range";
        case DropReason::unparsable: return "unparsable";
    }
    return "";
}

std::optional<std::string> range_violation(const ComfortRecord& r) {
    auto check = [](const char* name, const std::optional<double>& v, double lo, double hi)
        -> std::optional<std::string> {
        if (!v) return std::nullopt;
        if (!std::isfinite(*v) || *v < lo || *v > hi) {
            return std::string(name) + "=" + csv::format_double(*v) + " outside [" + csv::format_double(lo) + ", " +
                   csv::format_double(hi) + "]";
        }
        return std::nullopt;
    };
    if (auto v = check("raw_vote", r.raw_vote, -3.0, 3.0)) return v;
    if (auto v = check("indoor_at", r.indoor_at, 0.0, 50.0)) return v;
    if (auto v = check("indoor_rh", r.indoor_rh, 0.0, 100.0)) return v;
    if (auto v = check("indoor_av", r.indoor_av, 0.0, 5.0)) return v;
    if (auto v = check("clo", r.clo, 0.0, 4.0)) return v;
    if (auto v = check("met", r.met, 0.5, 10.0)) return v;
    return std::nullopt;
}

namespace {

bool is_missing_token(const std::string& t) {
    if (t.empty()) return true;
    const std::string lower = csv::to_lower(t);
    return lower == "na" || lower == "nan" || lower == "n/a" || lower == "null";
}

LoadResult load_table(const csv::Table& table, const ColumnMapping& mapping, std::string_view dataset_id) {
    std::map<std::string, std::size_t> index;
    for (const auto& [field, column] : mapping.columns) {
        auto idx = table.column(column);
        if (!idx) throw InputError("mapping references absent column '" + column + "' (for " + field + ")");
        index[field] = *idx;
    }

    auto raw = [&](const std::vector<std::string>& row, const std::string& field) -> std::string {
        if (auto it = index.find(field); it != index.end()) return csv::trim(row[it->second]);
        if (auto it = mapping.constants.find(field); it != mapping.constants.end()) return it->second;
        return {};
    };

    LoadResult result;
    result.raw_rows = table.rows.size();
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        const auto& row = table.rows[r];
        ComfortRecord rec;
        std::optional<DroppedRow> drop;

        const std::string vote_text = raw(row, "raw_vote");
        if (is_missing_token(vote_text)) {
            result.dropped.push_back({r + 1, DropReason::missing_vote, "raw_vote empty"});
            continue;
        }
        if (auto v = csv::parse_double(vote_text)) {
            rec.raw_vote = *v;
        } else {
            result.dropped.push_back({r + 1, DropReason::unparsable, "raw_vote='" + vote_text + "'"});
            continue;
        }

        for (Feature f : kAllFeatures) {
            if (f == Feature::gender) continue;
            const std::string name(feature_name(f));
            const std::string text = raw(row, name);
            if (is_missing_token(text)) continue;
            auto v = csv::parse_double(text);
            if (!v) {
                drop = DroppedRow{r + 1, DropReason::unparsable, name + "='" + text + "'"};
                break;
            }
            double value = *v;
            if (auto u = mapping.units.find(name); u != mapping.units.end()) value = convert_unit(value, u->second);
            rec.set(f, value);
        }
        if (drop) {
            result.dropped.push_back(*drop);
            continue;
        }

        if (const std::string g = raw(row, "gender"); !is_missing_token(g)) {
            auto it = mapping.gender_tokens.find(csv::to_lower(g));
            rec.gender = it != mapping.gender_tokens.end() ? it->second : Gender::other;
        }
        rec.city = raw(row, "city");
        rec.climate_zone = parse_zone(raw(row, "climate_zone"));
        if (const std::string v = raw(row, "ventilation"); !v.empty()) {
            auto it = mapping.ventilation_tokens.find(csv::to_lower(v));
            if (it != mapping.ventilation_tokens.end()) {
                rec.ventilation = it->second;
            } else {
                rec.ventilation = parse_ventilation(v).value_or(Ventilation::unknown);
            }
        }
        const std::string id = raw(row, "dataset_id");
        rec.dataset_id = id.empty() ? std::string(dataset_id) : id;

        if (auto violation = range_violation(rec)) {
            result.dropped.push_back({r + 1, DropReason::out_of_range, *violation});
            continue;
        }
        result.records.push_back(std::move(rec));
    }
    return result;
}

}  // namespace

LoadResult load_dataset_text(std::string_view csv_text, const ColumnMapping& mapping, std::string_view dataset_id) {
    return load_table(csv::parse(csv_text), mapping, dataset_id);
}

LoadResult load_dataset(const std::filesystem::path& csv_path, const ColumnMapping& mapping,
                        std::string_view dataset_id) {
    if (!std::filesystem::exists(csv_path)) throw InputError("no such file '" + csv_path.string() + "'");
    try {
        return load_table(csv::read_file(csv_path), mapping, dataset_id);
    } catch (const InputError& e) {
        const std::string what = e.what();
        if (what.starts_with(csv_path.string())) throw;
        throw InputError(csv_path.string() + ": " + what);
    }
}

void write_records(std::ostream& out, const std::vector<ComfortRecord>& records) {
    csv::write_row(out, canonical_fields());
    std::vector<std::string> fields;
    for (const auto& r : records) {
        fields.clear();
        for (Feature f : kAllFeatures) {
            if (f == Feature::gender) {
                fields.emplace_back(r.gender ? gender_name(*r.gender) : "");
            } else {
                const auto v = r.value(f);
                fields.push_back(v ? csv::format_double(*v) : "");
            }
        }
        fields.push_back(csv::format_double(r.raw_vote));
        fields.push_back(r.city);
        fields.push_back(r.climate_zone ? std::string(1, zone_letter(*r.climate_zone)) : "");
        fields.emplace_back(ventilation_name(r.ventilation));
        fields.push_back(r.dataset_id);
        csv::write_row(out, fields);
    }
}

// ---------------------------------------------------------------------------
// Standardization

Standardizer Standardizer::fit(const Matrix& features, std::vector<std::string> names, std::vector<RowTag> fit_rows) {
    if (features.rows() == 0) throw DataError("cannot fit a standardizer on zero rows");
    if (static_cast<std::size_t>(features.cols()) != names.size()) {
        throw ShapeError("standardizer: column count does not match feature names");
    }
    Standardizer s;
    s.names_ = std::move(names);
    s.fit_rows_ = std::move(fit_rows);
    const double n = static_cast<double>(features.rows());
    for (Eigen::Index c = 0; c < features.cols(); ++c) {
        const double mean = features.col(c).sum() / n;
        const double var = (features.col(c).array() - mean).square().sum() / n;
        double sd = std::sqrt(var);
        if (!(sd > 1e-12 * std::max(1.0, std::abs(mean)))) sd = 1.0;
        s.means_.push_back(mean);
        s.stddevs_.push_back(sd);
    }
    return s;
}

Matrix Standardizer::apply(const Matrix& features) const {
    if (static_cast<std::size_t>(features.cols()) != means_.size()) {
        throw ShapeError("standardizer fitted on " + std::to_string(means_.size()) + " columns, got " +
                         std::to_string(features.cols()));
    }
    Matrix out = features;
    for (Eigen::Index c = 0; c < out.cols(); ++c) {
        out.col(c) = (out.col(c).array() - means_[c]) / stddevs_[c];
    }
    return out;
}

Matrix Standardizer::invert(const Matrix& standardized) const {
    if (static_cast<std::size_t>(standardized.cols()) != means_.size()) {
        throw ShapeError("standardizer: column count mismatch on invert");
    }
    Matrix out = standardized;
    for (Eigen::Index c = 0; c < out.cols(); ++c) {
        out.col(c) = out.col(c).array() * stddevs_[c] + means_[c];
    }
    return out;
}

LabeledData Standardizer::apply(const LabeledData& data) const {
    if (data.feature_names != names_) throw ShapeError("standardizer: feature names differ from the fitted set");
    LabeledData out = data;
    out.features = apply(data.features);
    return out;
}

LabeledData assemble(const std::vector<ComfortRecord>& records, const std::vector<Feature>& features) {
    LabeledData out;
    out.feature_names = feature_names(features);
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < records.size(); ++i) {
        const bool complete =
            std::all_of(features.begin(), features.end(), [&](Feature f) { return records[i].value(f).has_value(); });
        if (complete) kept.push_back(i);
    }
    out.features.resize(static_cast<Eigen::Index>(kept.size()), static_cast<Eigen::Index>(features.size()));
    for (std::size_t r = 0; r < kept.size(); ++r) {
        const auto& rec = records[kept[r]];
        for (std::size_t c = 0; c < features.size(); ++c) {
            out.features(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = *rec.value(features[c]);
        }
        out.labels.push_back(merge_classes(rec.raw_vote));
        out.tags.push_back({kept[r], false});
    }
    return out;
}

Standardizer fit_standardizer(const std::vector<ComfortRecord>& records, const FeatureSet& feature_set) {
    if (records.empty()) throw DataError("cannot fit a standardizer on an empty record list");
    for (Feature f : feature_set.members) {
        const bool any = std::any_of(records.begin(), records.end(), [&](const auto& r) { return r.value(f).has_value(); });
        if (!any) throw DataError("feature '" + std::string(feature_name(f)) + "' absent from every record");
    }
    const LabeledData data = assemble(records, feature_set.members);
    if (data.rows() == 0) throw DataError("no record carries every feature of set " + std::string(feature_set.label()));
    Standardizer s = Standardizer::fit(data.features, data.feature_names, data.tags);
    s.feature_set = feature_set.tag;
    return s;
}

LabeledData apply_standardizer(const Standardizer& standardizer, const std::vector<ComfortRecord>& records) {
    std::vector<Feature> features;
    for (const auto& name : standardizer.names()) {
        auto f = parse_feature(name);
        if (!f) throw ShapeError("standardizer column '" + name + "' is not a canonical feature");
        features.push_back(*f);
    }
    return standardizer.apply(assemble(records, features));
}

// ---------------------------------------------------------------------------
// Climate

namespace {
std::string city_key(std::string_view city) { return csv::to_lower(csv::trim(city)); }
}  // namespace

CityZoneTable CityZoneTable::parse(std::string_view text) {
    CityZoneTable table;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::string trimmed = csv::trim(line);
        if (trimmed.empty()) continue;
        const auto eq = trimmed.rfind('=');
        if (eq == std::string::npos) {
            throw FormatError("zone table line " + std::to_string(line_no) + ": expected 'City = Zone'");
        }
        const std::string city = csv::trim(std::string_view(trimmed).substr(0, eq));
        const auto zone = parse_zone(std::string_view(trimmed).substr(eq + 1));
        if (city.empty() || !zone) {
            throw FormatError("zone table line " + std::to_string(line_no) + ": bad entry '" + trimmed + "'");
        }
        table.insert(city, *zone);
    }
    return table;
}

CityZoneTable CityZoneTable::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open zone table '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse(buffer.str());
}

CityZoneTable CityZoneTable::builtin() { return load(std::filesystem::path(THERMAL_DATA_DIR) / "city_zones.cfg"); }

std::optional<ClimateZone> CityZoneTable::lookup(std::string_view city) const {
    auto it = zones_.find(city_key(city));
    if (it == zones_.end()) return std::nullopt;
    return it->second;
}

void CityZoneTable::insert(std::string_view city, ClimateZone zone) { zones_[city_key(city)] = zone; }

EnrichResult enrich_climate(std::vector<ComfortRecord> records, const CityZoneTable& table) {
    EnrichResult result;
    std::set<std::string> unknown;
    for (auto& r : records) {
        if (r.climate_zone) continue;
        r.climate_zone = table.lookup(r.city);
        if (!r.climate_zone) {
            ++result.unknown_cities;
            unknown.insert(r.city);
        }
    }
    result.records = std::move(records);
    result.unknown_city_names.assign(unknown.begin(), unknown.end());
    return result;
}

std::vector<ComfortRecord> filter_pool(const std::vector<ComfortRecord>& records, const PoolFilter& filter) {
    std::vector<ComfortRecord> out;
    for (const auto& r : records) {
        if (filter.ventilation && r.ventilation != *filter.ventilation) continue;
        if (filter.zone && r.climate_zone != filter.zone) continue;
        out.push_back(r);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Summaries

double quantile_sorted(const std::vector<double>& sorted, double p) {
    if (sorted.empty()) throw DataError("quantile of empty data");
    const double pos = p * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const auto hi = std::min(lo + 1, sorted.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return sorted[lo] + (sorted[hi] - sorted[lo]) * frac;
}

namespace {

FeatureSummary summarize_values(Feature f, std::vector<double> values) {
    std::sort(values.begin(), values.end());
    FeatureSummary s;
    s.feature = f;
    s.count = values.size();
    s.min = values.front();
    s.max = values.back();
    s.q1 = quantile_sorted(values, 0.25);
    s.median = quantile_sorted(values, 0.5);
    s.q3 = quantile_sorted(values, 0.75);
    s.mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
    return s;
}

}  // namespace

DatasetSummary summarize_dataset(const std::vector<ComfortRecord>& records) {
    if (records.empty()) throw DataError("cannot summarize an empty dataset");
    DatasetSummary summary;
    std::array<std::vector<double>, SensationClass::kCount> at_by_class;
    for (const auto& r : records) {
        const auto cls = merge_classes(r.raw_vote);
        ++summary.class_counts[cls.index()];
        if (r.indoor_at) at_by_class[cls.index()].push_back(*r.indoor_at);
    }
    for (Feature f : kAllFeatures) {
        std::vector<double> values;
        for (const auto& r : records) {
            if (auto v = r.value(f)) values.push_back(*v);
        }
        if (!values.empty()) summary.features.push_back(summarize_values(f, std::move(values)));
    }
    for (std::size_t c = 0; c < at_by_class.size(); ++c) {
        if (!at_by_class[c].empty()) summary.indoor_at_by_class[c] = summarize_values(Feature::indoor_at, at_by_class[c]);
    }
    return summary;
}

void write_summary_csv(std::ostream& out, const DatasetSummary& summary) {
    csv::write_row(out, {"section", "name", "count", "min", "q1", "median", "q3", "max", "mean"});
    for (std::size_t c = 0; c < summary.class_counts.size(); ++c) {
        csv::write_row(out, {"class_count", std::to_string(SensationClass::from_index(c).value()),
                             std::to_string(summary.class_counts[c]), "", "", "", "", "", ""});
    }
    auto stats_row = [&](const std::string& section, const std::string& name, const FeatureSummary& s) {
        csv::write_row(out, {section, name, std::to_string(s.count), csv::format_double(s.min), csv::format_double(s.q1),
                             csv::format_double(s.median), csv::format_double(s.q3), csv::format_double(s.max),
                             csv::format_double(s.mean)});
    };
    for (const auto& s : summary.features) stats_row("feature", std::string(feature_name(s.feature)), s);
    for (std::size_t c = 0; c < summary.indoor_at_by_class.size(); ++c) {
        if (const auto& s = summary.indoor_at_by_class[c]) {
            stats_row("indoor_at_by_class", std::to_string(SensationClass::from_index(c).value()), *s);
        }
    }
}

}  // namespace thermal
