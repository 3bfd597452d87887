#include "thermal/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace thermal::synthetic {

namespace {

struct Nominal {
    double mean, spread, lo, hi;
};

// Indexed by canonical feature order; gender is drawn separately.
constexpr std::array<Nominal, kFeatureCount> kNominal{{
    {24.0, 2.5, 10.0, 40.0},   // indoor_at
    {45.0, 12.0, 5.0, 95.0},   // indoor_rh
    {0.2, 0.1, 0.0, 2.0},      // indoor_av
    {24.0, 2.5, 10.0, 40.0},   // indoor_mrt
    {15.0, 8.0, -30.0, 48.0},  // outdoor_at
    {60.0, 15.0, 5.0, 100.0},  // outdoor_rh
    {0.7, 0.2, 0.1, 2.5},      // clo
    {1.2, 0.15, 0.8, 3.0},     // met
    {40.0, 12.0, 16.0, 85.0},  // age
    {0.5, 0.5, 0.0, 1.0},      // gender
}};

constexpr auto kGender = static_cast<std::size_t>(Feature::gender);

std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

RowVector standardized(const ComfortRecord& r) {
    RowVector u(static_cast<Eigen::Index>(kFeatureCount));
    for (std::size_t f = 0; f < kFeatureCount; ++f) {
        const auto v = r.value(kAllFeatures[f]);
        if (!v) throw InvariantError("synthetic record is missing a latent feature");
        u(static_cast<Eigen::Index>(f)) = (*v - kNominal[f].mean) / kNominal[f].spread;
    }
    return u;
}

Matrix gaussian(std::mt19937_64& rng, Eigen::Index rows, Eigen::Index cols, double sd) {
    std::normal_distribution<double> n(0.0, sd);
    Matrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = n(rng);
    }
    return m;
}

ComfortRecord draw_row(std::mt19937_64& rng, const City& city) {
    std::normal_distribution<double> n(0.0, 1.0);
    std::bernoulli_distribution coin(0.5);
    ComfortRecord r;
    const double n_at = n(rng);
    for (std::size_t f = 0; f < kFeatureCount; ++f) {
        if (f == kGender) continue;
        double u = n(rng);
        if (kAllFeatures[f] == Feature::indoor_at) u = n_at;
        if (kAllFeatures[f] == Feature::indoor_mrt) u = 0.8 * n_at + 0.6 * u;
        const auto& nom = kNominal[f];
        double x = std::clamp(nom.mean + nom.spread * (city.shift[f] + u), nom.lo, nom.hi);
        if (kAllFeatures[f] == Feature::age) x = std::round(x);
        r.set(kAllFeatures[f], x);
    }
    r.gender = coin(rng) ? Gender::female : Gender::male;
    r.city = city.name;
    r.climate_zone = city.zone;
    r.ventilation = Ventilation::hvac;
    return r;
}

SensationClass add_noise(std::mt19937_64& rng, SensationClass c, double p) {
    std::bernoulli_distribution flip(p);
    std::bernoulli_distribution up(0.5);
    if (!flip(rng)) return c;
    int v = c.value() + (up(rng) ? 1 : -1);
    if (v > 2) v = 1;
    if (v < -2) v = -1;
    return SensationClass(v);
}

}  // namespace

void ScenarioSpec::validate() const {
    if (zones < 1 || zones > kAllZones.size()) throw DataError("scenario zones must be in [1, 5]");
    if (target_zone >= zones) throw DataError("target zone index out of range");
    if (cities_per_zone < 1) throw DataError("need at least one city per zone");
    if (source_rows < zones * cities_per_zone) throw DataError("too few source rows for the city count");
    if (target_rows < 1) throw DataError("target must have rows");
    if (teacher_width < 1) throw DataError("teacher width must be positive");
    if (label_noise < 0 || label_noise > 1) throw DataError("label noise must be a probability");
    if (first_source_fraction < 0 || first_source_fraction > 1) throw DataError("source split must be in [0, 1]");
}

Teacher Teacher::draw(const ScenarioSpec& spec, std::uint64_t seed) {
    std::mt19937_64 rng(sub_seed(seed, 1));
    const auto d = static_cast<Eigen::Index>(kFeatureCount);
    const auto w = static_cast<Eigen::Index>(spec.teacher_width);
    Teacher t;
    const Matrix shared = gaussian(rng, d, w, std::sqrt(2.0 / static_cast<double>(d)));
    for (std::size_t z = 0; z < spec.zones; ++z) {
        t.first_.push_back(shared + spec.zone_weight_perturbation *
                                        gaussian(rng, d, w, std::sqrt(2.0 / static_cast<double>(d))));
    }
    t.first_bias_ = gaussian(rng, 1, w, 0.1);
    t.second_ = gaussian(rng, w, w, std::sqrt(2.0 / static_cast<double>(w)));
    t.second_bias_ = gaussian(rng, 1, w, 0.1);
    t.readout_ = gaussian(rng, 1, w, 1.0 / std::sqrt(static_cast<double>(w)));
    return t;
}

double Teacher::score(const ComfortRecord& r) const {
    if (!r.climate_zone) throw InvariantError("teacher needs a climate zone");
    const auto z = static_cast<std::size_t>(*r.climate_zone);
    if (z >= first_.size()) throw InvariantError("record zone outside the scenario");
    const RowVector h1 = (standardized(r) * first_[z] + first_bias_).cwiseMax(0.0);
    const RowVector h2 = (h1 * second_ + second_bias_).cwiseMax(0.0);
    return h2.dot(readout_);
}

SensationClass Teacher::classify(const ComfortRecord& r) const {
    const double s = score(r);
    int c = -2;
    for (double t : thresholds_) {
        if (s > t) ++c;
    }
    return SensationClass(c);
}

Labels Teacher::classify(const std::vector<ComfortRecord>& records) const {
    Labels out;
    out.reserve(records.size());
    for (const auto& r : records) out.push_back(classify(r));
    return out;
}

void Teacher::set_thresholds(std::vector<double> sorted_scores) {
    if (sorted_scores.empty()) throw DataError("no reference scores");
    constexpr std::array<double, 4> kCuts{0.1, 0.3, 0.7, 0.9};
    for (std::size_t i = 0; i < kCuts.size(); ++i) thresholds_[i] = quantile_sorted(sorted_scores, kCuts[i]);
}

SyntheticScenario generate_synthetic_scenario(const ScenarioSpec& spec, std::uint64_t seed) {
    spec.validate();
    SyntheticScenario s;
    s.teacher = Teacher::draw(spec, seed);

    std::mt19937_64 geo(sub_seed(seed, 2));
    std::normal_distribution<double> n(0.0, 1.0);
    std::vector<std::vector<double>> zone_shift(spec.zones, std::vector<double>(kFeatureCount, 0.0));
    for (auto& zs : zone_shift) {
        for (std::size_t f = 0; f < kFeatureCount; ++f) zs[f] = f == kGender ? 0.0 : spec.zone_shift * n(geo);
    }
    auto make_city = [&](std::string name, std::size_t z) {
        City c{std::move(name), kAllZones[z], zone_shift[z]};
        for (std::size_t f = 0; f < kFeatureCount; ++f) {
            if (f != kGender) c.shift[f] += spec.city_shift * n(geo);
        }
        return c;
    };
    for (std::size_t z = 0; z < spec.zones; ++z) {
        for (std::size_t k = 0; k < spec.cities_per_zone; ++k) {
            s.cities.push_back(make_city(std::string("Synthetic ") + zone_letter(kAllZones[z]) + std::to_string(k + 1), z));
        }
    }
    s.target_city = make_city(std::string("Target ") + zone_letter(kAllZones[spec.target_zone]), spec.target_zone);

    {
        std::mt19937_64 ref(sub_seed(seed, 3));
        std::vector<double> scores;
        for (int i = 0; i < 5000; ++i) scores.push_back(s.teacher.score(draw_row(ref, s.target_city)));
        std::sort(scores.begin(), scores.end());
        s.teacher.set_thresholds(std::move(scores));
    }

    std::mt19937_64 rows(sub_seed(seed, 4));
    std::mt19937_64 noise(sub_seed(seed, 5));
    const std::size_t per_city = spec.source_rows / s.cities.size();
    const std::size_t extra = spec.source_rows % s.cities.size();
    for (std::size_t c = 0; c < s.cities.size(); ++c) {
        const std::size_t count = per_city + (c < extra ? 1 : 0);
        const auto first = static_cast<std::size_t>(std::floor(spec.first_source_fraction * static_cast<double>(count)));
        for (std::size_t i = 0; i < count; ++i) {
            ComfortRecord r = draw_row(rows, s.cities[c]);
            r.raw_vote = add_noise(noise, s.teacher.classify(r), spec.label_noise).value();
            // Source surveys do not carry clothing or activity.
            r.clo.reset();
            r.met.reset();
            r.dataset_id = i < first ? "synthetic-first" : "synthetic-second";
            (i < first ? s.source_first : s.source_second).push_back(std::move(r));
        }
    }
    for (std::size_t i = 0; i < spec.target_rows; ++i) {
        ComfortRecord r = draw_row(rows, s.target_city);
        const auto clean = s.teacher.classify(r);
        s.target_noiseless.push_back(clean);
        r.raw_vote = add_noise(noise, clean, spec.label_noise).value();
        r.dataset_id = "synthetic-target";
        s.target.push_back(std::move(r));
    }
    return s;
}

double mean_shift_distance(const std::vector<ComfortRecord>& a, const std::vector<ComfortRecord>& b,
                           const std::vector<Feature>& features) {
    auto mean = [](const std::vector<ComfortRecord>& rs, Feature f) {
        double sum = 0;
        std::size_t n = 0;
        for (const auto& r : rs) {
            if (auto v = r.value(f)) {
                sum += *v;
                ++n;
            }
        }
        if (n == 0) throw DataError("no values for feature " + std::string(feature_name(f)));
        return sum / static_cast<double>(n);
    };
    double ss = 0;
    for (Feature f : features) {
        const double d = (mean(a, f) - mean(b, f)) / kNominal[static_cast<std::size_t>(f)].spread;
        ss += d * d;
    }
    return std::sqrt(ss);
}

}  // namespace thermal::synthetic
