#pragma once

#include "thermal/dataset.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace thermal::synthetic {

/// Knobs for the generated transfer scenario. Shifts are in units of each
/// feature's nominal spread.
struct ScenarioSpec {
    std::size_t zones = 4;  // zones A, B, C, ... in order
    std::size_t cities_per_zone = 3;
    std::size_t source_rows = 5000;
    std::size_t target_rows = 300;
    std::size_t target_zone = 2;  // C
    std::size_t teacher_width = 16;
    double zone_shift = 1.0;
    double city_shift = 0.25;
    // Size of the zone-specific part of the teacher's first layer, relative to the shared part.
    double zone_weight_perturbation = 0.6;
    double label_noise = 0.1;  // probability of moving a label one class up or down
    double first_source_fraction = 0.7;  // share of source rows in the first dataset

    void validate() const;
};

/// Ground-truth network: a zone-specific first layer feeding a shared second
/// layer and a scalar score, binned into five ordered classes.
class Teacher {
public:
    static Teacher draw(const ScenarioSpec& spec, std::uint64_t seed);

    double score(const ComfortRecord& r) const;
    SensationClass classify(const ComfortRecord& r) const;
    Labels classify(const std::vector<ComfortRecord>& records) const;

    /// Class boundaries on the score; set from a reference sample of the target city.
    void set_thresholds(std::vector<double> sorted_scores);

private:
    std::vector<Matrix> first_;  // per zone, [10 x width]
    RowVector first_bias_;
    Matrix second_;  // [width x width]
    RowVector second_bias_;
    RowVector readout_;
    std::array<double, 4> thresholds_{};
};

struct City {
    std::string name;
    ClimateZone zone;
    std::vector<double> shift;  // per canonical feature, nominal-spread units
};

struct SyntheticScenario {
    std::vector<ComfortRecord> source_first;
    std::vector<ComfortRecord> source_second;
    std::vector<ComfortRecord> target;
    std::vector<City> cities;  // source cities
    City target_city;
    Teacher teacher;
    Labels target_noiseless;  // teacher labels before noise
};

/// Same spec and seed give identical datasets. Source rows are HVAC and carry
/// the eight shared features; target rows carry all ten.
SyntheticScenario generate_synthetic_scenario(const ScenarioSpec& spec, std::uint64_t seed);

/// Euclidean distance between per-feature means, in nominal-spread units.
double mean_shift_distance(const std::vector<ComfortRecord>& a, const std::vector<ComfortRecord>& b,
                           const std::vector<Feature>& features);

}  // namespace thermal::synthetic
