#pragma once

#include "thermal/dataset.hpp"
#include "thermal/types.hpp"

#include <vector>

namespace thermal::pmv {

/// The six heat-balance factors.
struct PmvInput {
    double ta = 0;   // air temperature, °C
    double tr = 0;   // mean radiant temperature, °C
    double vel = 0;  // relative air velocity, m/s
    double rh = 0;   // relative humidity, %
    double met = 0;  // metabolic rate, met
    double clo = 0;  // clothing insulation, clo
};

struct PmvScore {
    double value = 0;
    double clothing_temperature = 0;  // °C, converged fixed point
    int iterations = 0;
};

inline constexpr int kMaxIterations = 150;
inline constexpr double kClothingTolerance = 1e-4;  // °C

/// Fanger PMV in the ISO 7730 form. Throws DataError on invalid input and
/// ConvergenceError when the clothing-surface temperature does not settle.
PmvScore compute_pmv(const PmvInput& input);

/// Five-class mapping; branches are tested in order so 1.5 maps to +1 and
/// -1.5 to -2.
SensationClass pmv_class(double score);

/// Requires all six factors on every record.
Labels pmv_baseline_predict(const std::vector<ComfortRecord>& records);

/// Same as above on a design matrix whose columns include the six factors by
/// canonical name (values in physical units, not standardized).
Labels pmv_baseline_predict(const Matrix& features, const std::vector<std::string>& names);

}  // namespace thermal::pmv
