#include "thermal/pmv.hpp"

#include "thermal/csv.hpp"

#include <algorithm>
#include <cmath>

namespace thermal::pmv {

namespace {

void validate(const PmvInput& in) {
    const double fields[] = {in.ta, in.tr, in.vel, in.rh, in.met, in.clo};
    if (!std::all_of(std::begin(fields), std::end(fields), [](double v) { return std::isfinite(v); })) {
        throw DataError("pmv: non-finite input");
    }
    if (in.vel < 0) throw DataError("pmv: air velocity must be >= 0");
    if (in.rh < 0 || in.rh > 100) throw DataError("pmv: relative humidity must lie in [0, 100]");
    if (in.met <= 0) throw DataError("pmv: metabolic rate must be > 0");
    if (in.clo < 0) throw DataError("pmv: clothing insulation must be >= 0");
}

}  // namespace

PmvScore compute_pmv(const PmvInput& in) {
    validate(in);

    // Water vapour partial pressure, Pa.
    const double pa = in.rh * 10.0 * std::exp(16.6536 - 4030.183 / (in.ta + 235.0));
    const double icl = 0.155 * in.clo;  // m²K/W
    const double m = in.met * 58.15;    // W/m²
    const double mw = m;                // no external work
    const double fcl = icl <= 0.078 ? 1.0 + 1.29 * icl : 1.05 + 0.645 * icl;
    const double hcf = 12.1 * std::sqrt(in.vel);
    const double taa = in.ta + 273.0;
    const double tra = in.tr + 273.0;

    // Clothing surface temperature by damped fixed-point iteration, in units
    // of K/100 so a step of 1e-6 equals 1e-4 °C.
    const double tcla = taa + (35.5 - in.ta) / (3.5 * icl + 0.1);
    const double p1 = icl * fcl;
    const double p2 = p1 * 3.96;
    const double p3 = p1 * 100.0;
    const double p4 = p1 * taa;
    const double p5 = 308.7 - 0.028 * mw + p2 * std::pow(tra / 100.0, 4);

    double xn = tcla / 100.0;
    double xf = tcla / 50.0;
    double hc = hcf;
    int n = 0;
    while (std::abs(xn - xf) * 100.0 >= kClothingTolerance) {
        if (++n > kMaxIterations) {
            throw ConvergenceError("pmv: clothing temperature did not converge within " +
                                   std::to_string(kMaxIterations) + " iterations");
        }
        xf = (xf + xn) / 2.0;
        const double hcn = 2.38 * std::pow(std::abs(100.0 * xf - taa), 0.25);
        hc = std::max(hcf, hcn);
        xn = (p5 + p4 * hc - p2 * std::pow(xf, 4)) / (100.0 + p3 * hc);
        if (!std::isfinite(xn)) throw ConvergenceError("pmv: non-finite clothing temperature");
    }
    const double tcl = 100.0 * xn - 273.0;

    const double skin_diffusion = 3.05e-3 * (5733.0 - 6.99 * mw - pa);
    const double sweating = mw > 58.15 ? 0.42 * (mw - 58.15) : 0.0;
    const double latent_respiration = 1.7e-5 * m * (5867.0 - pa);
    const double dry_respiration = 0.0014 * m * (34.0 - in.ta);
    const double radiation = 3.96 * fcl * (std::pow(xn, 4) - std::pow(tra / 100.0, 4));
    const double convection = fcl * hc * (tcl - in.ta);
    const double ts = 0.303 * std::exp(-0.036 * m) + 0.028;

    const double value =
        ts * (mw - skin_diffusion - sweating - latent_respiration - dry_respiration - radiation - convection);
    if (!std::isfinite(value)) throw ConvergenceError("pmv: non-finite score");
    return {value, tcl, n};
}

SensationClass pmv_class(double score) {
    if (score <= -1.5) return SensationClass(-2);
    if (score <= -0.5) return SensationClass(-1);
    if (score <= 0.5) return SensationClass(0);
    if (score <= 1.5) return SensationClass(1);
    return SensationClass(2);
}

Labels pmv_baseline_predict(const std::vector<ComfortRecord>& records) {
    Labels out;
    out.reserve(records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        if (!r.indoor_at || !r.indoor_mrt || !r.indoor_av || !r.indoor_rh || !r.met || !r.clo) {
            throw DataError("pmv baseline: record " + std::to_string(i) + " lacks one of the six factors");
        }
        out.push_back(pmv_class(compute_pmv({*r.indoor_at, *r.indoor_mrt, *r.indoor_av, *r.indoor_rh, *r.met, *r.clo}).value));
    }
    return out;
}

Labels pmv_baseline_predict(const Matrix& features, const std::vector<std::string>& names) {
    std::vector<Eigen::Index> cols;
    for (Feature f : pmv_features()) {
        auto it = std::find(names.begin(), names.end(), feature_name(f));
        if (it == names.end()) throw DataError("pmv baseline: column '" + std::string(feature_name(f)) + "' missing");
        cols.push_back(it - names.begin());
    }
    Labels out;
    out.reserve(static_cast<std::size_t>(features.rows()));
    for (Eigen::Index r = 0; r < features.rows(); ++r) {
        const PmvInput in{features(r, cols[0]), features(r, cols[1]), features(r, cols[2]),
                          features(r, cols[3]), features(r, cols[4]), features(r, cols[5])};
        out.push_back(pmv_class(compute_pmv(in).value));
    }
    return out;
}

}  // namespace thermal::pmv
