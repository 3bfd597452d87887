#pragma once

#include "thermal/types.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace thermal::resampling {

enum class Synthesizer : std::uint8_t { none, interpolation, gan };

std::string_view synthesizer_name(Synthesizer s);
std::optional<Synthesizer> parse_synthesizer(std::string_view text);

/// Per-class target counts: min(round(1.5 n_c), n_majority), rounding half away
/// from zero. The majority class keeps its count.
struct ResamplePlan {
    std::map<SensationClass, std::size_t> current;
    std::map<SensationClass, std::size_t> target;
    Synthesizer synthesizer = Synthesizer::interpolation;
    std::uint64_t seed = 0;

    std::size_t deficit(SensationClass c) const;
    std::size_t total_target() const;
};

ResamplePlan make_plan(const std::map<SensationClass, std::size_t>& class_counts,
                       Synthesizer synthesizer = Synthesizer::interpolation, std::uint64_t seed = 0);
ResamplePlan make_plan(const Labels& labels, Synthesizer synthesizer = Synthesizer::interpolation,
                       std::uint64_t seed = 0);

/// Seed for a class's synthesizer, derived from the plan seed and class index.
std::uint64_t class_seed(std::uint64_t master, SensationClass c);

struct ResampleResult {
    LabeledData data;  // original rows first, in input order, then synthetic rows
    std::vector<std::string> warnings;
    std::vector<RowTag> inputs;  // provenance of every row the synthesizer saw
    std::vector<SensationClass> synthesized;  // classes that received synthetic rows
};

inline constexpr std::size_t kNeighbors = 5;

/// Convex combinations x + u (x_nn - x) with x_nn among the k nearest
/// same-class neighbours. Single-sample classes are duplicated.
ResampleResult oversample_interpolation(const LabeledData& data, const ResamplePlan& plan);

struct GanConfig {
    std::vector<std::size_t> generator_hidden{32, 32};
    std::vector<std::size_t> discriminator_hidden{32, 32};
    std::size_t latent_dim = 8;
    std::size_t epochs = 300;
    std::size_t batch_size = 64;
    double generator_lr = 1e-3;
    double discriminator_lr = 1e-3;
    std::uint64_t seed = 0;

    void validate() const;
};

/// Per-class generator/discriminator pairs trained on that class's rows; the
/// deficit is sampled from the generator. Falls back to interpolation (with a
/// warning) when training diverges.
ResampleResult oversample_gan(const LabeledData& data, const ResamplePlan& plan, const GanConfig& config);

/// Dispatches on plan.synthesizer; `none` returns the input unchanged.
ResampleResult resample(const LabeledData& data, const ResamplePlan& plan, const GanConfig& gan = {});

/// Generator samples for one class; exposed for the moment tests.
Matrix train_and_sample_gan(const Matrix& class_rows, std::size_t count, const GanConfig& config);

}  // namespace thermal::resampling
