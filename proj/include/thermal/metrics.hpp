#pragma once

#include "thermal/types.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace thermal::metrics {

/// k disjoint index lists covering [0, n), sizes differing by at most one.
struct FoldSplit {
    std::vector<std::vector<std::size_t>> folds;
    std::uint64_t seed = 0;

    std::size_t k() const { return folds.size(); }
    /// Every index not in fold `i`, ascending.
    std::vector<std::size_t> training_indices(std::size_t i) const;
};

/// Seeded random partition. With `stratify`, each class is dealt round-robin
/// across folds after shuffling, which keeps class proportions per fold.
FoldSplit kfold_split(std::size_t n, std::size_t k, std::uint64_t seed);
FoldSplit kfold_split_stratified(const Labels& labels, std::size_t k, std::uint64_t seed);

/// Percent of matching positions.
double accuracy(const Labels& truth, const Labels& predicted);

using ConfusionMatrix = std::array<std::array<std::size_t, SensationClass::kCount>, SensationClass::kCount>;

/// Rows are true classes, columns predicted, in the order [-2 .. +2].
ConfusionMatrix confusion(const Labels& truth, const Labels& predicted);

struct NormalizedConfusion {
    std::array<std::array<double, SensationClass::kCount>, SensationClass::kCount> rows{};
    std::array<bool, SensationClass::kCount> empty_row{};  // no true instances of this class
};

NormalizedConfusion normalize_rows(const ConfusionMatrix& counts);

/// Support-weighted mean of per-class F1, in percent. Undefined precision or
/// recall counts as zero.
double weighted_f1(const Labels& truth, const Labels& predicted);
double weighted_f1(const ConfusionMatrix& counts);

struct MeanStd {
    double mean = 0;
    double stddev = 0;  // population
};

MeanStd mean_std(const std::vector<double>& values);

}  // namespace thermal::metrics
