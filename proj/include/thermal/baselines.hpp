#pragma once

#include "thermal/types.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace thermal::baselines {

/// Draws predictions i.i.d. from the empirical training class distribution.
class RandomGuesser {
public:
    static RandomGuesser fit(const Labels& labels, std::uint64_t seed);
    /// The same guesser always yields the same sequence for the same n.
    Labels predict(std::size_t n) const;
    const std::array<double, SensationClass::kCount>& distribution() const { return probs_; }

private:
    std::array<double, SensationClass::kCount> probs_{};
    std::uint64_t seed_ = 0;
};

/// Brute-force Euclidean k-nearest neighbours, majority vote, ties to the lowest
/// class. Neighbour ties at equal distance go to the earlier training row.
class Knn {
public:
    static Knn fit(const Matrix& features, const Labels& labels, std::size_t k = 5);
    Labels predict(const Matrix& queries) const;
    /// Indices of the k nearest training rows, nearest first.
    std::vector<std::size_t> neighbours(const RowVector& query) const;

private:
    Matrix train_;
    Labels labels_;
    std::size_t k_ = 5;
};

/// Gaussian naive Bayes with a per-feature variance floor.
class GaussianNb {
public:
    static constexpr double kVarianceFloor = 1e-9;

    static GaussianNb fit(const Matrix& features, const Labels& labels);
    Labels predict(const Matrix& queries) const;
    /// Unnormalized log-posterior per class; -inf for classes absent in training.
    std::array<double, SensationClass::kCount> log_posterior(const RowVector& x) const;

private:
    std::array<bool, SensationClass::kCount> present_{};
    std::array<double, SensationClass::kCount> log_prior_{};
    std::array<RowVector, SensationClass::kCount> mean_;
    std::array<RowVector, SensationClass::kCount> var_;
};

/// Gini impurity of class counts.
double gini(const std::array<std::size_t, SensationClass::kCount>& counts);
/// Parent impurity minus the size-weighted child impurities.
double gini_gain(const std::array<std::size_t, SensationClass::kCount>& left,
                 const std::array<std::size_t, SensationClass::kCount>& right);

struct TreeParams {
    std::optional<std::size_t> max_depth;  // unlimited by default
    std::size_t min_samples_split = 2;
    std::optional<std::size_t> max_features;  // features examined per split; all by default
};

/// CART classifier with Gini impurity and midpoint thresholds.
class DecisionTree {
public:
    static DecisionTree fit(const Matrix& features, const Labels& labels, const TreeParams& params = {},
                            std::uint64_t seed = 0);
    /// Fit on a subset of rows (repeats allowed, as in a bootstrap sample).
    static DecisionTree fit_rows(const Matrix& features, const Labels& labels, std::vector<std::size_t> rows,
                                 const TreeParams& params, std::uint64_t seed);

    Labels predict(const Matrix& queries) const;
    SensationClass predict_row(const RowVector& x) const;
    std::size_t node_count() const { return nodes_.size(); }
    std::size_t depth() const;

private:
    struct Node {
        int feature = -1;  // -1 for leaves
        double threshold = 0;
        std::size_t left = 0, right = 0;
        SensationClass label;
    };
    std::vector<Node> nodes_;

    friend class TreeBuilder;
};

struct ForestParams {
    std::size_t n_trees = 100;
    bool bootstrap = true;
    // Features per split; nullopt means floor(sqrt(d)), at least 1.
    std::optional<std::size_t> max_features;
    std::optional<std::size_t> max_depth;
    std::uint64_t seed = 0;
    std::size_t jobs = 1;
};

class RandomForest {
public:
    static RandomForest fit(const Matrix& features, const Labels& labels, const ForestParams& params = {});
    /// Majority vote over trees, ties to the lowest class.
    Labels predict(const Matrix& queries) const;
    const std::vector<DecisionTree>& trees() const { return trees_; }

private:
    std::vector<DecisionTree> trees_;
};

}  // namespace thermal::baselines
