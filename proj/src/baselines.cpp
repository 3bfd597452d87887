#include "thermal/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>
#include <thread>

namespace thermal::baselines {

namespace {

void check_training(const Matrix& features, const Labels& labels) {
    if (labels.empty()) throw DataError("empty training set");
    if (static_cast<std::size_t>(features.rows()) != labels.size()) throw ShapeError("feature/label row mismatch");
}

template <typename Counts>
SensationClass majority(const Counts& counts) {
    std::size_t best = 0;
    for (std::size_t c = 1; c < counts.size(); ++c) {
        if (counts[c] > counts[best]) best = c;
    }
    return SensationClass::from_index(best);
}

std::uint64_t mix(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

// ---------------------------------------------------------------------------

RandomGuesser RandomGuesser::fit(const Labels& labels, std::uint64_t seed) {
    if (labels.empty()) throw DataError("random baseline needs at least one label");
    RandomGuesser g;
    const auto counts = class_counts(labels);
    for (std::size_t c = 0; c < counts.size(); ++c) {
        g.probs_[c] = static_cast<double>(counts[c]) / static_cast<double>(labels.size());
    }
    g.seed_ = seed;
    return g;
}

Labels RandomGuesser::predict(std::size_t n) const {
    std::mt19937_64 rng(seed_);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    Labels out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double u = unit(rng);
        double acc = 0.0;
        std::size_t pick = 0;
        // Last class with nonzero mass absorbs rounding slack.
        for (std::size_t c = 0; c < probs_.size(); ++c) {
            if (probs_[c] <= 0.0) continue;
            pick = c;
            acc += probs_[c];
            if (u < acc) break;
        }
        out.push_back(SensationClass::from_index(pick));
    }
    return out;
}

// ---------------------------------------------------------------------------

Knn Knn::fit(const Matrix& features, const Labels& labels, std::size_t k) {
    check_training(features, labels);
    if (k < 1) throw DataError("k must be >= 1");
    if (k > labels.size()) throw DataError("k exceeds the number of training rows");
    Knn m;
    m.train_ = features;
    m.labels_ = labels;
    m.k_ = k;
    return m;
}

std::vector<std::size_t> Knn::neighbours(const RowVector& query) const {
    if (query.size() != train_.cols()) throw ShapeError("knn: query width mismatch");
    std::vector<std::pair<double, std::size_t>> dist(labels_.size());
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        dist[i] = {(train_.row(static_cast<Eigen::Index>(i)) - query).squaredNorm(), i};
    }
    std::partial_sort(dist.begin(), dist.begin() + static_cast<std::ptrdiff_t>(k_), dist.end());
    std::vector<std::size_t> out(k_);
    for (std::size_t i = 0; i < k_; ++i) out[i] = dist[i].second;
    return out;
}

Labels Knn::predict(const Matrix& queries) const {
    Labels out;
    out.reserve(static_cast<std::size_t>(queries.rows()));
    for (Eigen::Index r = 0; r < queries.rows(); ++r) {
        std::array<std::size_t, SensationClass::kCount> votes{};
        for (auto i : neighbours(queries.row(r))) ++votes[labels_[i].index()];
        out.push_back(majority(votes));
    }
    return out;
}

// ---------------------------------------------------------------------------

GaussianNb GaussianNb::fit(const Matrix& features, const Labels& labels) {
    check_training(features, labels);
    GaussianNb m;
    const double n = static_cast<double>(labels.size());
    for (std::size_t c = 0; c < SensationClass::kCount; ++c) {
        std::vector<Eigen::Index> rows;
        for (std::size_t i = 0; i < labels.size(); ++i) {
            if (labels[i].index() == c) rows.push_back(static_cast<Eigen::Index>(i));
        }
        if (rows.empty()) continue;
        m.present_[c] = true;
        m.log_prior_[c] = std::log(static_cast<double>(rows.size()) / n);
        RowVector mean = RowVector::Zero(features.cols());
        for (auto r : rows) mean += features.row(r);
        mean /= static_cast<double>(rows.size());
        RowVector var = RowVector::Zero(features.cols());
        for (auto r : rows) var += (features.row(r) - mean).array().square().matrix();
        var /= static_cast<double>(rows.size());
        m.mean_[c] = mean;
        m.var_[c] = var.cwiseMax(kVarianceFloor);
    }
    return m;
}

std::array<double, SensationClass::kCount> GaussianNb::log_posterior(const RowVector& x) const {
    std::array<double, SensationClass::kCount> out;
    out.fill(-std::numeric_limits<double>::infinity());
    for (std::size_t c = 0; c < SensationClass::kCount; ++c) {
        if (!present_[c]) continue;
        if (x.size() != mean_[c].size()) throw ShapeError("naive bayes: query width mismatch");
        double lp = log_prior_[c];
        for (Eigen::Index j = 0; j < x.size(); ++j) {
            const double v = var_[c](j);
            const double d = x(j) - mean_[c](j);
            lp += -0.5 * std::log(2.0 * std::numbers::pi * v) - d * d / (2.0 * v);
        }
        out[c] = lp;
    }
    return out;
}

Labels GaussianNb::predict(const Matrix& queries) const {
    Labels out;
    out.reserve(static_cast<std::size_t>(queries.rows()));
    for (Eigen::Index r = 0; r < queries.rows(); ++r) {
        const auto lp = log_posterior(queries.row(r));
        std::size_t best = 0;
        for (std::size_t c = 1; c < lp.size(); ++c) {
            if (lp[c] > lp[best]) best = c;
        }
        out.push_back(SensationClass::from_index(best));
    }
    return out;
}

// ---------------------------------------------------------------------------

double gini(const std::array<std::size_t, SensationClass::kCount>& counts) {
    const double n = static_cast<double>(std::accumulate(counts.begin(), counts.end(), std::size_t{0}));
    if (n == 0) return 0.0;
    double sum_sq = 0.0;
    for (auto c : counts) {
        const double p = static_cast<double>(c) / n;
        sum_sq += p * p;
    }
    return 1.0 - sum_sq;
}

double gini_gain(const std::array<std::size_t, SensationClass::kCount>& left,
                 const std::array<std::size_t, SensationClass::kCount>& right) {
    std::array<std::size_t, SensationClass::kCount> parent{};
    for (std::size_t c = 0; c < parent.size(); ++c) parent[c] = left[c] + right[c];
    const double nl = static_cast<double>(std::accumulate(left.begin(), left.end(), std::size_t{0}));
    const double nr = static_cast<double>(std::accumulate(right.begin(), right.end(), std::size_t{0}));
    const double n = nl + nr;
    if (n == 0) return 0.0;
    return gini(parent) - (nl / n) * gini(left) - (nr / n) * gini(right);
}

class TreeBuilder {
public:
    TreeBuilder(const Matrix& x, const Labels& y, const TreeParams& params, std::uint64_t seed)
        : x_(x), y_(y), params_(params), rng_(seed) {}

    DecisionTree build(std::vector<std::size_t> rows) {
        DecisionTree tree;
        tree_ = &tree;
        grow(std::move(rows), 0);
        return tree;
    }

private:
    using Counts = std::array<std::size_t, SensationClass::kCount>;

    Counts count(const std::vector<std::size_t>& rows) const {
        Counts c{};
        for (auto r : rows) ++c[y_[r].index()];
        return c;
    }

    struct Split {
        int feature = -1;
        double threshold = 0;
        double gain = -1;
    };

    Split best_split_on(const std::vector<std::size_t>& rows, int feature) const {
        std::vector<std::pair<double, SensationClass>> values;
        values.reserve(rows.size());
        for (auto r : rows) values.emplace_back(x_(static_cast<Eigen::Index>(r), feature), y_[r]);
        std::sort(values.begin(), values.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        Counts left{};
        Counts right = count(rows);
        Split best;
        for (std::size_t i = 0; i + 1 < values.size(); ++i) {
            ++left[values[i].second.index()];
            --right[values[i].second.index()];
            if (values[i].first == values[i + 1].first) continue;
            const double gain = gini_gain(left, right);
            if (gain > best.gain) {
                best.feature = feature;
                // Midpoint; fall back to the lower value if the midpoint rounds onto the upper one.
                double t = values[i].first + (values[i + 1].first - values[i].first) / 2.0;
                if (!(t < values[i + 1].first)) t = values[i].first;
                best.threshold = t;
                best.gain = gain;
            }
        }
        return best;
    }

    std::size_t grow(std::vector<std::size_t> rows, std::size_t depth) {
        const Counts counts = count(rows);
        const std::size_t index = tree_->nodes_.size();
        tree_->nodes_.push_back({});
        tree_->nodes_[index].label = majority(counts);

        const bool pure = std::count_if(counts.begin(), counts.end(), [](auto c) { return c > 0; }) <= 1;
        if (pure || rows.size() < params_.min_samples_split || (params_.max_depth && depth >= *params_.max_depth)) {
            return index;
        }

        const auto d = static_cast<int>(x_.cols());
        std::vector<int> features(static_cast<std::size_t>(d));
        std::iota(features.begin(), features.end(), 0);
        const std::size_t draw = std::min<std::size_t>(params_.max_features.value_or(features.size()), features.size());
        if (draw < features.size()) {
            for (std::size_t i = 0; i < features.size(); ++i) {
                std::uniform_int_distribution<std::size_t> pick(i, features.size() - 1);
                std::swap(features[i], features[pick(rng_)]);
            }
        }
        Split best;
        for (std::size_t i = 0; i < features.size(); ++i) {
            // Examine `draw` features; keep going only while no valid split exists.
            if (i >= draw && best.feature >= 0) break;
            const Split s = best_split_on(rows, features[i]);
            if (s.feature >= 0 && (s.gain > best.gain || (s.gain == best.gain && s.feature < best.feature))) best = s;
        }
        if (best.feature < 0) return index;

        std::vector<std::size_t> left, right;
        for (auto r : rows) {
            (x_(static_cast<Eigen::Index>(r), best.feature) <= best.threshold ? left : right).push_back(r);
        }
        rows.clear();
        rows.shrink_to_fit();
        const std::size_t l = grow(std::move(left), depth + 1);
        const std::size_t r = grow(std::move(right), depth + 1);
        auto& node = tree_->nodes_[index];
        node.feature = best.feature;
        node.threshold = best.threshold;
        node.left = l;
        node.right = r;
        return index;
    }

    const Matrix& x_;
    const Labels& y_;
    TreeParams params_;
    std::mt19937_64 rng_;
    DecisionTree* tree_ = nullptr;
};

DecisionTree DecisionTree::fit(const Matrix& features, const Labels& labels, const TreeParams& params,
                               std::uint64_t seed) {
    std::vector<std::size_t> rows(labels.size());
    std::iota(rows.begin(), rows.end(), std::size_t{0});
    return fit_rows(features, labels, std::move(rows), params, seed);
}

DecisionTree DecisionTree::fit_rows(const Matrix& features, const Labels& labels, std::vector<std::size_t> rows,
                                    const TreeParams& params, std::uint64_t seed) {
    check_training(features, labels);
    if (rows.empty()) throw DataError("empty training set");
    if (features.cols() == 0) throw ShapeError("tree needs at least one feature");
    return TreeBuilder(features, labels, params, seed).build(std::move(rows));
}

SensationClass DecisionTree::predict_row(const RowVector& x) const {
    std::size_t i = 0;
    while (nodes_[i].feature >= 0) {
        if (nodes_[i].feature >= x.size()) throw ShapeError("tree: query width mismatch");
        i = x(nodes_[i].feature) <= nodes_[i].threshold ? nodes_[i].left : nodes_[i].right;
    }
    return nodes_[i].label;
}

Labels DecisionTree::predict(const Matrix& queries) const {
    Labels out;
    out.reserve(static_cast<std::size_t>(queries.rows()));
    for (Eigen::Index r = 0; r < queries.rows(); ++r) out.push_back(predict_row(queries.row(r)));
    return out;
}

std::size_t DecisionTree::depth() const {
    std::vector<std::pair<std::size_t, std::size_t>> stack{{0, 0}};
    std::size_t deepest = 0;
    while (!stack.empty()) {
        auto [i, d] = stack.back();
        stack.pop_back();
        deepest = std::max(deepest, d);
        if (nodes_[i].feature >= 0) {
            stack.emplace_back(nodes_[i].left, d + 1);
            stack.emplace_back(nodes_[i].right, d + 1);
        }
    }
    return deepest;
}

// ---------------------------------------------------------------------------

RandomForest RandomForest::fit(const Matrix& features, const Labels& labels, const ForestParams& params) {
    check_training(features, labels);
    if (params.n_trees == 0) throw DataError("forest needs at least one tree");
    const auto d = static_cast<std::size_t>(features.cols());
    TreeParams tree_params;
    tree_params.max_depth = params.max_depth;
    tree_params.max_features =
        params.max_features.value_or(std::max<std::size_t>(1, static_cast<std::size_t>(std::sqrt(static_cast<double>(d)))));

    RandomForest forest;
    forest.trees_.resize(params.n_trees);
    auto build = [&](std::size_t t) {
        const std::uint64_t seed = mix(params.seed, t);
        std::vector<std::size_t> rows(labels.size());
        if (params.bootstrap) {
            std::mt19937_64 rng(mix(seed, 0xb007));
            std::uniform_int_distribution<std::size_t> pick(0, labels.size() - 1);
            for (auto& r : rows) r = pick(rng);
        } else {
            std::iota(rows.begin(), rows.end(), std::size_t{0});
        }
        forest.trees_[t] = DecisionTree::fit_rows(features, labels, std::move(rows), tree_params, seed);
    };

    const std::size_t jobs = std::clamp<std::size_t>(params.jobs, 1, params.n_trees);
    if (jobs == 1) {
        for (std::size_t t = 0; t < params.n_trees; ++t) build(t);
    } else {
        std::vector<std::jthread> workers;
        for (std::size_t w = 0; w < jobs; ++w) {
            workers.emplace_back([&, w] {
                for (std::size_t t = w; t < params.n_trees; t += jobs) build(t);
            });
        }
    }
    return forest;
}

Labels RandomForest::predict(const Matrix& queries) const {
    Labels out;
    out.reserve(static_cast<std::size_t>(queries.rows()));
    for (Eigen::Index r = 0; r < queries.rows(); ++r) {
        std::array<std::size_t, SensationClass::kCount> votes{};
        for (const auto& t : trees_) ++votes[t.predict_row(queries.row(r)).index()];
        out.push_back(majority(votes));
    }
    return out;
}

}  // namespace thermal::baselines
