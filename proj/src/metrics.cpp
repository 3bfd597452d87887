#include "thermal/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace thermal::metrics {

namespace {

void check_pair(const Labels& truth, const Labels& predicted) {
    if (truth.empty()) throw DataError("metric on empty label vector");
    if (truth.size() != predicted.size()) throw ShapeError("truth/prediction length mismatch");
}

}  // namespace

std::vector<std::size_t> FoldSplit::training_indices(std::size_t i) const {
    std::vector<std::size_t> out;
    for (std::size_t f = 0; f < folds.size(); ++f) {
        if (f != i) out.insert(out.end(), folds[f].begin(), folds[f].end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

FoldSplit kfold_split(std::size_t n, std::size_t k, std::uint64_t seed) {
    if (k < 2) throw DataError("k must be at least 2");
    if (n < k) throw DataError("cannot split " + std::to_string(n) + " rows into " + std::to_string(k) + " folds");
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);

    FoldSplit split;
    split.seed = seed;
    split.folds.resize(k);
    const std::size_t base = n / k;
    const std::size_t extra = n % k;
    std::size_t pos = 0;
    for (std::size_t f = 0; f < k; ++f) {
        const std::size_t size = base + (f < extra ? 1 : 0);
        split.folds[f].assign(order.begin() + static_cast<std::ptrdiff_t>(pos),
                              order.begin() + static_cast<std::ptrdiff_t>(pos + size));
        std::sort(split.folds[f].begin(), split.folds[f].end());
        pos += size;
    }
    return split;
}

FoldSplit kfold_split_stratified(const Labels& labels, std::size_t k, std::uint64_t seed) {
    if (k < 2) throw DataError("k must be at least 2");
    if (labels.size() < k) throw DataError("fewer rows than folds");
    std::mt19937_64 rng(seed);
    FoldSplit split;
    split.seed = seed;
    split.folds.resize(k);
    // Deal each class in turn, continuing the round-robin where the last class stopped
    // so fold sizes stay within one of each other.
    std::size_t next = 0;
    for (auto c : kAllClasses) {
        std::vector<std::size_t> members;
        for (std::size_t i = 0; i < labels.size(); ++i) {
            if (labels[i] == c) members.push_back(i);
        }
        std::shuffle(members.begin(), members.end(), rng);
        for (auto i : members) {
            split.folds[next].push_back(i);
            next = (next + 1) % k;
        }
    }
    for (auto& f : split.folds) std::sort(f.begin(), f.end());
    return split;
}

double accuracy(const Labels& truth, const Labels& predicted) {
    check_pair(truth, predicted);
    std::size_t hits = 0;
    for (std::size_t i = 0; i < truth.size(); ++i) hits += truth[i] == predicted[i];
    return 100.0 * static_cast<double>(hits) / static_cast<double>(truth.size());
}

ConfusionMatrix confusion(const Labels& truth, const Labels& predicted) {
    check_pair(truth, predicted);
    ConfusionMatrix m{};
    for (std::size_t i = 0; i < truth.size(); ++i) ++m[truth[i].index()][predicted[i].index()];
    return m;
}

NormalizedConfusion normalize_rows(const ConfusionMatrix& counts) {
    NormalizedConfusion out;
    for (std::size_t r = 0; r < counts.size(); ++r) {
        const auto support = std::accumulate(counts[r].begin(), counts[r].end(), std::size_t{0});
        out.empty_row[r] = support == 0;
        if (support == 0) continue;
        for (std::size_t c = 0; c < counts[r].size(); ++c) {
            out.rows[r][c] = static_cast<double>(counts[r][c]) / static_cast<double>(support);
        }
    }
    return out;
}

double weighted_f1(const ConfusionMatrix& m) {
    std::size_t total = 0;
    double acc = 0.0;
    for (std::size_t c = 0; c < m.size(); ++c) {
        std::size_t support = 0, predicted = 0;
        for (std::size_t j = 0; j < m.size(); ++j) {
            support += m[c][j];
            predicted += m[j][c];
        }
        total += support;
        const double tp = static_cast<double>(m[c][c]);
        const double precision = predicted ? tp / static_cast<double>(predicted) : 0.0;
        const double recall = support ? tp / static_cast<double>(support) : 0.0;
        const double f1 = precision + recall > 0 ? 2 * precision * recall / (precision + recall) : 0.0;
        acc += f1 * static_cast<double>(support);
    }
    if (total == 0) throw DataError("metric on empty confusion matrix");
    return 100.0 * acc / static_cast<double>(total);
}

double weighted_f1(const Labels& truth, const Labels& predicted) {
    return weighted_f1(confusion(truth, predicted));
}

MeanStd mean_std(const std::vector<double>& values) {
    if (values.empty()) return {};
    const double n = static_cast<double>(values.size());
    const double mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
    double ss = 0.0;
    for (double v : values) ss += (v - mean) * (v - mean);
    return {mean, std::sqrt(ss / n)};
}

}  // namespace thermal::metrics
