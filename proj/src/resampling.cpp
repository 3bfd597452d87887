#include "thermal/resampling.hpp"

#include "thermal/csv.hpp"
#include "thermal/neural.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace thermal::resampling {

std::string_view synthesizer_name(Synthesizer s) {
    switch (s) {
        case Synthesizer::none: return "none";
        case Synthesizer::interpolation: return "interp";
        case Synthesizer::gan: return "gan";
    }
    return "none";
}

std::optional<Synthesizer> parse_synthesizer(std::string_view text) {
    const std::string t = csv::to_lower(csv::trim(text));
    if (t == "none") return Synthesizer::none;
    if (t == "interp" || t == "interpolation") return Synthesizer::interpolation;
    if (t == "gan") return Synthesizer::gan;
    return std::nullopt;
}

std::size_t ResamplePlan::deficit(SensationClass c) const {
    auto cur = current.find(c);
    auto tgt = target.find(c);
    if (cur == current.end() || tgt == target.end()) return 0;
    return tgt->second > cur->second ? tgt->second - cur->second : 0;
}

std::size_t ResamplePlan::total_target() const {
    std::size_t n = 0;
    for (const auto& [c, t] : target) n += t;
    return n;
}

ResamplePlan make_plan(const std::map<SensationClass, std::size_t>& class_counts, Synthesizer synthesizer,
                       std::uint64_t seed) {
    if (class_counts.empty()) throw DataError("resampling plan needs at least one class");
    std::size_t majority = 0;
    for (const auto& [c, n] : class_counts) {
        if (n == 0) throw DataError("class " + std::to_string(c.value()) + " has no samples");
        majority = std::max(majority, n);
    }
    ResamplePlan plan;
    plan.current = class_counts;
    plan.synthesizer = synthesizer;
    plan.seed = seed;
    for (const auto& [c, n] : class_counts) {
        // Integer form of round-half-away(1.5 n) for non-negative n.
        const std::size_t grown = (3 * n + 1) / 2;
        plan.target[c] = std::min(grown, majority);
    }
    return plan;
}

ResamplePlan make_plan(const Labels& labels, Synthesizer synthesizer, std::uint64_t seed) {
    std::map<SensationClass, std::size_t> counts;
    for (auto c : labels) ++counts[c];
    return make_plan(counts, synthesizer, seed);
}

std::uint64_t class_seed(std::uint64_t master, SensationClass c) {
    // splitmix64 of master ^ class index
    std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (c.index() + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

namespace {

std::map<SensationClass, std::vector<std::size_t>> rows_by_class(const LabeledData& data) {
    std::map<SensationClass, std::vector<std::size_t>> rows;
    for (std::size_t i = 0; i < data.labels.size(); ++i) rows[data.labels[i]].push_back(i);
    return rows;
}

void check_plan(const LabeledData& data, const ResamplePlan& plan,
                const std::map<SensationClass, std::vector<std::size_t>>& rows) {
    for (const auto& [c, target] : plan.target) {
        auto it = rows.find(c);
        if (it == rows.end() || it->second.empty()) {
            throw DataError("resampling plan names class " + std::to_string(c.value()) + " absent from the data");
        }
        if (plan.current.at(c) != it->second.size()) {
            throw DataError("resampling plan was built for different class counts");
        }
        (void)target;
    }
    if (static_cast<std::size_t>(data.features.rows()) != data.labels.size() || data.tags.size() != data.labels.size()) {
        throw ShapeError("resampling input rows, labels and tags disagree");
    }
}

// k nearest same-class neighbours of `base` (positions into `members`), ties by position.
std::vector<std::size_t> nearest(const Matrix& x, const std::vector<std::size_t>& members, std::size_t base,
                                 std::size_t k) {
    std::vector<std::pair<double, std::size_t>> dist;
    dist.reserve(members.size() - 1);
    for (std::size_t j = 0; j < members.size(); ++j) {
        if (j == base) continue;
        const double d = (x.row(static_cast<Eigen::Index>(members[j])) - x.row(static_cast<Eigen::Index>(members[base])))
                             .squaredNorm();
        dist.emplace_back(d, j);
    }
    const std::size_t kk = std::min(k, dist.size());
    std::partial_sort(dist.begin(), dist.begin() + static_cast<std::ptrdiff_t>(kk), dist.end());
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < kk; ++i) out.push_back(dist[i].second);
    return out;
}

struct Appender {
    std::vector<RowVector> rows;
    Labels labels;
    std::vector<RowTag> tags;

    void add(RowVector row, SensationClass c, RowTag tag) {
        rows.push_back(std::move(row));
        labels.push_back(c);
        tags.push_back(tag);
    }

    LabeledData finish(const LabeledData& original) {
        LabeledData out;
        out.feature_names = original.feature_names;
        out.features.resize(original.features.rows() + static_cast<Eigen::Index>(rows.size()), original.features.cols());
        out.features.topRows(original.features.rows()) = original.features;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            out.features.row(original.features.rows() + static_cast<Eigen::Index>(i)) = rows[i];
        }
        out.labels = original.labels;
        out.labels.insert(out.labels.end(), labels.begin(), labels.end());
        out.tags = original.tags;
        out.tags.insert(out.tags.end(), tags.begin(), tags.end());
        return out;
    }
};

void interpolate_class(const LabeledData& data, const std::vector<std::size_t>& members, SensationClass c,
                       std::size_t deficit, std::uint64_t seed, Appender& out) {
    std::mt19937_64 rng(seed);
    if (members.size() == 1) {
        const auto row = static_cast<Eigen::Index>(members.front());
        for (std::size_t j = 0; j < deficit; ++j) {
            out.add(data.features.row(row), c, {data.tags[members.front()].origin, true});
        }
        return;
    }
    const std::size_t k = std::min(kNeighbors, members.size() - 1);
    std::map<std::size_t, std::vector<std::size_t>> neighbour_cache;
    std::uniform_int_distribution<std::size_t> pick_base(0, members.size() - 1);
    std::uniform_int_distribution<std::size_t> pick_nn(0, k - 1);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (std::size_t j = 0; j < deficit; ++j) {
        const std::size_t base = pick_base(rng);
        auto it = neighbour_cache.find(base);
        if (it == neighbour_cache.end()) it = neighbour_cache.emplace(base, nearest(data.features, members, base, k)).first;
        const std::size_t nn = it->second[pick_nn(rng)];
        const double u = unit(rng);
        const RowVector x = data.features.row(static_cast<Eigen::Index>(members[base]));
        const RowVector xn = data.features.row(static_cast<Eigen::Index>(members[nn]));
        out.add(x + u * (xn - x), c, {data.tags[members[base]].origin, true});
    }
}

}  // namespace

ResampleResult oversample_interpolation(const LabeledData& data, const ResamplePlan& plan) {
    const auto rows = rows_by_class(data);
    check_plan(data, plan, rows);
    ResampleResult result;
    result.inputs = data.tags;
    Appender out;
    for (const auto& [c, target] : plan.target) {
        const std::size_t deficit = plan.deficit(c);
        if (deficit == 0) continue;
        interpolate_class(data, rows.at(c), c, deficit, class_seed(plan.seed, c), out);
        result.synthesized.push_back(c);
    }
    result.data = out.finish(data);
    return result;
}

void GanConfig::validate() const {
    if (latent_dim == 0 || epochs == 0 || batch_size == 0) throw TrainingError("GAN dimensions must be positive");
    for (auto w : generator_hidden) {
        if (w == 0) throw TrainingError("GAN generator widths must be positive");
    }
    for (auto w : discriminator_hidden) {
        if (w == 0) throw TrainingError("GAN discriminator widths must be positive");
    }
    if (!(generator_lr > 0) || !(discriminator_lr > 0)) throw TrainingError("GAN learning rates must be positive");
}

Matrix train_and_sample_gan(const Matrix& class_rows, std::size_t count, const GanConfig& config) {
    using namespace neural;
    config.validate();
    const auto n = static_cast<std::size_t>(class_rows.rows());
    const auto d = static_cast<std::size_t>(class_rows.cols());
    if (n == 0) throw DataError("GAN needs at least one real row");

    std::vector<std::size_t> g_widths{config.latent_dim};
    g_widths.insert(g_widths.end(), config.generator_hidden.begin(), config.generator_hidden.end());
    g_widths.push_back(d);
    std::vector<std::size_t> d_widths{d};
    d_widths.insert(d_widths.end(), config.discriminator_hidden.begin(), config.discriminator_hidden.end());
    d_widths.push_back(2);

    auto generator = init_layers(g_widths, config.seed, Activation::relu, Activation::none);
    auto discriminator = init_layers(d_widths, config.seed ^ 0x5bd1e995ULL, Activation::relu, Activation::softmax);

    TrainConfig g_cfg;
    g_cfg.learning_rate = config.generator_lr;
    g_cfg.beta1 = 0.5;
    TrainConfig d_cfg = g_cfg;
    d_cfg.learning_rate = config.discriminator_lr;
    Adam g_opt(generator, g_cfg);
    Adam d_opt(discriminator, d_cfg);

    std::mt19937_64 rng(config.seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    auto noise = [&](std::size_t rows) {
        Matrix z(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(config.latent_dim));
        for (Eigen::Index i = 0; i < z.size(); ++i) z.data()[i] = normal(rng);
        return z;
    };
    std::vector<Eigen::Index> order(n);
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    const std::size_t batch = std::min(config.batch_size, n);
    for (std::size_t epoch = 0; epoch < config.epochs; ++epoch) {
        std::shuffle(order.begin(), order.end(), rng);
        for (std::size_t start = 0; start < n; start += batch) {
            const std::size_t b = std::min(batch, n - start);
            Matrix real(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(d));
            for (std::size_t i = 0; i < b; ++i) real.row(static_cast<Eigen::Index>(i)) = class_rows.row(order[start + i]);

            // Discriminator: real -> column 1, fake -> column 0.
            const Matrix fake = forward_layers(generator, noise(b));
            Matrix both(static_cast<Eigen::Index>(2 * b), static_cast<Eigen::Index>(d));
            both.topRows(static_cast<Eigen::Index>(b)) = real;
            both.bottomRows(static_cast<Eigen::Index>(b)) = fake;
            ForwardCache d_cache;
            forward_layers(discriminator, both, &d_cache);
            Matrix d_delta = d_cache.outputs.back();
            d_delta.topRows(static_cast<Eigen::Index>(b)).col(1).array() -= 1.0;
            d_delta.bottomRows(static_cast<Eigen::Index>(b)).col(0).array() -= 1.0;
            d_delta /= static_cast<double>(2 * b);
            d_opt.step(discriminator, backward_layers(discriminator, d_cache, d_delta));

            // Generator: non-saturating loss, fake labelled real.
            ForwardCache g_cache;
            const Matrix fake2 = forward_layers(generator, noise(b), &g_cache);
            ForwardCache d2_cache;
            forward_layers(discriminator, fake2, &d2_cache);
            // outputs.back() holds probabilities; p - onehot(real) is the logit gradient.
            Matrix g_delta = d2_cache.outputs.back();
            g_delta.col(1).array() -= 1.0;
            g_delta /= static_cast<double>(b);
            Matrix input_grad;
            backward_layers(discriminator, d2_cache, g_delta, &input_grad);
            g_opt.step(generator, backward_layers(generator, g_cache, input_grad));
        }
        if (!generator.back().weights.allFinite() || !discriminator.back().weights.allFinite()) {
            throw TrainingError("GAN diverged at epoch " + std::to_string(epoch + 1));
        }
    }
    Matrix samples = forward_layers(generator, noise(count));
    if (!samples.allFinite()) throw TrainingError("GAN produced non-finite samples");
    return samples;
}

ResampleResult oversample_gan(const LabeledData& data, const ResamplePlan& plan, const GanConfig& config) {
    const auto rows = rows_by_class(data);
    check_plan(data, plan, rows);
    ResampleResult result;
    result.inputs = data.tags;
    Appender out;
    for (const auto& [c, target] : plan.target) {
        const std::size_t deficit = plan.deficit(c);
        if (deficit == 0) continue;
        const auto& members = rows.at(c);
        const std::uint64_t seed = class_seed(plan.seed, c);
        Matrix real(static_cast<Eigen::Index>(members.size()), data.features.cols());
        for (std::size_t i = 0; i < members.size(); ++i) {
            real.row(static_cast<Eigen::Index>(i)) = data.features.row(static_cast<Eigen::Index>(members[i]));
        }
        try {
            GanConfig cfg = config;
            cfg.seed = seed ^ config.seed;
            const Matrix samples = train_and_sample_gan(real, deficit, cfg);
            for (Eigen::Index i = 0; i < samples.rows(); ++i) {
                // Generator rows have no single parent; tag them with the class's first row.
                out.add(samples.row(i), c, {data.tags[members.front()].origin, true});
            }
        } catch (const TrainingError& e) {
            result.warnings.push_back("class " + std::to_string(c.value()) + ": " + e.what() +
                                      "; falling back to interpolation");
            interpolate_class(data, members, c, deficit, seed, out);
        }
        result.synthesized.push_back(c);
    }
    result.data = out.finish(data);
    return result;
}

ResampleResult resample(const LabeledData& data, const ResamplePlan& plan, const GanConfig& gan) {
    switch (plan.synthesizer) {
        case Synthesizer::none: {
            ResampleResult r;
            r.data = data;
            r.inputs = data.tags;
            return r;
        }
        case Synthesizer::interpolation: return oversample_interpolation(data, plan);
        case Synthesizer::gan: return oversample_gan(data, plan, gan);
    }
    throw InvariantError("unknown synthesizer");
}

}  // namespace thermal::resampling
