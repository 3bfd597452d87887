#include "thermal/neural.hpp"

#include "thermal/hash.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

namespace thermal::neural {

static_assert(std::endian::native == std::endian::little, "model files assume a little-endian host");

void TrainConfig::validate() const {
    if (!(learning_rate > 0) || !std::isfinite(learning_rate)) throw TrainingError("learning_rate must be > 0");
    if (batch_size < 1) throw TrainingError("batch_size must be >= 1");
    if (max_epochs < 1) throw TrainingError("max_epochs must be >= 1");
}

std::size_t MlpModel::parameter_count() const {
    std::size_t n = 0;
    for (const auto& l : layers) n += l.parameter_count();
    return n;
}

std::uint64_t MlpModel::fingerprint() const {
    Fnv1a h;
    for (const auto& name : feature_names) {
        h.update(name);
        h.update("\0", 1);
    }
    for (const auto& l : layers) {
        const std::uint64_t shape[2] = {l.inputs(), l.outputs()};
        h.update(shape, sizeof shape);
        h.update(l.weights.data(), sizeof(double) * static_cast<std::size_t>(l.weights.size()));
        h.update(l.biases.data(), sizeof(double) * static_cast<std::size_t>(l.biases.size()));
    }
    return h.digest();
}

// ---------------------------------------------------------------------------

std::vector<DenseLayer> init_layers(const std::vector<std::size_t>& widths, std::uint64_t seed, Activation hidden,
                                    Activation output) {
    if (widths.size() < 2) throw ShapeError("a network needs at least an input and an output width");
    if (std::any_of(widths.begin(), widths.end(), [](std::size_t w) { return w == 0; })) {
        throw ShapeError("layer widths must be positive");
    }
    std::mt19937_64 rng(seed);
    std::vector<DenseLayer> layers;
    for (std::size_t i = 0; i + 1 < widths.size(); ++i) {
        const auto in = static_cast<Eigen::Index>(widths[i]);
        const auto out = static_cast<Eigen::Index>(widths[i + 1]);
        const double limit = std::sqrt(6.0 / static_cast<double>(in));
        std::uniform_real_distribution<double> dist(-limit, limit);
        DenseLayer layer;
        layer.weights.resize(in, out);
        for (Eigen::Index r = 0; r < in; ++r) {
            for (Eigen::Index c = 0; c < out; ++c) layer.weights(r, c) = dist(rng);
        }
        layer.biases = RowVector::Zero(out);
        layer.activation = i + 2 == widths.size() ? output : hidden;
        layers.push_back(std::move(layer));
    }
    return layers;
}

namespace {

void softmax_rows(Matrix& z) {
    for (Eigen::Index r = 0; r < z.rows(); ++r) {
        auto row = z.row(r);
        const double mx = row.maxCoeff();
        row = (row.array() - mx).exp();
        row /= row.sum();
    }
}

Matrix log_softmax_rows(const Matrix& z) {
    Matrix out(z.rows(), z.cols());
    for (Eigen::Index r = 0; r < z.rows(); ++r) {
        const double mx = z.row(r).maxCoeff();
        const double lse = mx + std::log((z.row(r).array() - mx).exp().sum());
        out.row(r) = z.row(r).array() - lse;
    }
    return out;
}

// Pre-activation of the last layer, with the cache filled for backprop.
Matrix forward_logits(const std::vector<DenseLayer>& layers, const Matrix& input, ForwardCache& cache) {
    cache.outputs.clear();
    cache.outputs.push_back(input);
    Matrix a = input;
    for (std::size_t i = 0; i < layers.size(); ++i) {
        const auto& l = layers[i];
        Matrix z = a * l.weights;
        z.rowwise() += l.biases;
        if (i + 1 == layers.size()) {
            cache.outputs.push_back(z);
            return z;
        }
        if (l.activation == Activation::relu) z = z.cwiseMax(0.0);
        if (l.activation == Activation::softmax) softmax_rows(z);
        cache.outputs.push_back(z);
        a = std::move(z);
    }
    return a;
}

}  // namespace

Matrix forward_layers(const std::vector<DenseLayer>& layers, const Matrix& input, ForwardCache* cache) {
    if (layers.empty()) throw ShapeError("empty network");
    if (static_cast<std::size_t>(input.cols()) != layers.front().inputs()) {
        throw ShapeError("input width " + std::to_string(input.cols()) + " does not match network width " +
                         std::to_string(layers.front().inputs()));
    }
    if (cache) cache->outputs.clear();
    if (cache) cache->outputs.push_back(input);
    Matrix a = input;
    for (const auto& l : layers) {
        Matrix z = a * l.weights;
        z.rowwise() += l.biases;
        switch (l.activation) {
            case Activation::relu: z = z.cwiseMax(0.0); break;
            case Activation::softmax: softmax_rows(z); break;
            case Activation::none: break;
        }
        a = std::move(z);
        if (cache) cache->outputs.push_back(a);
    }
    return a;
}

std::vector<LayerGradients> backward_layers(const std::vector<DenseLayer>& layers, const ForwardCache& cache,
                                            Matrix delta, Matrix* input_grad) {
    std::vector<LayerGradients> grads(layers.size());
    for (std::size_t k = layers.size(); k-- > 0;) {
        const Matrix& a_prev = cache.outputs[k];
        grads[k].weights = a_prev.transpose() * delta;
        grads[k].biases = delta.colwise().sum();
        if (k == 0 && !input_grad) break;
        Matrix d_prev = delta * layers[k].weights.transpose();
        if (k > 0) {
            // Hidden activations are ReLU or identity.
            if (layers[k - 1].activation == Activation::relu) {
                d_prev = d_prev.cwiseProduct((a_prev.array() > 0.0).cast<double>().matrix());
            } else if (layers[k - 1].activation == Activation::softmax) {
                throw ShapeError("softmax is only supported on the output layer");
            }
            delta = std::move(d_prev);
        } else {
            *input_grad = std::move(d_prev);
        }
    }
    return grads;
}

Adam::Adam(const std::vector<DenseLayer>& layers, const TrainConfig& config) : config_(config) {
    for (const auto& l : layers) {
        m_.push_back({Matrix::Zero(l.weights.rows(), l.weights.cols()), RowVector::Zero(l.biases.size())});
        v_.push_back({Matrix::Zero(l.weights.rows(), l.weights.cols()), RowVector::Zero(l.biases.size())});
    }
}

void Adam::step(std::vector<DenseLayer>& layers, const std::vector<LayerGradients>& grads) {
    ++t_;
    const double b1 = config_.beta1;
    const double b2 = config_.beta2;
    const double c1 = 1.0 - std::pow(b1, static_cast<double>(t_));
    const double c2 = 1.0 - std::pow(b2, static_cast<double>(t_));
    const double lr = config_.learning_rate;
    const double eps = config_.epsilon;
    for (std::size_t i = 0; i < layers.size(); ++i) {
        if (layers[i].frozen) continue;
        auto& m = m_[i];
        auto& v = v_[i];
        const auto& g = grads[i];
        m.weights = b1 * m.weights + (1.0 - b1) * g.weights;
        v.weights = b2 * v.weights + (1.0 - b2) * g.weights.cwiseProduct(g.weights);
        m.biases = b1 * m.biases + (1.0 - b1) * g.biases;
        v.biases = b2 * v.biases + (1.0 - b2) * g.biases.cwiseProduct(g.biases);
        layers[i].weights.array() -= lr * (m.weights.array() / c1) / ((v.weights.array() / c2).sqrt() + eps);
        layers[i].biases.array() -= lr * (m.biases.array() / c1) / ((v.biases.array() / c2).sqrt() + eps);
    }
}

Matrix one_hot(const Labels& labels) {
    Matrix y = Matrix::Zero(static_cast<Eigen::Index>(labels.size()), SensationClass::kCount);
    for (std::size_t i = 0; i < labels.size(); ++i) {
        y(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(labels[i].index())) = 1.0;
    }
    return y;
}

namespace {

void check_classifier(const MlpModel& model) {
    if (model.layers.empty()) throw ShapeError("model has no layers");
    const auto& last = model.layers.back();
    if (last.activation != Activation::softmax || last.outputs() != SensationClass::kCount) {
        throw ShapeError("classifier output must be a 5-way softmax");
    }
}

void check_input(const MlpModel& model, const Matrix& features) {
    check_classifier(model);
    if (static_cast<std::size_t>(features.cols()) != model.input_width()) {
        throw ShapeError("input has " + std::to_string(features.cols()) + " features, model expects " +
                         std::to_string(model.input_width()));
    }
    if (!features.allFinite()) throw ShapeError("non-finite input feature");
}

LossAndGradients batch_loss_and_gradients(const std::vector<DenseLayer>& layers, const Matrix& x, const Matrix& y,
                                          bool want_grads) {
    ForwardCache cache;
    const Matrix logits = forward_logits(layers, x, cache);
    const Matrix logp = log_softmax_rows(logits);
    const double n = static_cast<double>(x.rows());
    LossAndGradients out;
    out.loss = -(logp.cwiseProduct(y)).sum() / n;
    if (want_grads) {
        const Matrix delta = (logp.array().exp().matrix() - y) / n;
        out.grads = backward_layers(layers, cache, delta);
    }
    return out;
}

}  // namespace

LossAndGradients loss_and_gradients(const MlpModel& model, const Matrix& features, const Labels& labels) {
    check_input(model, features);
    if (labels.size() != static_cast<std::size_t>(features.rows())) throw ShapeError("label count mismatch");
    return batch_loss_and_gradients(model.layers, features, one_hot(labels), true);
}

double cross_entropy(const MlpModel& model, const Matrix& features, const Labels& labels) {
    check_input(model, features);
    if (labels.size() != static_cast<std::size_t>(features.rows())) throw ShapeError("label count mismatch");
    return batch_loss_and_gradients(model.layers, features, one_hot(labels), false).loss;
}

// ---------------------------------------------------------------------------

MlpModel init_model(const std::vector<std::size_t>& widths, std::uint64_t seed, std::vector<std::string> feature_names) {
    if (widths.size() < 3) throw ShapeError("a model needs at least one hidden layer");
    if (widths.back() != SensationClass::kCount) throw ShapeError("output width must be 5");
    MlpModel model;
    model.layers = init_layers(widths, seed, Activation::relu, Activation::softmax);
    model.seed = seed;
    if (feature_names.empty()) {
        for (std::size_t i = 0; i < widths.front(); ++i) feature_names.push_back("x" + std::to_string(i));
    }
    if (feature_names.size() != widths.front()) throw ShapeError("feature name count does not match input width");
    model.feature_names = std::move(feature_names);
    return model;
}

Matrix forward(const MlpModel& model, const Matrix& features) {
    check_input(model, features);
    return forward_layers(model.layers, features);
}

TrainResult train(MlpModel model, const Matrix& features, const Labels& labels, const TrainConfig& config) {
    config.validate();
    check_input(model, features);
    const auto n = static_cast<std::size_t>(features.rows());
    if (labels.size() != n) throw ShapeError("label count mismatch");
    if (n == 0) throw TrainingError("no training rows");
    if (std::all_of(model.layers.begin(), model.layers.end(), [](const auto& l) { return l.frozen; })) {
        throw TrainingError("every layer is frozen; nothing to train");
    }

    const Matrix y = one_hot(labels);
    std::mt19937_64 rng(config.seed);
    std::vector<Eigen::Index> order(n);
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    Adam adam(model.layers, config);

    TrainResult result;
    double best = std::numeric_limits<double>::infinity();
    std::size_t since_best = 0;
    Matrix xb;
    Matrix yb;
    for (std::size_t epoch = 0; epoch < config.max_epochs; ++epoch) {
        std::shuffle(order.begin(), order.end(), rng);
        double total = 0.0;
        for (std::size_t start = 0; start < n; start += config.batch_size) {
            const std::size_t size = std::min(config.batch_size, n - start);
            xb.resize(static_cast<Eigen::Index>(size), features.cols());
            yb.resize(static_cast<Eigen::Index>(size), y.cols());
            for (std::size_t i = 0; i < size; ++i) {
                xb.row(static_cast<Eigen::Index>(i)) = features.row(order[start + i]);
                yb.row(static_cast<Eigen::Index>(i)) = y.row(order[start + i]);
            }
            auto lg = batch_loss_and_gradients(model.layers, xb, yb, true);
            if (!std::isfinite(lg.loss)) {
                throw TrainingError("loss became non-finite at epoch " + std::to_string(epoch + 1) +
                                    "; check feature scaling and learning rate");
            }
            total += lg.loss * static_cast<double>(size);
            adam.step(model.layers, lg.grads);
        }
        const double epoch_loss = total / static_cast<double>(n);
        result.loss_history.push_back(epoch_loss);
        if (config.early_stopping) {
            if (epoch_loss < best - config.min_delta) {
                best = epoch_loss;
                since_best = 0;
            } else if (++since_best >= config.patience) {
                result.stopped_early = true;
                break;
            }
        }
    }
    model.config = config;
    result.model = std::move(model);
    return result;
}

Labels argmax_rows(const Matrix& probabilities) {
    Labels out;
    out.reserve(static_cast<std::size_t>(probabilities.rows()));
    for (Eigen::Index r = 0; r < probabilities.rows(); ++r) {
        Eigen::Index best = 0;
        for (Eigen::Index c = 1; c < probabilities.cols(); ++c) {
            if (probabilities(r, c) > probabilities(r, best)) best = c;
        }
        out.push_back(SensationClass::from_index(static_cast<std::size_t>(best)));
    }
    return out;
}

Labels predict(const MlpModel& model, const Matrix& features) { return argmax_rows(forward(model, features)); }

// ---------------------------------------------------------------------------
// Serialization

namespace {

constexpr char kMagic[8] = {'T', 'C', 'M', 'L', 'P', 'M', 'O', 'D'};

class Writer {
public:
    template <typename T>
    void put(T value) {
        static_assert(std::is_trivially_copyable_v<T>);
        const auto* p = reinterpret_cast<const char*>(&value);
        out_.append(p, sizeof(T));
    }
    void put_bytes(const void* data, std::size_t size) { out_.append(static_cast<const char*>(data), size); }
    void put_string(const std::string& s) {
        put<std::uint32_t>(static_cast<std::uint32_t>(s.size()));
        out_.append(s);
    }
    std::string take() { return std::move(out_); }

private:
    std::string out_;
};

class Reader {
public:
    explicit Reader(std::string_view in) : in_(in) {}

    template <typename T>
    T get() {
        T value;
        get_bytes(&value, sizeof(T));
        return value;
    }
    void get_bytes(void* dst, std::size_t size) {
        if (in_.size() - pos_ < size) throw FormatError("model file truncated");
        std::memcpy(dst, in_.data() + pos_, size);
        pos_ += size;
    }
    std::string get_string() {
        const auto len = get<std::uint32_t>();
        if (in_.size() - pos_ < len) throw FormatError("model file truncated");
        std::string s(in_.substr(pos_, len));
        pos_ += len;
        return s;
    }
    bool at_end() const { return pos_ == in_.size(); }

private:
    std::string_view in_;
    std::size_t pos_ = 0;
};

}  // namespace

std::string serialize_model(const MlpModel& model) {
    Writer w;
    w.put_bytes(kMagic, sizeof kMagic);
    w.put<std::uint32_t>(kModelFormatVersion);
    w.put<std::uint32_t>(static_cast<std::uint32_t>(model.feature_names.size()));
    for (const auto& name : model.feature_names) w.put_string(name);
    w.put<std::uint32_t>(SensationClass::kCount);
    for (auto c : kAllClasses) w.put<std::int32_t>(c.value());
    w.put<std::uint64_t>(model.seed);
    const auto& c = model.config;
    w.put<double>(c.learning_rate);
    w.put<std::uint64_t>(c.batch_size);
    w.put<std::uint64_t>(c.max_epochs);
    w.put<double>(c.beta1);
    w.put<double>(c.beta2);
    w.put<double>(c.epsilon);
    w.put<std::uint64_t>(c.seed);
    w.put<std::uint8_t>(c.early_stopping ? 1 : 0);
    w.put<std::uint64_t>(c.patience);
    w.put<double>(c.min_delta);
    w.put<std::uint8_t>(model.retained_layer ? 1 : 0);
    w.put<std::uint64_t>(model.retained_layer.value_or(0));
    w.put<std::uint64_t>(model.retained_from);
    w.put<std::uint32_t>(static_cast<std::uint32_t>(model.layers.size()));
    for (const auto& l : model.layers) {
        w.put<std::uint32_t>(static_cast<std::uint32_t>(l.inputs()));
        w.put<std::uint32_t>(static_cast<std::uint32_t>(l.outputs()));
        w.put<std::uint8_t>(static_cast<std::uint8_t>(l.activation));
        w.put<std::uint8_t>(l.frozen ? 1 : 0);
        w.put_bytes(l.weights.data(), sizeof(double) * static_cast<std::size_t>(l.weights.size()));
        w.put_bytes(l.biases.data(), sizeof(double) * static_cast<std::size_t>(l.biases.size()));
    }
    return w.take();
}

MlpModel deserialize_model(std::string_view bytes) {
    Reader r(bytes);
    char magic[8];
    r.get_bytes(magic, sizeof magic);
    if (std::memcmp(magic, kMagic, sizeof magic) != 0) throw FormatError("not a model file (bad magic)");
    const auto version = r.get<std::uint32_t>();
    if (version != kModelFormatVersion) {
        throw FormatError("unsupported model format version " + std::to_string(version) + " (expected " +
                          std::to_string(kModelFormatVersion) + ")");
    }
    MlpModel model;
    const auto n_features = r.get<std::uint32_t>();
    for (std::uint32_t i = 0; i < n_features; ++i) model.feature_names.push_back(r.get_string());
    const auto n_classes = r.get<std::uint32_t>();
    if (n_classes != SensationClass::kCount) throw FormatError("model file declares a non-5-class output");
    for (auto c : kAllClasses) {
        if (r.get<std::int32_t>() != c.value()) throw FormatError("model file class order differs from [-2..2]");
    }
    model.seed = r.get<std::uint64_t>();
    auto& c = model.config;
    c.learning_rate = r.get<double>();
    c.batch_size = r.get<std::uint64_t>();
    c.max_epochs = r.get<std::uint64_t>();
    c.beta1 = r.get<double>();
    c.beta2 = r.get<double>();
    c.epsilon = r.get<double>();
    c.seed = r.get<std::uint64_t>();
    c.early_stopping = r.get<std::uint8_t>() != 0;
    c.patience = r.get<std::uint64_t>();
    c.min_delta = r.get<double>();
    const bool has_retained = r.get<std::uint8_t>() != 0;
    const auto retained = r.get<std::uint64_t>();
    if (has_retained) model.retained_layer = retained;
    model.retained_from = r.get<std::uint64_t>();
    const auto n_layers = r.get<std::uint32_t>();
    for (std::uint32_t i = 0; i < n_layers; ++i) {
        DenseLayer l;
        const auto in = r.get<std::uint32_t>();
        const auto out = r.get<std::uint32_t>();
        const auto act = r.get<std::uint8_t>();
        if (act > static_cast<std::uint8_t>(Activation::none)) throw FormatError("unknown activation tag");
        l.activation = static_cast<Activation>(act);
        l.frozen = r.get<std::uint8_t>() != 0;
        l.weights.resize(in, out);
        l.biases.resize(out);
        r.get_bytes(l.weights.data(), sizeof(double) * static_cast<std::size_t>(in) * out);
        r.get_bytes(l.biases.data(), sizeof(double) * out);
        if (!model.layers.empty() && model.layers.back().outputs() != in) {
            throw FormatError("model file layer shapes are inconsistent");
        }
        model.layers.push_back(std::move(l));
    }
    if (!r.at_end()) throw FormatError("trailing bytes after model");
    if (!model.layers.empty() && model.layers.front().inputs() != model.feature_names.size()) {
        throw FormatError("model file feature list does not match input width");
    }
    check_classifier(model);
    return model;
}

void save_model(const MlpModel& model, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write model '" + path.string() + "'");
    const std::string bytes = serialize_model(model);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw InputError("failed writing model '" + path.string() + "'");
}

MlpModel load_model(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open model '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return deserialize_model(buffer.str());
}

}  // namespace thermal::neural
