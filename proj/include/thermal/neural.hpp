#pragma once

#include "thermal/types.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace thermal::neural {

enum class Activation : std::uint8_t { relu, softmax, none };

struct DenseLayer {
    Matrix weights;  // [in x out]
    RowVector biases;  // [out]
    Activation activation = Activation::relu;
    bool frozen = false;

    std::size_t inputs() const { return static_cast<std::size_t>(weights.rows()); }
    std::size_t outputs() const { return static_cast<std::size_t>(weights.cols()); }
    std::size_t parameter_count() const { return inputs() * outputs() + outputs(); }
};

struct TrainConfig {
    double learning_rate = 0.001;
    std::size_t batch_size = 200;
    std::size_t max_epochs = 500;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;
    std::uint64_t seed = 0;
    // Stop when the epoch loss has not improved by min_delta for `patience` epochs.
    bool early_stopping = false;
    std::size_t patience = 25;
    double min_delta = 1e-4;

    void validate() const;
    friend bool operator==(const TrainConfig&, const TrainConfig&) = default;
};

/// Five-way softmax classifier over ReLU hidden layers.
struct MlpModel {
    std::vector<DenseLayer> layers;
    std::vector<std::string> feature_names;
    std::uint64_t seed = 0;
    TrainConfig config;
    // Set on transferred models: which layer was copied and from which source.
    std::optional<std::size_t> retained_layer;
    std::uint64_t retained_from = 0;

    std::size_t input_width() const { return layers.empty() ? 0 : layers.front().inputs(); }
    std::size_t hidden_layer_count() const { return layers.empty() ? 0 : layers.size() - 1; }
    std::size_t parameter_count() const;
    /// Content hash of shapes, weights and feature names.
    std::uint64_t fingerprint() const;
};

// ---------------------------------------------------------------------------
// Layer-stack primitives, shared with the GAN resampler.

/// He-uniform weights (limit sqrt(6 / fan_in)), zero biases. `widths` includes
/// the input width. Hidden layers get `hidden`, the last layer `output`.
std::vector<DenseLayer> init_layers(const std::vector<std::size_t>& widths, std::uint64_t seed,
                                    Activation hidden = Activation::relu, Activation output = Activation::softmax);

struct ForwardCache {
    // outputs[0] is the input; outputs[i + 1] is layer i's post-activation.
    std::vector<Matrix> outputs;
};

Matrix forward_layers(const std::vector<DenseLayer>& layers, const Matrix& input, ForwardCache* cache = nullptr);

struct LayerGradients {
    Matrix weights;
    RowVector biases;
};

/// Backpropagates `delta`, the loss gradient with respect to the last layer's
/// pre-activation. When `input_grad` is set it receives dL/d(input).
std::vector<LayerGradients> backward_layers(const std::vector<DenseLayer>& layers, const ForwardCache& cache,
                                            Matrix delta, Matrix* input_grad = nullptr);

/// Adam moment state for one layer stack.
class Adam {
public:
    Adam(const std::vector<DenseLayer>& layers, const TrainConfig& config);
    /// Updates every non-frozen layer in place.
    void step(std::vector<DenseLayer>& layers, const std::vector<LayerGradients>& grads);

private:
    TrainConfig config_;
    std::vector<LayerGradients> m_;
    std::vector<LayerGradients> v_;
    std::size_t t_ = 0;
};

/// One-hot matrix in the order [-2, -1, 0, +1, +2].
Matrix one_hot(const Labels& labels);

struct LossAndGradients {
    double loss = 0;  // mean categorical cross-entropy
    std::vector<LayerGradients> grads;
};

LossAndGradients loss_and_gradients(const MlpModel& model, const Matrix& features, const Labels& labels);
double cross_entropy(const MlpModel& model, const Matrix& features, const Labels& labels);

// ---------------------------------------------------------------------------
// Model operations

/// `widths` = [inputs, hidden..., 5]. Same seed gives bit-identical weights.
MlpModel init_model(const std::vector<std::size_t>& widths, std::uint64_t seed,
                    std::vector<std::string> feature_names = {});

/// Class probabilities, one row per input row.
Matrix forward(const MlpModel& model, const Matrix& features);

struct TrainResult {
    MlpModel model;
    std::vector<double> loss_history;  // mean loss per epoch
    bool stopped_early = false;
};

TrainResult train(MlpModel model, const Matrix& features, const Labels& labels, const TrainConfig& config);

/// Argmax over probabilities; ties go to the lower class.
Labels predict(const MlpModel& model, const Matrix& features);
Labels argmax_rows(const Matrix& probabilities);

// ---------------------------------------------------------------------------
// Model files
//
// Little-endian binary:
//   magic "TCMLPMOD", u32 version (=1)
//   u32 n_features, n_features x (u32 length, bytes)
//   u32 n_classes (=5), n_classes x i32 class value
//   u64 model seed
//   TrainConfig: f64 lr, u64 batch, u64 epochs, f64 beta1, f64 beta2, f64 eps,
//                u64 seed, u8 early_stopping, u64 patience, f64 min_delta
//   u8 has_retained, u64 retained_layer, u64 retained_from
//   u32 n_layers, per layer: u32 in, u32 out, u8 activation, u8 frozen,
//                            in*out f64 row-major weights, out f64 biases

inline constexpr std::uint32_t kModelFormatVersion = 1;

void save_model(const MlpModel& model, const std::filesystem::path& path);
MlpModel load_model(const std::filesystem::path& path);
std::string serialize_model(const MlpModel& model);
MlpModel deserialize_model(std::string_view bytes);

}  // namespace thermal::neural
