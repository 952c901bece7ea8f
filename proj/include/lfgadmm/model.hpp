#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "lfgadmm/common.hpp"

namespace lfgadmm::model {

enum class Activation { ReLU, Identity, SoftmaxOutput };

// One dense layer. The flattened parameter vector of a layer holds the
// weight matrix in input-major order (index i*output_dim + j maps input i to
// output j) followed by the biases, so each layer is a single contiguous
// vector that can be exchanged, cached, and penalized as a unit.
struct LayerSpec {
    int input_dim = 0;
    int output_dim = 0;
    Activation activation = Activation::Identity;

    long long param_count() const {
        return static_cast<long long>(input_dim) * output_dim + output_dim;
    }
};

using ModelSpec = std::vector<LayerSpec>;

// Throws ConfigError unless consecutive layers chain, dimensions are positive,
// and SoftmaxOutput appears on the last layer only (classification) or not at
// all (regression).
void validate_spec(const ModelSpec& spec);

bool is_classifier(const ModelSpec& spec);
long long total_param_count(const ModelSpec& spec);

// Index of the layer with the most parameters; ties break to the lowest index.
int largest_layer(const ModelSpec& spec);

// Standard MLP classifier chain: ReLU hidden layers, softmax output.
ModelSpec mlp_classifier_spec(int input_dim, const std::vector<int>& hidden_dims, int n_classes);

// Per-layer flattened parameter vectors for one worker's model.
struct LayeredParams {
    std::vector<Eigen::VectorXd> layers;

    bool all_finite() const;
    bool same_shape(const LayeredParams& other) const;
};

enum class InitScheme { Zeros, SmallUniform };

// Zeros: every parameter 0. SmallUniform: weights uniform in
// [-1/sqrt(input_dim), +1/sqrt(input_dim)], biases 0, deterministic per seed.
LayeredParams init_params(const ModelSpec& spec, std::uint64_t seed, InitScheme scheme);

struct MiniBatch {
    Eigen::MatrixXd inputs;   // batch_size x input_dim
    Eigen::VectorXi labels;   // class indices (classification)
    Eigen::MatrixXd targets;  // real targets  (regression)
};

// Mean cross-entropy over the batch for classifiers, mean squared error
// (per-sample squared L2, averaged over the batch) for regression.
double forward_loss(const ModelSpec& spec, const LayeredParams& params, const MiniBatch& batch);

// Gradient of forward_loss with respect to every parameter, same shape as params.
LayeredParams grad(const ModelSpec& spec, const LayeredParams& params, const MiniBatch& batch);

// Argmax predictions; ties break to the lowest class index.
Eigen::VectorXi predict(const ModelSpec& spec, const LayeredParams& params,
                        const Eigen::MatrixXd& inputs);

// Fraction of correct argmax classifications on a non-empty test set.
double accuracy(const ModelSpec& spec, const LayeredParams& params,
                const Eigen::MatrixXd& inputs, const Eigen::VectorXi& labels);

// params -= step * direction
void axpy_inplace(LayeredParams& params, double step, const LayeredParams& direction);

// Elementwise mean of several parameter sets (all same shape).
LayeredParams mean_params(const std::vector<const LayeredParams*>& sets);

}  // namespace lfgadmm::model
