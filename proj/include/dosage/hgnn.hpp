#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "dosage/hypergraph.hpp"

namespace dosage {

/// One row per vertex.
using FeatureMatrix = Eigen::MatrixXd;

enum class Activation { kIdentity, kRelu };

struct ConvLayer {
  Eigen::MatrixXd weight;  // C_in x C_out
  Activation activation = Activation::kIdentity;

  friend bool operator==(const ConvLayer& a, const ConvLayer& b) {
    return a.activation == b.activation && a.weight.rows() == b.weight.rows() &&
           a.weight.cols() == b.weight.cols() && a.weight == b.weight;
  }
};

/// P = D_v^-1/2 H W D_e^-1 H^T D_v^-1/2: vertex features averaged into each
/// hyperedge, then spread back to member vertices with symmetric normalization.
/// Throws InputError if any vertex is uncovered (run ensure_coverage first).
Eigen::MatrixXd propagation_operator(const Hypergraph& h);

/// X_{t+1} = activation(P X_t Theta_t), layer by layer.
FeatureMatrix forward(const Eigen::MatrixXd& propagation, const FeatureMatrix& x,
                      std::span<const ConvLayer> layers);
FeatureMatrix forward(const Hypergraph& h, const FeatureMatrix& x, std::span<const ConvLayer> layers);

struct TrainingConfig {
  std::size_t layers = 2;
  std::size_t hidden = 16;
  std::size_t steps = 200;
  double step_size = 0.1;
  std::uint64_t seed = 0;
};

struct Classifier {
  std::vector<ConvLayer> layers;
  std::size_t num_classes = 0;

  friend bool operator==(const Classifier&, const Classifier&) = default;
};

/// Glorot-uniform initialization; ReLU on hidden layers, identity on the output layer.
Classifier initialize_classifier(std::size_t input_dim, std::size_t num_classes,
                                 const TrainingConfig& cfg);

struct LossAndGradients {
  double loss = 0.0;                       // mean softmax cross-entropy over the mask
  std::vector<Eigen::MatrixXd> gradients;  // d loss / d weight, one per layer
};

LossAndGradients loss_and_gradients(const Eigen::MatrixXd& propagation, const FeatureMatrix& x,
                                    std::span<const ConvLayer> layers,
                                    std::span<const std::size_t> labels,
                                    const SubgraphSelection& mask);

/// Full-batch gradient descent from the seeded initialization. If `loss_history`
/// is given it receives the loss before every step plus the final loss.
Classifier train_classifier(const Hypergraph& h, const FeatureMatrix& x,
                            std::span<const std::size_t> labels, const SubgraphSelection& train_mask,
                            const TrainingConfig& cfg, std::vector<double>* loss_history = nullptr);

std::vector<std::size_t> predict(const Classifier& model, const Eigen::MatrixXd& propagation,
                                 const FeatureMatrix& x);

struct Scores {
  double accuracy = 0.0;
  double macro_f1 = 0.0;
};

/// Classes absent from the mask (and never predicted there) count as F1 = 0.
Scores score_predictions(std::span<const std::size_t> predicted, std::span<const std::size_t> labels,
                         const SubgraphSelection& mask, std::size_t num_classes);

Scores evaluate(const Classifier& model, const Hypergraph& h, const FeatureMatrix& x,
                std::span<const std::size_t> labels, const SubgraphSelection& test_mask);

}  // namespace dosage
