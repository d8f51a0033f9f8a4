#include "dosage/hgnn.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "dosage/errors.hpp"
#include "dosage/generators.hpp"

namespace dosage {

namespace {

Eigen::MatrixXd activate(const Eigen::MatrixXd& z, Activation activation) {
  return activation == Activation::kRelu ? Eigen::MatrixXd(z.cwiseMax(0.0)) : z;
}

Eigen::MatrixXd activation_derivative(const Eigen::MatrixXd& z, Activation activation) {
  if (activation == Activation::kIdentity) return Eigen::MatrixXd::Ones(z.rows(), z.cols());
  return (z.array() > 0.0).cast<double>().matrix();
}

void check_chain(const Eigen::MatrixXd& propagation, const FeatureMatrix& x,
                 std::span<const ConvLayer> layers) {
  if (propagation.rows() != x.rows()) {
    throw InputError("feature matrix has " + std::to_string(x.rows()) + " rows for " +
                     std::to_string(propagation.rows()) + " vertices");
  }
  Eigen::Index width = x.cols();
  for (std::size_t l = 0; l < layers.size(); ++l) {
    if (layers[l].weight.rows() != width) {
      throw InputError("layer " + std::to_string(l) + " expects " +
                       std::to_string(layers[l].weight.rows()) + " input columns, got " +
                       std::to_string(width));
    }
    width = layers[l].weight.cols();
  }
}

std::size_t class_count(std::span<const std::size_t> labels) {
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

}  // namespace

Eigen::MatrixXd propagation_operator(const Hypergraph& h) {
  const auto coverage = coverage_report(h);
  if (!coverage.full()) {
    throw InputError("vertex " + std::to_string(coverage.uncovered.front()) +
                     " belongs to no hyperedge; the propagation operator needs full coverage "
                     "(apply ensure_coverage / --ensure-coverage)");
  }
  const Eigen::MatrixXd H = incidence_matrix(h);
  const Eigen::VectorXd dv = vertex_degrees(h);
  Eigen::VectorXd edge_scale(static_cast<Eigen::Index>(h.edge_count()));
  for (std::size_t e = 0; e < h.edge_count(); ++e) {
    edge_scale(static_cast<Eigen::Index>(e)) =
        h.weight(e) / static_cast<double>(hyperedge_degree(h, e));
  }
  const Eigen::VectorXd dv_inv_sqrt = dv.array().rsqrt().matrix();
  const Eigen::MatrixXd left = dv_inv_sqrt.asDiagonal() * H;
  Eigen::MatrixXd P = left * edge_scale.asDiagonal() * left.transpose();
  // Remove round-off asymmetry.
  P = 0.5 * (P + P.transpose()).eval();
  return P;
}

FeatureMatrix forward(const Eigen::MatrixXd& propagation, const FeatureMatrix& x,
                      std::span<const ConvLayer> layers) {
  check_chain(propagation, x, layers);
  FeatureMatrix current = x;
  for (const auto& layer : layers) {
    current = activate(propagation * current * layer.weight, layer.activation);
  }
  return current;
}

FeatureMatrix forward(const Hypergraph& h, const FeatureMatrix& x, std::span<const ConvLayer> layers) {
  return forward(propagation_operator(h), x, layers);
}

Classifier initialize_classifier(std::size_t input_dim, std::size_t num_classes,
                                 const TrainingConfig& cfg) {
  if (cfg.layers < 1) throw InputError("classifier needs at least one layer");
  if (input_dim == 0 || num_classes == 0) throw InputError("classifier dimensions must be positive");
  std::mt19937_64 rng(cfg.seed);
  Classifier model;
  model.num_classes = num_classes;
  std::size_t fan_in = input_dim;
  for (std::size_t l = 0; l < cfg.layers; ++l) {
    const bool last = l + 1 == cfg.layers;
    const std::size_t fan_out = last ? num_classes : cfg.hidden;
    const double limit = std::sqrt(6.0 / static_cast<double>(fan_in + fan_out));
    Eigen::MatrixXd weight(static_cast<Eigen::Index>(fan_in), static_cast<Eigen::Index>(fan_out));
    for (Eigen::Index i = 0; i < weight.rows(); ++i) {
      for (Eigen::Index j = 0; j < weight.cols(); ++j) {
        weight(i, j) = limit * (2.0 * unit_uniform(rng) - 1.0);
      }
    }
    model.layers.push_back({std::move(weight), last ? Activation::kIdentity : Activation::kRelu});
    fan_in = fan_out;
  }
  return model;
}

LossAndGradients loss_and_gradients(const Eigen::MatrixXd& propagation, const FeatureMatrix& x,
                                    std::span<const ConvLayer> layers,
                                    std::span<const std::size_t> labels,
                                    const SubgraphSelection& mask) {
  check_chain(propagation, x, layers);
  if (layers.empty()) throw InputError("loss needs at least one layer");
  if (mask.empty()) throw InputError("loss over an empty vertex mask");
  if (labels.size() != static_cast<std::size_t>(x.rows())) {
    throw InputError("label count does not match the vertex count");
  }
  if (mask.members().back() >= labels.size()) throw InputError("mask vertex out of range");

  // Forward pass, keeping every intermediate for the backward pass.
  std::vector<Eigen::MatrixXd> propagated;   // P A_l
  std::vector<Eigen::MatrixXd> preactivated;  // P A_l W_l
  Eigen::MatrixXd current = x;
  for (const auto& layer : layers) {
    propagated.push_back(propagation * current);
    preactivated.push_back(propagated.back() * layer.weight);
    current = activate(preactivated.back(), layer.activation);
  }

  const Eigen::Index classes = current.cols();
  const double scale = 1.0 / static_cast<double>(mask.size());
  LossAndGradients result;
  Eigen::MatrixXd upstream = Eigen::MatrixXd::Zero(current.rows(), classes);
  for (const auto v : mask) {
    const auto label = static_cast<Eigen::Index>(labels[v]);
    if (label >= classes) throw InputError("label exceeds the model's class count");
    const Eigen::RowVectorXd logits = current.row(v);
    const double top = logits.maxCoeff();
    const Eigen::RowVectorXd shifted = logits.array() - top;
    const double log_normalizer = std::log(shifted.array().exp().sum());
    result.loss -= scale * (shifted(label) - log_normalizer);
    Eigen::RowVectorXd probabilities = (shifted.array() - log_normalizer).exp().matrix();
    probabilities(label) -= 1.0;
    upstream.row(v) = scale * probabilities;
  }

  result.gradients.resize(layers.size());
  for (std::size_t l = layers.size(); l-- > 0;) {
    const Eigen::MatrixXd delta =
        upstream.cwiseProduct(activation_derivative(preactivated[l], layers[l].activation));
    result.gradients[l] = propagated[l].transpose() * delta;
    if (l > 0) upstream = propagation.transpose() * (delta * layers[l].weight.transpose());
  }
  return result;
}

Classifier train_classifier(const Hypergraph& h, const FeatureMatrix& x,
                            std::span<const std::size_t> labels, const SubgraphSelection& train_mask,
                            const TrainingConfig& cfg, std::vector<double>* loss_history) {
  if (train_mask.empty()) throw InputError("training mask is empty");
  if (labels.size() != h.vertex_count()) throw InputError("label count does not match the vertex count");
  if (train_mask.members().back() >= labels.size()) throw InputError("training vertex out of range");
  const std::size_t num_classes = class_count(labels);
  if (num_classes < 2) throw InputError("classification needs at least two classes");
  std::vector<char> seen(num_classes, 0);
  for (const auto v : train_mask) seen[labels[v]] = 1;
  for (std::size_t c = 0; c < num_classes; ++c) {
    if (!seen[c]) throw InputError("class " + std::to_string(c) + " has no training vertex");
  }

  const Eigen::MatrixXd P = propagation_operator(h);
  Classifier model = initialize_classifier(static_cast<std::size_t>(x.cols()), num_classes, cfg);
  for (std::size_t step = 0; step < cfg.steps; ++step) {
    const auto grads = loss_and_gradients(P, x, model.layers, labels, train_mask);
    if (loss_history) loss_history->push_back(grads.loss);
    for (std::size_t l = 0; l < model.layers.size(); ++l) {
      model.layers[l].weight -= cfg.step_size * grads.gradients[l];
    }
  }
  if (loss_history) {
    loss_history->push_back(loss_and_gradients(P, x, model.layers, labels, train_mask).loss);
  }
  return model;
}

std::vector<std::size_t> predict(const Classifier& model, const Eigen::MatrixXd& propagation,
                                 const FeatureMatrix& x) {
  const FeatureMatrix logits = forward(propagation, x, model.layers);
  std::vector<std::size_t> predicted(static_cast<std::size_t>(logits.rows()));
  for (Eigen::Index v = 0; v < logits.rows(); ++v) {
    Eigen::Index best = 0;
    logits.row(v).maxCoeff(&best);
    predicted[static_cast<std::size_t>(v)] = static_cast<std::size_t>(best);
  }
  return predicted;
}

Scores score_predictions(std::span<const std::size_t> predicted, std::span<const std::size_t> labels,
                         const SubgraphSelection& mask, std::size_t num_classes) {
  if (mask.empty()) throw InputError("evaluation mask is empty");
  if (mask.members().back() >= labels.size() || mask.members().back() >= predicted.size()) {
    throw InputError("evaluation mask vertex out of range");
  }
  std::vector<std::size_t> true_pos(num_classes, 0);
  std::vector<std::size_t> false_pos(num_classes, 0);
  std::vector<std::size_t> false_neg(num_classes, 0);
  std::size_t correct = 0;
  for (const auto v : mask) {
    const auto truth = labels[v];
    const auto guess = predicted[v];
    if (truth >= num_classes || guess >= num_classes) throw InputError("class id out of range");
    if (truth == guess) {
      ++correct;
      ++true_pos[truth];
    } else {
      ++false_pos[guess];
      ++false_neg[truth];
    }
  }
  Scores scores;
  scores.accuracy = static_cast<double>(correct) / static_cast<double>(mask.size());
  double f1_sum = 0.0;
  for (std::size_t c = 0; c < num_classes; ++c) {
    const auto denominator = 2 * true_pos[c] + false_pos[c] + false_neg[c];
    if (denominator > 0) f1_sum += 2.0 * static_cast<double>(true_pos[c]) / static_cast<double>(denominator);
  }
  scores.macro_f1 = num_classes == 0 ? 0.0 : f1_sum / static_cast<double>(num_classes);
  return scores;
}

Scores evaluate(const Classifier& model, const Hypergraph& h, const FeatureMatrix& x,
                std::span<const std::size_t> labels, const SubgraphSelection& test_mask) {
  if (test_mask.empty()) throw InputError("evaluation mask is empty");
  const auto predicted = predict(model, propagation_operator(h), x);
  return score_predictions(predicted, labels, test_mask, model.num_classes);
}

}  // namespace dosage
