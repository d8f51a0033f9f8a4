#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "dosage/errors.hpp"
#include "dosage/generators.hpp"
#include "dosage/hgnn.hpp"

namespace dosage {
namespace {

ConvLayer layer(Eigen::MatrixXd weight, Activation act = Activation::kIdentity) {
  return ConvLayer{std::move(weight), act};
}

TEST(Propagation, Examples) {
  const auto p = propagation_operator(Hypergraph(2, {{0, 1}}));
  EXPECT_TRUE(p.isApprox(Eigen::MatrixXd::Constant(2, 2, 0.5), 1e-15));

  const auto blocks = propagation_operator(Hypergraph(4, {{0, 1}, {2, 3}}));
  EXPECT_EQ(blocks.block(0, 2, 2, 2), Eigen::MatrixXd::Zero(2, 2));
  EXPECT_EQ(blocks.block(2, 0, 2, 2), Eigen::MatrixXd::Zero(2, 2));
}

TEST(Propagation, UncoveredVertexNamesRemedy) {
  try {
    propagation_operator(Hypergraph(3, {{0, 1}}));
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("ensure_coverage"), std::string::npos);
  }
}

TEST(Propagation, SpectralProperties) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 3 + trial;
    std::vector<SubgraphSelection> edges;
    for (VertexId v = 0; v < n; ++v) {
      edges.push_back(SubgraphSelection{v, static_cast<VertexId>((v + 1 + rng() % (n - 1)) % n)});
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    std::vector<double> weights;
    for (std::size_t e = 0; e < edges.size(); ++e) weights.push_back(0.5 + unit_uniform(rng));
    const Hypergraph h(n, edges, weights);
    const auto p = propagation_operator(h);
    EXPECT_LE((p - p.transpose()).cwiseAbs().maxCoeff(), 1e-10);
    const Eigen::VectorXd root = vertex_degrees(h).cwiseSqrt();
    EXPECT_LE((p * root - root).cwiseAbs().maxCoeff(), 1e-10);
    const Eigen::VectorXd eig = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(p).eigenvalues();
    EXPECT_GE(eig.minCoeff(), -1 - 1e-8);
    EXPECT_LE(eig.maxCoeff(), 1 + 1e-8);
  }
}

TEST(Forward, Examples) {
  const Hypergraph h(2, {{0, 1}});
  Eigen::MatrixXd x(2, 1);
  x << 1, 3;
  const std::vector<ConvLayer> one{layer(Eigen::MatrixXd::Ones(1, 1))};
  EXPECT_TRUE(forward(h, x, one).isApprox(Eigen::MatrixXd::Constant(2, 1, 2.0), 1e-15));

  const std::vector<ConvLayer> zero{layer(Eigen::MatrixXd::Zero(1, 3)), layer(Eigen::MatrixXd::Zero(3, 2))};
  EXPECT_EQ(forward(h, x, zero), Eigen::MatrixXd::Zero(2, 2));

  const std::vector<ConvLayer> bad{layer(Eigen::MatrixXd::Ones(2, 1))};
  EXPECT_THROW(forward(h, x, bad), InputError);
}

TEST(Forward, FixedPointPassesThroughIdentityLayers) {
  const Hypergraph h(4, {{0, 1, 2}, {2, 3}}, {1.5, 0.5});
  const Eigen::VectorXd root = vertex_degrees(h).cwiseSqrt();
  const std::vector<ConvLayer> identity{layer(Eigen::MatrixXd::Identity(1, 1)),
                                        layer(Eigen::MatrixXd::Identity(1, 1))};
  EXPECT_TRUE(forward(h, FeatureMatrix(root), identity).isApprox(FeatureMatrix(root), 1e-12));
}

TEST(Gradients, MatchCentralDifferences) {
  std::mt19937_64 rng(43);
  const Hypergraph h(5, {{0, 1, 2}, {2, 3}, {3, 4}, {0, 4}});
  const Eigen::MatrixXd p = propagation_operator(h);
  FeatureMatrix x(5, 3);
  for (Eigen::Index i = 0; i < x.size(); ++i) x(i) = unit_uniform(rng) - 0.5;
  const std::vector<std::size_t> labels{0, 1, 2, 1, 0};
  const SubgraphSelection mask{0, 1, 2, 4};
  auto model = initialize_classifier(3, 3, {.layers = 2, .hidden = 4, .seed = 3});
  const auto analytic = loss_and_gradients(p, x, model.layers, labels, mask);
  const double step = 1e-5;
  for (std::size_t l = 0; l < model.layers.size(); ++l) {
    Eigen::MatrixXd numeric(model.layers[l].weight.rows(), model.layers[l].weight.cols());
    for (Eigen::Index i = 0; i < numeric.size(); ++i) {
      const double saved = model.layers[l].weight(i);
      model.layers[l].weight(i) = saved + step;
      const double up = loss_and_gradients(p, x, model.layers, labels, mask).loss;
      model.layers[l].weight(i) = saved - step;
      const double down = loss_and_gradients(p, x, model.layers, labels, mask).loss;
      model.layers[l].weight(i) = saved;
      numeric(i) = (up - down) / (2 * step);
    }
    const double rel = (numeric - analytic.gradients[l]).norm() /
                       std::max(1e-12, numeric.norm() + analytic.gradients[l].norm());
    EXPECT_LE(rel, 1e-4) << "layer " << l;
  }
}

TEST(Train, SeparableFeaturesFitExactly) {
  const std::size_t n = 8;
  std::vector<SubgraphSelection> edges{{0, 1}, {2, 3}, {4, 5}, {6, 7}};
  const Hypergraph h(n, edges);
  FeatureMatrix x(n, 2);
  std::vector<std::size_t> labels(n);
  for (std::size_t v = 0; v < n; ++v) {
    const double sign = v < 4 ? -1.0 : 1.0;
    x(static_cast<Eigen::Index>(v), 0) = sign * (1.0 + 0.1 * static_cast<double>(v));
    x(static_cast<Eigen::Index>(v), 1) = 1.0;
    labels[v] = v < 4 ? 0 : 1;
  }
  const auto all = SubgraphSelection::all(Graph(n, {}));
  std::vector<double> history;
  const auto model = train_classifier(h, x, labels, all, {.steps = 500, .step_size = 0.1, .seed = 1}, &history);
  EXPECT_EQ(evaluate(model, h, x, labels, all).accuracy, 1.0);
  EXPECT_EQ(history.size(), 501u);
  EXPECT_LT(history.back(), history.front());
}

TEST(Train, ZeroStepsReturnsInitialization) {
  const Hypergraph h(4, {{0, 1}, {2, 3}});
  const FeatureMatrix x = identity_features(4);
  const std::vector<std::size_t> labels{0, 0, 1, 1};
  const TrainingConfig cfg{.steps = 0, .seed = 9};
  EXPECT_EQ(train_classifier(h, x, labels, {0, 2}, cfg), initialize_classifier(4, 2, cfg));
}

TEST(Train, RejectsDegenerateInput) {
  const Hypergraph h(4, {{0, 1}, {2, 3}});
  const FeatureMatrix x = identity_features(4);
  const std::vector<std::size_t> one_class{0, 0, 0, 0};
  EXPECT_THROW(train_classifier(h, x, one_class, {0, 1}, {}), InputError);
  const std::vector<std::size_t> labels{0, 0, 1, 1};
  EXPECT_THROW(train_classifier(h, x, labels, {}, {}), InputError);
}

TEST(Train, SeededRunsAreIdentical) {
  const Hypergraph h(4, {{0, 1}, {2, 3}, {1, 2}});
  const FeatureMatrix x = identity_features(4);
  const std::vector<std::size_t> labels{0, 0, 1, 1};
  const TrainingConfig cfg{.steps = 20, .seed = 5};
  EXPECT_EQ(train_classifier(h, x, labels, {0, 3}, cfg), train_classifier(h, x, labels, {0, 3}, cfg));
}

TEST(Scores, Examples) {
  const SubgraphSelection mask{0, 1, 2, 3};
  const std::vector<std::size_t> labels{0, 1, 0, 1};
  EXPECT_EQ(score_predictions(labels, labels, mask, 2).accuracy, 1.0);
  EXPECT_EQ(score_predictions(labels, labels, mask, 2).macro_f1, 1.0);
  const std::vector<std::size_t> zeros{0, 0, 0, 0};
  EXPECT_EQ(score_predictions(zeros, labels, mask, 2).accuracy, 0.5);

  // Truth 0: two right, one called 1. Truth 1: three right.
  const std::vector<std::size_t> truth{0, 0, 0, 1, 1, 1};
  const std::vector<std::size_t> guess{0, 0, 1, 1, 1, 1};
  const auto s = score_predictions(guess, truth, {0, 1, 2, 3, 4, 5}, 2);
  EXPECT_NEAR(s.accuracy, 5.0 / 6.0, 1e-12);
  EXPECT_NEAR(s.macro_f1, (0.8 + 6.0 / 7.0) / 2, 1e-12);
  EXPECT_NEAR(s.macro_f1, 0.829, 1e-3);

  EXPECT_THROW(score_predictions(labels, labels, {}, 2), InputError);
}

}  // namespace
}  // namespace dosage
