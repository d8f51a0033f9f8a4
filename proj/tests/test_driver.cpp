#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "dosage/driver.hpp"
#include "dosage/errors.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

namespace dosage {
namespace {

using testing::bowtie;
using testing::path3;
using testing::triangle;

DosageConfig config(std::size_t k, std::size_t alpha, std::size_t beta, Rational lambda = Rational(1),
                    std::optional<double> delta = std::nullopt) {
  DosageConfig cfg;
  cfg.k = k;
  cfg.bounds = SizeBounds(alpha, beta);
  cfg.lambda = TradeoffParam(std::move(lambda));
  cfg.delta_override = delta;
  return cfg;
}

TEST(SelectDelta, Examples) {
  EXPECT_DOUBLE_EQ(select_delta(path3()).value(), 8.0 / 3.0);
  EXPECT_DOUBLE_EQ(select_delta(Graph(8, {{0, 1}})).value(), 3.0);
  EXPECT_DOUBLE_EQ(select_delta(triangle()).value(), 2.0);
  EXPECT_DOUBLE_EQ(select_delta(path3(), 1.5).value(), 1.5);
  EXPECT_THROW(select_delta(Graph(1, {})), InputError);
}

TEST(DosageConfig, Validation) {
  EXPECT_THROW(config(0, 3, 3).validate(triangle()), InputError);
  EXPECT_THROW(config(3, 3, 3).validate(triangle()), InputError);
  EXPECT_NO_THROW(config(2, 3, 3).validate(triangle()));
}

TEST(DensestDistinct, Examples) {
  const std::vector<SubgraphSelection> abc{{0, 1, 2}};
  EXPECT_EQ(densest_distinct_subgraph(bowtie(), abc, config(2, 3, 3, Rational(1, 10)), DiameterBound(1)),
            SubgraphSelection({2, 3, 4}));
  const std::vector<SubgraphSelection> tri{{0, 1, 2}};
  EXPECT_EQ(densest_distinct_subgraph(triangle(), tri, config(1, 3, 3), DiameterBound(1)), std::nullopt);
  EXPECT_EQ(densest_distinct_subgraph(triangle(), {}, config(1, 3, 3), DiameterBound(1)),
            SubgraphSelection({0, 1, 2}));
  EXPECT_EQ(densest_distinct_subgraph(Graph(), {}, config(1, 1, 1), DiameterBound(1)), std::nullopt);
}

TEST(Dosage, BowtieFindsBothTriangles) {
  const auto result = dosage(bowtie(), config(2, 3, 3));
  ASSERT_EQ(result.subgraphs.size(), 2u);
  const std::vector<SubgraphSelection> both{{0, 1, 2}, {2, 3, 4}};
  EXPECT_TRUE(std::is_permutation(result.subgraphs.begin(), result.subgraphs.end(), both.begin()));
  EXPECT_EQ(objective(bowtie(), result.subgraphs, TradeoffParam(Rational(1))), Rational(35, 9));
}

TEST(Dosage, BowtieObjectiveIsBestOverAllPairs) {
  const Graph g = bowtie();
  const auto result = dosage(g, config(2, 3, 3));
  const auto candidates = testing::oracle_candidates(g, 3, 3, result.delta.value());
  Rational best(-1);
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    for (std::size_t j = i + 1; j < candidates.size(); ++j) {
      best = std::max(best, testing::oracle_objective(g, {candidates[i], candidates[j]}, Rational(1)));
    }
  }
  EXPECT_EQ(objective(g, result.subgraphs, TradeoffParam(Rational(1))), best);
}

TEST(Dosage, TriangleSingleEntry) {
  const auto result = dosage(triangle(), config(1, 3, 3));
  EXPECT_EQ(result.subgraphs, SubgraphCollection({{0, 1, 2}}));
}

TEST(Dosage, EdgelessGraphGivesEmptyCollection) {
  std::vector<std::string> warnings;
  set_warning_handler([&](std::string_view m) { warnings.emplace_back(m); });
  const auto result = dosage(Graph(4, {}), config(2, 2, 4, Rational(1), 1.0));
  set_warning_handler(nullptr);
  EXPECT_TRUE(result.subgraphs.empty());
  EXPECT_FALSE(warnings.empty());
}

TEST(Dosage, ShortCollectionWarns) {
  std::vector<std::string> warnings;
  set_warning_handler([&](std::string_view m) { warnings.emplace_back(m); });
  const auto result = dosage(triangle(), config(2, 3, 3));
  set_warning_handler(nullptr);
  EXPECT_EQ(result.subgraphs.size(), 1u);
  EXPECT_EQ(warnings.size(), 1u);
}

TEST(Dosage, OutputInvariantsOnRandomGraphs) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 4 + trial % 5;
    const Graph g = testing::random_connected(n, 0.5, rng);
    const auto cfg = config(3, 2, 4, Rational(1 + trial % 4, 2));
    const auto result = dosage(g, cfg);
    EXPECT_LE(result.subgraphs.size(), cfg.k);
    for (std::size_t i = 0; i < result.subgraphs.size(); ++i) {
      const auto& s = result.subgraphs[i];
      EXPECT_TRUE(cfg.bounds.admits(s.size()));
      EXPECT_TRUE(result.delta.admits(diameter(g, s)));
      for (std::size_t j = 0; j < i; ++j) EXPECT_NE(s, result.subgraphs[j]);
    }
  }
}

TEST(Verify, Examples) {
  const SubgraphCollection both{{0, 1, 2}, {2, 3, 4}};
  const auto ok = verify_solution(bowtie(), both, config(2, 3, 3), Rational(1));
  EXPECT_TRUE(ok.verdict);
  EXPECT_EQ(ok.per_entry_densities, (std::vector<Rational>{1, 1}));

  const SubgraphCollection dup{{0, 1, 2}, {0, 1, 2}};
  const auto d = verify_solution(bowtie(), dup, config(2, 3, 3), Rational(1));
  EXPECT_FALSE(d.overlap_ok);
  EXPECT_FALSE(d.verdict);

  const SubgraphCollection small{{0, 1}, {2, 3, 4}};
  const auto s = verify_solution(bowtie(), small, config(2, 3, 3), Rational(0));
  EXPECT_FALSE(s.size_ok);
  EXPECT_FALSE(s.verdict);

  const auto sparse = verify_solution(bowtie(), both, config(2, 3, 3), Rational(3, 2));
  EXPECT_FALSE(sparse.density_ok);

  const SubgraphCollection foreign{{0, 1, 9}};
  const auto f = verify_solution(bowtie(), foreign, config(2, 3, 3), Rational(0));
  EXPECT_FALSE(f.vertices_ok);
  EXPECT_FALSE(f.verdict);
}

}  // namespace
}  // namespace dosage
