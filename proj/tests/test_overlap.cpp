#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "dosage/errors.hpp"
#include "dosage/overlap.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

namespace dosage {
namespace {

using testing::bowtie;

TEST(Distance, Examples) {
  EXPECT_EQ(overlap_distance({1, 2, 3}, {1, 2, 3}), Rational(0));
  EXPECT_EQ(overlap_distance({1, 2}, {3, 4}), Rational(2));
  EXPECT_EQ(overlap_distance({1, 2, 3}, {3, 4, 5}), Rational(17, 9));
  EXPECT_NEAR(distance({1, 2, 3}, {3, 4, 5}), 1.8889, 1e-4);
}

TEST(Distance, EmptySetIsTwo) {
  EXPECT_EQ(overlap_distance({}, {1}), Rational(2));
  EXPECT_EQ(overlap_distance({}, {}), Rational(2));
}

TEST(Distance, RandomPairsMatchFormula) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto a = static_cast<testing::Mask>(rng() & 0xfff);
    const auto b = static_cast<testing::Mask>(rng() & 0xfff);
    const SubgraphSelection u(testing::mask_members(a));
    const SubgraphSelection z(testing::mask_members(b));
    const Rational d = overlap_distance(u, z);
    EXPECT_EQ(d, testing::oracle_distance(a, b));
    EXPECT_EQ(d, overlap_distance(z, u));
    EXPECT_GE(d, Rational(0));
    EXPECT_LE(d, Rational(2));
  }
}

TEST(IsDistinct, Examples) {
  const std::vector<SubgraphSelection> same{{1, 2}};
  const std::vector<SubgraphSelection> superset{{1, 2, 3}};
  EXPECT_FALSE(is_distinct({1, 2}, same));
  EXPECT_TRUE(is_distinct({1, 2}, superset));
  EXPECT_TRUE(is_distinct({1, 2}, {}));
}

TEST(TradeoffParam, RequiresPositive) {
  EXPECT_THROW(TradeoffParam(Rational(0)), InputError);
  EXPECT_THROW(TradeoffParam::parse("-1"), InputError);
  EXPECT_EQ(TradeoffParam::parse("0.1").value(), Rational(1, 10));
}

TEST(Objective, BowtieExamples) {
  const std::vector<SubgraphSelection> w{{0, 1, 2}, {2, 3, 4}};
  EXPECT_EQ(objective(bowtie(), w, TradeoffParam(Rational(1))), Rational(35, 9));
  EXPECT_EQ(objective(bowtie(), w, TradeoffParam::parse("0.5")), Rational(2) + Rational(17, 18));
  EXPECT_NEAR(objective(bowtie(), w, TradeoffParam::parse("0.5")).to_double(), 2.9444, 1e-4);
}

TEST(Objective, SingleEntryIsItsDensity) {
  const std::vector<SubgraphSelection> w{{0, 1, 2, 3}};
  const Graph g = testing::k4_pendant();
  for (const char* lambda : {"0.1", "1", "7"}) {
    EXPECT_EQ(objective(g, w, TradeoffParam::parse(lambda)), Rational(3, 2));
  }
}

TEST(Objective, EmptyEntryIsAnError) {
  const std::vector<SubgraphSelection> w{{0, 1}, {}};
  EXPECT_THROW(objective(bowtie(), w, TradeoffParam(Rational(1))), InputError);
}

TEST(Objective, MatchesOracleOnRandomCollections) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 4 + trial % 5;
    const Graph g = erdos_renyi(n, 0.5, rng);
    std::vector<testing::Mask> masks;
    SubgraphCollection w;
    for (int i = 0; i < 1 + trial % 4; ++i) {
      testing::Mask m = 0;
      while (m == 0) m = static_cast<testing::Mask>(rng() & ((1U << n) - 1));
      masks.push_back(m);
      w.emplace_back(testing::mask_members(m));
    }
    const Rational lambda(1 + trial % 3, 1 + trial % 7);
    EXPECT_EQ(objective(g, w, TradeoffParam(lambda)), testing::oracle_objective(g, masks, lambda));
  }
}

}  // namespace
}  // namespace dosage
