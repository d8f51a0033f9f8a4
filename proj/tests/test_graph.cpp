#include <gtest/gtest.h>

#include <random>

#include "dosage/errors.hpp"
#include "dosage/graph.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

namespace dosage {
namespace {

using testing::k4_pendant;
using testing::path3;
using testing::triangle;

TEST(Graph, RejectsSelfLoopsDuplicatesAndBadIds) {
  EXPECT_THROW(Graph(3, {{0, 0}}), InputError);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), InputError);
  EXPECT_THROW(Graph(2, {{0, 2}}), InputError);
}

TEST(Graph, EdgesAreCanonical) {
  const Graph g(3, {{2, 0}, {1, 0}});
  ASSERT_EQ(g.edges().size(), 2u);
  EXPECT_EQ(g.edges()[0], Edge(0, 1));
  EXPECT_EQ(g.edges()[1], Edge(0, 2));
  EXPECT_TRUE(g.has_edge(2, 0));
  EXPECT_FALSE(g.has_edge(1, 2));
}

TEST(SubgraphSelection, SortsAndDeduplicates) {
  const SubgraphSelection s{3, 1, 3, 2};
  EXPECT_EQ(s.members(), (std::vector<VertexId>{1, 2, 3}));
  EXPECT_TRUE(s.contains(2));
  EXPECT_FALSE(s.contains(0));
}

TEST(InducedEdgeCount, Examples) {
  EXPECT_EQ(induced_edge_count(triangle(), {0, 1, 2}), 3u);
  EXPECT_EQ(induced_edge_count(triangle(), {0}), 0u);
  EXPECT_EQ(induced_edge_count(k4_pendant(), {0, 1, 2, 3}), 6u);
  EXPECT_THROW(induced_edge_count(triangle(), {0, 5}), InputError);
}

TEST(Density, Examples) {
  EXPECT_EQ(density(triangle(), {0, 1, 2}), Rational(1));
  EXPECT_EQ(density(triangle(), {0}), Rational(0));
  EXPECT_EQ(density(k4_pendant(), {0, 1, 2, 3}), Rational(3, 2));
  EXPECT_FALSE(density(triangle(), SubgraphSelection{}).has_value());
}

TEST(Diameter, Examples) {
  EXPECT_EQ(diameter(triangle(), SubgraphSelection::all(triangle())), 1u);
  EXPECT_EQ(diameter(path3(), SubgraphSelection::all(path3())), 2u);
  EXPECT_EQ(diameter(Graph(2, {}), {0, 1}), kInfiniteDiameter);
  EXPECT_EQ(diameter(triangle(), {1}), 0u);
  EXPECT_THROW(diameter(triangle(), SubgraphSelection{}), InputError);
}

TEST(Diameter, UsesOnlyInducedEdges) {
  // 0 and 2 are joined only through 1.
  EXPECT_EQ(diameter(path3(), {0, 2}), kInfiniteDiameter);
}

TEST(AverageShortestPathLength, Examples) {
  EXPECT_EQ(average_shortest_path_length(path3()), Rational(4, 3));
  EXPECT_EQ(average_shortest_path_length(triangle()), Rational(1));
  // Six K4 pairs at 1, pendant at 1 from vertex 0 and 2 from the other three.
  EXPECT_EQ(average_shortest_path_length(k4_pendant()), Rational(13, 10));
  EXPECT_THROW(average_shortest_path_length(Graph(3, {{0, 1}})), InputError);
  EXPECT_THROW(average_shortest_path_length(Graph(1, {})), InputError);
}

TEST(AverageShortestPathLength, MatchesFloydWarshall) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 9;
    const Graph g = testing::random_connected(n, 0.4, rng);
    std::vector<std::int64_t> d(n * n, 1000);
    for (std::size_t v = 0; v < n; ++v) d[v * n + v] = 0;
    for (const auto& [u, v] : g.edges()) d[u * n + v] = d[v * n + u] = 1;
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) d[i * n + j] = std::min(d[i * n + j], d[i * n + k] + d[k * n + j]);
      }
    }
    std::int64_t total = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) total += d[i * n + j];
    }
    EXPECT_EQ(average_shortest_path_length(g), Rational(total, static_cast<std::int64_t>(n * (n - 1) / 2)));
  }
}

TEST(MinDegreeVertices, Examples) {
  EXPECT_EQ(min_degree_vertices(k4_pendant(), SubgraphSelection::all(k4_pendant())),
            SubgraphSelection({4}));
  EXPECT_EQ(min_degree_vertices(triangle(), SubgraphSelection::all(triangle())),
            SubgraphSelection({0, 1, 2}));
  EXPECT_EQ(min_degree_vertices(path3(), SubgraphSelection::all(path3())), SubgraphSelection({0, 2}));
  EXPECT_THROW(min_degree_vertices(path3(), SubgraphSelection{}), InputError);
}

TEST(BfsDistances, UnreachableIsEmpty) {
  const auto d = bfs_distances(Graph(3, {{0, 1}}), 0);
  EXPECT_EQ(d[1], 1u);
  EXPECT_FALSE(d[2].has_value());
}

TEST(GraphProperties, MatchBruteForceOnRandomGraphs) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 7;
    const Graph g = erdos_renyi(n, 0.4, rng);
    for (testing::Mask m = 1; m < (testing::Mask{1} << n); ++m) {
      const SubgraphSelection s(testing::mask_members(m));
      EXPECT_EQ(induced_edge_count(g, s), testing::oracle_edge_count(g, m));
      EXPECT_EQ(*density(g, s), testing::oracle_density(g, m));
      const auto d = testing::oracle_diameter(g, m);
      EXPECT_EQ(diameter(g, s), d ? *d : kInfiniteDiameter);
      std::size_t degree_sum = 0;
      for (const auto x : induced_degrees(g, s)) degree_sum += x;
      EXPECT_EQ(Rational(static_cast<std::int64_t>(degree_sum), s.size()), Rational(2) * *density(g, s));
    }
  }
}

}  // namespace
}  // namespace dosage
