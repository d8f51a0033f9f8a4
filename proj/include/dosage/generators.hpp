#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <span>
#include <vector>

#include "dosage/graph.hpp"
#include "dosage/hgnn.hpp"

namespace dosage {

// Portable draws, identical across standard library implementations.

/// Uniform in [0, 1) from the top 53 bits.
inline double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform in [0, bound), bound > 0, by rejection.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t draw = rng();
  while (draw >= limit) draw = rng();
  return draw % bound;
}

template <typename T>
void shuffle(std::vector<T>& items, std::mt19937_64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::swap(items[i - 1], items[uniform_below(rng, i)]);
  }
}

/// G(n, p).
Graph erdos_renyi(std::size_t n, double p, std::mt19937_64& rng);

struct PlantedPartition {
  Graph graph;
  std::vector<std::size_t> labels;  // community id per vertex
};

/// Consecutive communities of the given sizes, intra-community edge probability
/// `p_intra`, plus `bridges` distinct random edges between different communities.
PlantedPartition planted_partition(std::span<const std::size_t> community_sizes, double p_intra,
                                   std::size_t bridges, std::uint64_t seed);

struct Split {
  SubgraphSelection train;
  SubgraphSelection test;
};

/// Per class, round(train_fraction * class size) vertices (at least one) go to train.
Split stratified_split(std::span<const std::size_t> labels, double train_fraction, std::uint64_t seed);

/// N x N identity: one indicator column per vertex.
FeatureMatrix identity_features(std::size_t n);

/// One-hot graph degree, columns 0..max degree.
FeatureMatrix degree_features(const Graph& g);

}  // namespace dosage
