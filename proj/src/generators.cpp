#include "dosage/generators.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "dosage/errors.hpp"

namespace dosage {

Graph erdos_renyi(std::size_t n, double p, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (unit_uniform(rng) < p) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

PlantedPartition planted_partition(std::span<const std::size_t> community_sizes, double p_intra,
                                   std::size_t bridges, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  PlantedPartition result;
  for (std::size_t c = 0; c < community_sizes.size(); ++c) {
    result.labels.insert(result.labels.end(), community_sizes[c], c);
  }
  const std::size_t n = result.labels.size();

  std::vector<Edge> edges;
  std::vector<Edge> cross;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (result.labels[u] == result.labels[v]) {
        if (unit_uniform(rng) < p_intra) edges.emplace_back(u, v);
      } else {
        cross.emplace_back(u, v);
      }
    }
  }
  if (bridges > cross.size()) throw InputError("more bridge edges requested than vertex pairs available");
  shuffle(cross, rng);
  edges.insert(edges.end(), cross.begin(), cross.begin() + static_cast<std::ptrdiff_t>(bridges));
  result.graph = Graph(n, edges);
  return result;
}

Split stratified_split(std::span<const std::size_t> labels, double train_fraction, std::uint64_t seed) {
  if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
    throw InputError("train fraction must lie strictly between 0 and 1");
  }
  std::mt19937_64 rng(seed);
  const std::size_t classes = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
  std::vector<VertexId> train;
  std::vector<VertexId> test;
  for (std::size_t c = 0; c < classes; ++c) {
    std::vector<VertexId> members;
    for (VertexId v = 0; v < labels.size(); ++v) {
      if (labels[v] == c) members.push_back(v);
    }
    if (members.empty()) continue;
    shuffle(members, rng);
    auto take = static_cast<std::size_t>(std::llround(train_fraction * static_cast<double>(members.size())));
    take = std::clamp<std::size_t>(take, 1, members.size());
    train.insert(train.end(), members.begin(), members.begin() + static_cast<std::ptrdiff_t>(take));
    test.insert(test.end(), members.begin() + static_cast<std::ptrdiff_t>(take), members.end());
  }
  return {SubgraphSelection(std::move(train)), SubgraphSelection(std::move(test))};
}

FeatureMatrix identity_features(std::size_t n) {
  return FeatureMatrix::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
}

FeatureMatrix degree_features(const Graph& g) {
  std::size_t max_degree = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) max_degree = std::max(max_degree, g.degree(v));
  FeatureMatrix x = FeatureMatrix::Zero(static_cast<Eigen::Index>(g.vertex_count()),
                                        static_cast<Eigen::Index>(max_degree + 1));
  for (VertexId v = 0; v < g.vertex_count(); ++v) x(v, static_cast<Eigen::Index>(g.degree(v))) = 1.0;
  return x;
}

}  // namespace dosage
