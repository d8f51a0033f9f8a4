#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "dosage/rational.hpp"

namespace dosage {

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;

/// Sentinel returned by diameter() for a disconnected induced subgraph.
inline constexpr std::size_t kInfiniteDiameter = std::numeric_limits<std::size_t>::max();

/// Undirected simple graph on vertices 0..N-1. Immutable after construction.
class Graph {
 public:
  Graph() = default;
  /// Throws InputError on self-loops, duplicate edges, or out-of-range endpoints.
  Graph(std::size_t vertex_count, std::span<const Edge> edges);
  Graph(std::size_t vertex_count, std::initializer_list<Edge> edges)
      : Graph(vertex_count, std::span<const Edge>(edges.begin(), edges.size())) {}

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return adjacency_.empty(); }

  /// Edges with u < v, sorted.
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  /// Sorted neighbor list.
  std::span<const VertexId> neighbors(VertexId v) const { return adjacency_.at(v); }
  std::size_t degree(VertexId v) const { return adjacency_.at(v).size(); }
  bool has_edge(VertexId u, VertexId v) const;

 private:
  std::vector<std::vector<VertexId>> adjacency_;
  std::vector<Edge> edges_;
};

/// A vertex subset in canonical ascending order; identifies the induced subgraph G[S].
class SubgraphSelection {
 public:
  SubgraphSelection() = default;
  /// Sorts and deduplicates.
  explicit SubgraphSelection(std::vector<VertexId> members);
  SubgraphSelection(std::initializer_list<VertexId> members)
      : SubgraphSelection(std::vector<VertexId>(members)) {}

  /// All vertices of g.
  static SubgraphSelection all(const Graph& g);

  const std::vector<VertexId>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(VertexId v) const;
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  friend bool operator==(const SubgraphSelection&, const SubgraphSelection&) = default;
  /// Lexicographic on the canonical member list.
  friend auto operator<=>(const SubgraphSelection&, const SubgraphSelection&) = default;

 private:
  std::vector<VertexId> members_;
};

/// Throws InputError if any member of s is not a vertex of g.
void check_selection(const Graph& g, const SubgraphSelection& s);

/// Number of host edges with both endpoints in s.
std::size_t induced_edge_count(const Graph& g, const SubgraphSelection& s);

/// |E(S)| / |S|; nullopt for the empty selection.
std::optional<Rational> density(const Graph& g, const SubgraphSelection& s);

/// Degree of each member within G[S], aligned with s.members().
std::vector<std::size_t> induced_degrees(const Graph& g, const SubgraphSelection& s);

/// Longest shortest path inside G[S] (unweighted BFS); kInfiniteDiameter if G[S]
/// is disconnected, 0 for a single vertex. Throws InputError on an empty selection.
std::size_t diameter(const Graph& g, const SubgraphSelection& s);

bool is_connected(const Graph& g);

/// Mean shortest-path length over unordered pairs of distinct vertices.
/// Throws InputError if g is disconnected or has fewer than two vertices.
Rational average_shortest_path_length(const Graph& g);

/// Vertices of G[S] whose induced degree equals the minimum induced degree.
SubgraphSelection min_degree_vertices(const Graph& g, const SubgraphSelection& s);

/// BFS hop distances from source over the whole graph; unreachable = nullopt.
std::vector<std::optional<std::size_t>> bfs_distances(const Graph& g, VertexId source);

}  // namespace dosage

template <>
struct std::hash<dosage::SubgraphSelection> {
  std::size_t operator()(const dosage::SubgraphSelection& s) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (const auto v : s) {
      h ^= v;
      h *= 0x100000001b3ULL;
    }
    return h;
  }
};
