#include "dosage/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "dosage/errors.hpp"

namespace dosage {

Graph::Graph(std::size_t vertex_count, std::span<const Edge> edges) : adjacency_(vertex_count) {
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count) {
      throw InputError("edge {" + std::to_string(u) + ", " + std::to_string(v) +
                       "} has an endpoint outside 0.." + std::to_string(vertex_count) + "-1");
    }
    if (u == v) throw InputError("self-loop on vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    edges_.emplace_back(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (const auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
    throw InputError("duplicate edge {" + std::to_string(dup->first) + ", " +
                     std::to_string(dup->second) + "}");
  }
  for (const auto& [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  if (u >= vertex_count() || v >= vertex_count()) return false;
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

SubgraphSelection::SubgraphSelection(std::vector<VertexId> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

SubgraphSelection SubgraphSelection::all(const Graph& g) {
  std::vector<VertexId> members(g.vertex_count());
  for (std::size_t v = 0; v < members.size(); ++v) members[v] = static_cast<VertexId>(v);
  return SubgraphSelection(std::move(members));
}

bool SubgraphSelection::contains(VertexId v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

void check_selection(const Graph& g, const SubgraphSelection& s) {
  if (!s.empty() && s.members().back() >= g.vertex_count()) {
    throw InputError("vertex " + std::to_string(s.members().back()) +
                     " is outside the host graph (N = " + std::to_string(g.vertex_count()) + ")");
  }
}

namespace {

std::vector<char> membership_mask(const Graph& g, const SubgraphSelection& s) {
  std::vector<char> mask(g.vertex_count(), 0);
  for (const auto v : s) mask[v] = 1;
  return mask;
}

}  // namespace

std::size_t induced_edge_count(const Graph& g, const SubgraphSelection& s) {
  check_selection(g, s);
  const auto mask = membership_mask(g, s);
  std::size_t count = 0;
  for (const auto u : s) {
    for (const auto v : g.neighbors(u)) {
      if (v > u && mask[v]) ++count;
    }
  }
  return count;
}

std::optional<Rational> density(const Graph& g, const SubgraphSelection& s) {
  if (s.empty()) return std::nullopt;
  return Rational(static_cast<std::int64_t>(induced_edge_count(g, s)),
                  static_cast<std::int64_t>(s.size()));
}

std::vector<std::size_t> induced_degrees(const Graph& g, const SubgraphSelection& s) {
  check_selection(g, s);
  const auto mask = membership_mask(g, s);
  std::vector<std::size_t> degrees;
  degrees.reserve(s.size());
  for (const auto u : s) {
    std::size_t d = 0;
    for (const auto v : g.neighbors(u)) d += mask[v] ? 1 : 0;
    degrees.push_back(d);
  }
  return degrees;
}

std::size_t diameter(const Graph& g, const SubgraphSelection& s) {
  if (s.empty()) throw InputError("diameter of an empty selection");
  check_selection(g, s);
  const auto mask = membership_mask(g, s);
  constexpr std::size_t kUnseen = kInfiniteDiameter;
  std::vector<std::size_t> dist(g.vertex_count(), kUnseen);
  std::vector<VertexId> queue;
  queue.reserve(s.size());
  std::size_t longest = 0;
  for (const auto source : s) {
    for (const auto v : s) dist[v] = kUnseen;
    queue.clear();
    queue.push_back(source);
    dist[source] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const auto u = queue[head];
      for (const auto v : g.neighbors(u)) {
        if (mask[v] && dist[v] == kUnseen) {
          dist[v] = dist[u] + 1;
          queue.push_back(v);
        }
      }
    }
    if (queue.size() != s.size()) return kInfiniteDiameter;
    longest = std::max(longest, dist[queue.back()]);
  }
  return longest;
}

std::vector<std::optional<std::size_t>> bfs_distances(const Graph& g, VertexId source) {
  if (source >= g.vertex_count()) throw InputError("BFS source out of range");
  std::vector<std::optional<std::size_t>> dist(g.vertex_count());
  std::deque<VertexId> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const auto u = queue.front();
    queue.pop_front();
    for (const auto v : g.neighbors(u)) {
      if (!dist[v]) {
        dist[v] = *dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

bool is_connected(const Graph& g) {
  if (g.empty()) return true;
  const auto dist = bfs_distances(g, 0);
  return std::all_of(dist.begin(), dist.end(), [](const auto& d) { return d.has_value(); });
}

Rational average_shortest_path_length(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 2) throw InputError("average shortest path length needs at least two vertices");
  std::uint64_t total = 0;
  for (VertexId source = 0; source < n; ++source) {
    const auto dist = bfs_distances(g, source);
    for (VertexId v = source + 1; v < n; ++v) {
      if (!dist[v]) throw InputError("average shortest path length of a disconnected graph");
      total += *dist[v];
    }
  }
  const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  return Rational(static_cast<std::int64_t>(total), static_cast<std::int64_t>(pairs));
}

SubgraphSelection min_degree_vertices(const Graph& g, const SubgraphSelection& s) {
  if (s.empty()) throw InputError("minimum-degree vertices of an empty selection");
  const auto degrees = induced_degrees(g, s);
  const auto min_degree = *std::min_element(degrees.begin(), degrees.end());
  std::vector<VertexId> result;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (degrees[i] == min_degree) result.push_back(s.members()[i]);
  }
  return SubgraphSelection(std::move(result));
}

}  // namespace dosage
