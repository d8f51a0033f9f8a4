#include "dosage/dense_extraction.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <iostream>
#include <limits>
#include <string>

#include "dosage/errors.hpp"

namespace dosage {

namespace {

void print_warning(std::string_view message) { std::cerr << "warning: " << message << '\n'; }

std::function<void(std::string_view)>& warning_handler() {
  static std::function<void(std::string_view)> handler = print_warning;
  return handler;
}

constexpr std::size_t kMaxEnumeratedSubset = 64;
constexpr std::size_t kDenseMatrixLimit = 4096;

/// Host adjacency lookup tuned for the enumeration inner loop.
class AdjacencyLookup {
 public:
  explicit AdjacencyLookup(const Graph& g) : g_(g) {
    const std::size_t n = g.vertex_count();
    if (n <= kDenseMatrixLimit) {
      matrix_.assign(n * n, 0);
      for (const auto& [u, v] : g.edges()) {
        matrix_[u * n + v] = 1;
        matrix_[v * n + u] = 1;
      }
    }
  }

  bool operator()(VertexId u, VertexId v) const {
    if (!matrix_.empty()) return matrix_[u * g_.vertex_count() + v] != 0;
    return g_.has_edge(u, v);
  }

 private:
  const Graph& g_;
  std::vector<char> matrix_;
};

/// Induced diameter over local bitmask adjacency; returns early with
/// kInfiniteDiameter as soon as the bound is exceeded.
std::size_t masked_diameter(std::span<const std::uint64_t> local, const DiameterBound& delta) {
  const std::size_t s = local.size();
  const std::uint64_t full = s == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << s) - 1);
  std::size_t longest = 0;
  for (std::size_t source = 0; source < s; ++source) {
    std::uint64_t visited = std::uint64_t{1} << source;
    std::uint64_t frontier = visited;
    std::size_t depth = 0;
    while (visited != full) {
      std::uint64_t next = 0;
      for (std::uint64_t bits = frontier; bits != 0; bits &= bits - 1) {
        next |= local[static_cast<std::size_t>(std::countr_zero(bits))];
      }
      next &= ~visited;
      if (next == 0) return kInfiniteDiameter;
      visited |= next;
      frontier = next;
      ++depth;
    }
    longest = std::max(longest, depth);
    if (!delta.admits(longest)) return longest;
  }
  return longest;
}

}  // namespace

void set_warning_handler(std::function<void(std::string_view)> handler) {
  warning_handler() = handler ? std::move(handler) : print_warning;
}

void warn(std::string_view message) {
  warning_handler()(message);
}

SizeBounds::SizeBounds(std::size_t alpha, std::size_t beta) : alpha_(alpha), beta_(beta) {
  if (alpha < 1) throw InputError("alpha must be at least 1");
  if (alpha > beta) throw InputError("alpha exceeds beta");
}

DiameterBound::DiameterBound(double value) : value_(value) {
  if (!(value > 0.0)) throw InputError("diameter bound must be positive");
}

DiameterBound DiameterBound::unbounded() {
  return DiameterBound(std::numeric_limits<double>::infinity());
}

bool DiameterBound::is_unbounded() const noexcept { return std::isinf(value_); }

bool DiameterBound::admits(std::size_t diameter) const noexcept {
  if (diameter == kInfiniteDiameter) return is_unbounded();
  return static_cast<double>(diameter) <= value_;
}

void scan_candidates(const Graph& g, const SizeBounds& bounds, const DiameterBound& delta,
                     const EnumerationLimit& limit,
                     const std::function<void(const Candidate&)>& visit) {
  const std::size_t n = g.vertex_count();
  if (n > limit.cap && !limit.force) throw CapExceeded(n, limit.cap);
  if (bounds.alpha() > n) return;
  const std::size_t max_size = std::min(bounds.beta(), n);
  if (max_size > kMaxEnumeratedSubset) {
    throw InputError("exhaustive enumeration supports subsets of at most " +
                     std::to_string(kMaxEnumeratedSubset) + " vertices; lower beta");
  }

  const AdjacencyLookup adjacent(g);
  std::vector<VertexId> combo;
  std::vector<std::uint64_t> local;
  for (std::size_t size = bounds.alpha(); size <= max_size; ++size) {
    combo.resize(size);
    local.resize(size);
    for (std::size_t i = 0; i < size; ++i) combo[i] = static_cast<VertexId>(i);
    while (true) {
      std::size_t twice_edges = 0;
      for (std::size_t i = 0; i < size; ++i) {
        std::uint64_t row = 0;
        for (std::size_t j = 0; j < size; ++j) {
          if (i != j && adjacent(combo[i], combo[j])) row |= std::uint64_t{1} << j;
        }
        local[i] = row;
        twice_edges += static_cast<std::size_t>(std::popcount(row));
      }
      const std::size_t diam = masked_diameter(local, delta);
      if (delta.admits(diam)) visit(Candidate{combo, twice_edges / 2, diam});

      // Next combination in lexicographic order.
      std::size_t i = size;
      while (i > 0 && combo[i - 1] == n - size + (i - 1)) --i;
      if (i == 0) break;
      ++combo[i - 1];
      for (std::size_t j = i; j < size; ++j) combo[j] = combo[j - 1] + 1;
    }
  }
}

std::optional<SubgraphSelection> densest_subgraph_peel(const Graph& g, const SizeBounds& bounds,
                                                       const DiameterBound& delta) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return std::nullopt;
  if (bounds.alpha() > n) {
    warn("alpha (" + std::to_string(bounds.alpha()) + ") exceeds the vertex count (" +
         std::to_string(n) + "); no subgraph can satisfy the size bounds");
    return std::nullopt;
  }

  std::vector<char> alive(n, 1);
  std::vector<std::size_t> degree(n);
  for (VertexId v = 0; v < n; ++v) degree[v] = g.degree(v);
  std::size_t alive_count = n;
  std::size_t alive_edges = g.edge_count();

  std::optional<SubgraphSelection> best;
  std::size_t best_edges = 0;
  std::size_t best_size = 1;

  std::vector<VertexId> members;
  while (alive_count > 0) {
    members.clear();
    for (VertexId v = 0; v < n; ++v) {
      if (alive[v]) members.push_back(v);
    }
    // Size before diameter.
    if (bounds.admits(alive_count)) {
      const SubgraphSelection current(members);
      if (delta.admits(diameter(g, current))) {
        // alive_edges / alive_count > best_edges / best_size
        const bool denser = alive_edges * best_size > best_edges * alive_count;
        if (!best || denser) {
          best = current;
          best_edges = alive_edges;
          best_size = alive_count;
        }
      }
    }

    std::size_t min_degree = std::numeric_limits<std::size_t>::max();
    for (const auto v : members) min_degree = std::min(min_degree, degree[v]);
    std::vector<VertexId> removed;
    for (const auto v : members) {
      if (degree[v] == min_degree) removed.push_back(v);
    }
    for (const auto v : removed) alive[v] = 0;
    for (const auto v : removed) {
      for (const auto u : g.neighbors(v)) {
        if (alive[u]) {
          --degree[u];
          --alive_edges;
        } else if (u < v) {
          // Edge between two removed vertices: count it once.
          if (std::binary_search(removed.begin(), removed.end(), u)) --alive_edges;
        }
      }
    }
    alive_count -= removed.size();
    if (alive_count < bounds.alpha()) break;
  }
  return best;
}

std::optional<SubgraphSelection> densest_subgraph_exact(const Graph& g, const SizeBounds& bounds,
                                                        const DiameterBound& delta,
                                                        const EnumerationLimit& limit) {
  if (g.empty()) return std::nullopt;
  if (bounds.alpha() > g.vertex_count()) {
    warn("alpha exceeds the vertex count; no subgraph can satisfy the size bounds");
  }
  std::optional<std::vector<VertexId>> best;
  std::size_t best_edges = 0;
  std::size_t best_size = 1;
  scan_candidates(g, bounds, delta, limit, [&](const Candidate& c) {
    const std::size_t size = c.members.size();
    // Strictly denser; scan order is the tie-break.
    if (!best || c.edge_count * best_size > best_edges * size) {
      best.emplace(c.members.begin(), c.members.end());
      best_edges = c.edge_count;
      best_size = size;
    }
  });
  if (!best) return std::nullopt;
  return SubgraphSelection(std::move(*best));
}

}  // namespace dosage
