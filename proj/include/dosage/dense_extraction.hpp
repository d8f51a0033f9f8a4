#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string_view>

#include "dosage/graph.hpp"

namespace dosage {

/// Inclusive subgraph size range [alpha, beta].
class SizeBounds {
 public:
  /// Throws InputError unless 1 <= alpha <= beta.
  SizeBounds(std::size_t alpha, std::size_t beta);

  std::size_t alpha() const noexcept { return alpha_; }
  std::size_t beta() const noexcept { return beta_; }
  bool admits(std::size_t size) const noexcept { return alpha_ <= size && size <= beta_; }

  friend bool operator==(const SizeBounds&, const SizeBounds&) = default;

 private:
  std::size_t alpha_;
  std::size_t beta_;
};

/// Upper bound on the induced diameter of a subgraph. May be +infinity.
class DiameterBound {
 public:
  /// Throws InputError unless value > 0 (NaN rejected).
  explicit DiameterBound(double value);
  static DiameterBound unbounded();

  double value() const noexcept { return value_; }
  bool is_unbounded() const noexcept;
  /// Integer diameter compared directly against the real bound; an infinite
  /// diameter passes only an unbounded check.
  bool admits(std::size_t diameter) const noexcept;

 private:
  double value_;
};

/// Guards on exhaustive subset enumeration.
struct EnumerationLimit {
  std::size_t cap = 20;
  bool force = false;
};

/// A subset produced by scan_candidates. `members` is only valid during the callback.
struct Candidate {
  std::span<const VertexId> members;
  std::size_t edge_count;
  std::size_t diameter;
};

/// Visits every subset S with alpha <= |S| <= beta and diameter(G[S]) <= delta,
/// in order of increasing size, then lexicographic member order.
/// Throws CapExceeded if N > limit.cap and !limit.force.
void scan_candidates(const Graph& g, const SizeBounds& bounds, const DiameterBound& delta,
                     const EnumerationLimit& limit,
                     const std::function<void(const Candidate&)>& visit);

/// Greedy peeling: starting from the whole graph, record the densest current
/// subgraph satisfying the size and diameter guards, then remove every
/// minimum-degree vertex and repeat until fewer than alpha vertices remain.
std::optional<SubgraphSelection> densest_subgraph_peel(const Graph& g, const SizeBounds& bounds,
                                                       const DiameterBound& delta);

/// Exhaustive oracle: the densest guard-satisfying subset, ties broken by
/// smaller size then lexicographically smallest member list.
std::optional<SubgraphSelection> densest_subgraph_exact(const Graph& g, const SizeBounds& bounds,
                                                        const DiameterBound& delta,
                                                        const EnumerationLimit& limit = {});

/// Receives non-fatal diagnostics (degenerate bounds, short collections, ...).
/// Defaults to writing "warning: <msg>" to stderr; an empty handler restores that.
void set_warning_handler(std::function<void(std::string_view)> handler);
void warn(std::string_view message);

}  // namespace dosage
