#pragma once

#include <span>
#include <vector>

#include "dosage/graph.hpp"
#include "dosage/rational.hpp"

namespace dosage {

/// Ordered solution list W = [S_1, ..., S_k].
using SubgraphCollection = std::vector<SubgraphSelection>;

/// Density/diversity trade-off weight (lambda > 0), held exactly.
class TradeoffParam {
 public:
  /// Throws InputError unless lambda > 0.
  explicit TradeoffParam(Rational lambda);
  static TradeoffParam parse(std::string_view text) { return TradeoffParam(Rational::parse(text)); }

  const Rational& value() const noexcept { return lambda_; }

 private:
  Rational lambda_;
};

/// 2 - |U n Z|^2 / (|U| |Z|), 0 for equal sets, 2 if either set is empty
/// (the empty check takes precedence).
Rational overlap_distance(const SubgraphSelection& u, const SubgraphSelection& z);
inline double distance(const SubgraphSelection& u, const SubgraphSelection& z) {
  return overlap_distance(u, z).to_double();
}

/// True iff s's vertex set equals none of the sets in w.
bool is_distinct(const SubgraphSelection& s, std::span<const SubgraphSelection> w);

/// Sum of entry densities. Throws InputError on an empty entry.
Rational density_sum(const Graph& g, std::span<const SubgraphSelection> w);

/// Sum of overlap_distance over all unordered pairs i < j.
Rational pairwise_distance_sum(std::span<const SubgraphSelection> w);

/// r(W) = density_sum + lambda * pairwise_distance_sum.
Rational objective(const Graph& g, std::span<const SubgraphSelection> w, const TradeoffParam& lambda);

}  // namespace dosage
