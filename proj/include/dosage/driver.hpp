#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dosage/dense_extraction.hpp"
#include "dosage/overlap.hpp"

namespace dosage {

struct DosageConfig {
  std::size_t k = 3;
  TradeoffParam lambda{Rational(1)};
  SizeBounds bounds{3, 6};
  std::optional<double> delta_override;
  EnumerationLimit limit;

  /// Throws InputError unless 1 <= k < N.
  void validate(const Graph& g) const;
};

/// 2 * average shortest path length for a connected graph, log2(N) otherwise;
/// `override_value` bypasses both. Throws InputError for N < 2 without an override.
DiameterBound select_delta(const Graph& g, std::optional<double> override_value = std::nullopt);

/// Among all guard-satisfying subsets distinct from every entry of w, the one
/// maximizing objective(w + [S]); ties go to the smaller, then lexicographically
/// smaller subset. nullopt if no subset survives.
std::optional<SubgraphSelection> densest_distinct_subgraph(const Graph& g,
                                                           std::span<const SubgraphSelection> w,
                                                           const DosageConfig& cfg,
                                                           const DiameterBound& delta);

struct DosageResult {
  SubgraphCollection subgraphs;  // in selection order; subgraphs[0] is the peel seed if any
  DiameterBound delta;
};

/// Seeds with the peeled densest subgraph, then greedily appends the
/// objective-maximizing distinct subgraph until k entries or no candidate remains.
DosageResult dosage(const Graph& g, const DosageConfig& cfg);

struct VerifierReport {
  bool vertices_ok = true;  // every member is a vertex of the host graph
  bool size_ok = true;
  bool density_ok = true;
  bool overlap_ok = true;
  std::vector<Rational> per_entry_densities;
  bool verdict = true;
};

/// Polynomial-time check of a candidate solution: size bounds, density >= r_min
/// per entry, and pairwise-distinct vertex sets. Failures are reported, not thrown.
VerifierReport verify_solution(const Graph& g, std::span<const SubgraphSelection> w,
                               const DosageConfig& cfg, const Rational& r_min);

}  // namespace dosage
