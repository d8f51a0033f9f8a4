#include "dosage/driver.hpp"

#include <cmath>
#include <string>

#include "dosage/errors.hpp"

namespace dosage {

void DosageConfig::validate(const Graph& g) const {
  if (k < 1) throw InputError("k must be at least 1");
  if (k >= g.vertex_count()) {
    throw InputError("k (" + std::to_string(k) + ") must be less than the vertex count (" +
                     std::to_string(g.vertex_count()) + ")");
  }
  if (delta_override && !(*delta_override > 0.0)) throw InputError("delta must be positive");
}

DiameterBound select_delta(const Graph& g, std::optional<double> override_value) {
  if (override_value) return DiameterBound(*override_value);
  if (g.vertex_count() < 2) throw InputError("diameter bound selection needs at least two vertices");
  if (is_connected(g)) {
    return DiameterBound(2.0 * average_shortest_path_length(g).to_double());
  }
  return DiameterBound(std::log2(static_cast<double>(g.vertex_count())));
}

std::optional<SubgraphSelection> densest_distinct_subgraph(const Graph& g,
                                                           std::span<const SubgraphSelection> w,
                                                           const DosageConfig& cfg,
                                                           const DiameterBound& delta) {
  if (g.empty()) return std::nullopt;
  for (const auto& entry : w) check_selection(g, entry);

  // objective(w + [S]) = objective(w) + density(S) + lambda * sum_i d(S, w_i);
  // the first term is shared by every candidate, so only the increment is ranked.
  std::vector<std::vector<char>> in_entry(w.size(), std::vector<char>(g.vertex_count(), 0));
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (const auto v : w[i]) in_entry[i][v] = 1;
  }

  std::optional<std::vector<VertexId>> best;
  Rational best_gain;
  scan_candidates(g, cfg.bounds, delta, cfg.limit, [&](const Candidate& c) {
    const auto size = static_cast<std::int64_t>(c.members.size());
    Rational distance_total(0);
    for (std::size_t i = 0; i < w.size(); ++i) {
      std::int64_t common = 0;
      for (const auto v : c.members) common += in_entry[i][v];
      const auto entry_size = static_cast<std::int64_t>(w[i].size());
      if (common == size && common == entry_size) return;  // same vertex set: not distinct
      distance_total += Rational(2) - Rational(common * common, size * entry_size);
    }
    Rational gain = Rational(static_cast<std::int64_t>(c.edge_count), size) +
                    cfg.lambda.value() * distance_total;
    if (!best || gain > best_gain) {
      best.emplace(c.members.begin(), c.members.end());
      best_gain = std::move(gain);
    }
  });
  if (!best) return std::nullopt;
  return SubgraphSelection(std::move(*best));
}

DosageResult dosage(const Graph& g, const DosageConfig& cfg) {
  if (g.empty()) throw InputError("DOSAGE on an empty graph");
  cfg.validate(g);
  DosageResult result{{}, select_delta(g, cfg.delta_override)};

  if (auto seed = densest_subgraph_peel(g, cfg.bounds, result.delta); seed && !seed->empty()) {
    result.subgraphs.push_back(std::move(*seed));
  }
  while (result.subgraphs.size() < cfg.k) {
    auto next = densest_distinct_subgraph(g, result.subgraphs, cfg, result.delta);
    if (!next || next->empty()) break;
    result.subgraphs.push_back(std::move(*next));
  }
  if (result.subgraphs.size() < cfg.k) {
    warn("only " + std::to_string(result.subgraphs.size()) + " of " + std::to_string(cfg.k) +
         " requested subgraphs satisfy the size and diameter guards");
  }
  return result;
}

VerifierReport verify_solution(const Graph& g, std::span<const SubgraphSelection> w,
                               const DosageConfig& cfg, const Rational& r_min) {
  VerifierReport report;
  for (const auto& entry : w) {
    if (!entry.empty() && entry.members().back() >= g.vertex_count()) {
      report.vertices_ok = false;
      report.per_entry_densities.emplace_back(0);
      continue;
    }
    if (!cfg.bounds.admits(entry.size())) report.size_ok = false;
    const Rational d = density(g, entry).value_or(Rational(0));
    if (d < r_min) report.density_ok = false;
    report.per_entry_densities.push_back(d);
  }
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (!(overlap_distance(w[i], w[j]) > Rational(0))) report.overlap_ok = false;
    }
  }
  report.verdict = report.vertices_ok && report.size_ok && report.density_ok && report.overlap_ok;
  return report;
}

}  // namespace dosage
