#include "dosage/hypergraph.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "dosage/errors.hpp"

namespace dosage {

template <typename Scalar>
BasicHypergraph<Scalar>::BasicHypergraph(std::size_t vertex_count,
                                         std::vector<SubgraphSelection> hyperedges,
                                         std::vector<Scalar> weights, std::vector<bool> synthetic,
                                         std::optional<SizeBounds> size_bounds)
    : vertex_count_(vertex_count),
      hyperedges_(std::move(hyperedges)),
      weights_(std::move(weights)),
      synthetic_(std::move(synthetic)),
      size_bounds_(size_bounds) {
  const std::size_t m = hyperedges_.size();
  if (weights_.empty()) weights_.assign(m, Scalar(1));
  if (synthetic_.empty()) synthetic_.assign(m, false);
  if (weights_.size() != m) {
    throw InputError("weight list has " + std::to_string(weights_.size()) + " entries for " +
                     std::to_string(m) + " hyperedges");
  }
  if (synthetic_.size() != m) throw InputError("synthetic flag list length does not match hyperedges");

  std::set<SubgraphSelection> seen;
  for (std::size_t e = 0; e < m; ++e) {
    const auto& edge = hyperedges_[e];
    const std::string name = "hyperedge " + std::to_string(e);
    if (edge.empty()) throw InputError(name + " is empty");
    if (edge.members().back() >= vertex_count_) throw InputError(name + " has a vertex outside 0..N-1");
    if (!(weights_[e] > Scalar(0))) throw InputError(name + " has a non-positive weight");
    if (!seen.insert(edge).second) throw InputError(name + " duplicates an earlier hyperedge");
    if (size_bounds_) {
      const bool too_small = edge.size() < size_bounds_->alpha() && !synthetic_[e];
      if (too_small || edge.size() > size_bounds_->beta()) {
        throw InputError(name + " has " + std::to_string(edge.size()) +
                         " vertices, outside the size bounds [" +
                         std::to_string(size_bounds_->alpha()) + ", " +
                         std::to_string(size_bounds_->beta()) + "]");
      }
    }
  }
}

template <typename Scalar>
const SubgraphSelection& BasicHypergraph<Scalar>::hyperedge(std::size_t e) const {
  if (e >= hyperedges_.size()) throw InputError("hyperedge index " + std::to_string(e) + " out of range");
  return hyperedges_[e];
}

template <typename Scalar>
const Scalar& BasicHypergraph<Scalar>::weight(std::size_t e) const {
  if (e >= weights_.size()) throw InputError("hyperedge index " + std::to_string(e) + " out of range");
  return weights_[e];
}

template <typename Scalar>
bool BasicHypergraph<Scalar>::is_synthetic(std::size_t e) const {
  if (e >= synthetic_.size()) throw InputError("hyperedge index " + std::to_string(e) + " out of range");
  return synthetic_[e];
}

template <typename Scalar>
bool BasicHypergraph<Scalar>::is_below_bound(std::size_t e) const {
  return is_synthetic(e) && size_bounds_ && hyperedges_[e].size() < size_bounds_->alpha();
}

template <typename Scalar>
Matrix<Scalar> incidence_matrix(const BasicHypergraph<Scalar>& h) {
  Matrix<Scalar> H = Matrix<Scalar>::Zero(static_cast<Eigen::Index>(h.vertex_count()),
                                          static_cast<Eigen::Index>(h.edge_count()));
  for (std::size_t e = 0; e < h.edge_count(); ++e) {
    for (const auto v : h.hyperedges()[e]) H(v, static_cast<Eigen::Index>(e)) = Scalar(1);
  }
  return H;
}

template <typename Scalar>
Scalar vertex_degree(const BasicHypergraph<Scalar>& h, VertexId v) {
  if (v >= h.vertex_count()) throw InputError("vertex " + std::to_string(v) + " out of range");
  Scalar d(0);
  for (std::size_t e = 0; e < h.edge_count(); ++e) {
    if (h.hyperedges()[e].contains(v)) d += h.weights()[e];
  }
  return d;
}

template <typename Scalar>
Vector<Scalar> vertex_degrees(const BasicHypergraph<Scalar>& h) {
  Vector<Scalar> d = Vector<Scalar>::Zero(static_cast<Eigen::Index>(h.vertex_count()));
  for (std::size_t e = 0; e < h.edge_count(); ++e) {
    for (const auto v : h.hyperedges()[e]) d(v) += h.weights()[e];
  }
  return d;
}

template <typename Scalar>
std::size_t hyperedge_degree(const BasicHypergraph<Scalar>& h, std::size_t e) {
  return h.hyperedge(e).size();
}

template <typename Scalar>
Matrix<Scalar> adjacency(const BasicHypergraph<Scalar>& h) {
  const Matrix<Scalar> H = incidence_matrix(h);
  Vector<Scalar> w(static_cast<Eigen::Index>(h.edge_count()));
  for (std::size_t e = 0; e < h.edge_count(); ++e) w(static_cast<Eigen::Index>(e)) = h.weights()[e];
  Matrix<Scalar> A = H * w.asDiagonal() * H.transpose();
  A.diagonal() -= vertex_degrees(h);
  return A;
}

template <typename Scalar>
CutReport<Scalar> cut(const BasicHypergraph<Scalar>& h, const SubgraphSelection& s, CutObjective mode) {
  if (s.empty()) throw InputError("cut needs a non-empty vertex subset");
  if (s.members().back() >= h.vertex_count()) throw InputError("cut subset has a vertex outside 0..N-1");
  if (s.size() == h.vertex_count()) throw InputError("cut needs a proper subset of the vertices");

  CutReport<Scalar> report{{}, Scalar(0), Scalar(0), Scalar(0), std::nullopt};
  const Vector<Scalar> degrees = vertex_degrees(h);
  for (Eigen::Index v = 0; v < degrees.size(); ++v) {
    (s.contains(static_cast<VertexId>(v)) ? report.vol_s : report.vol_sc) += degrees(v);
  }
  for (std::size_t e = 0; e < h.edge_count(); ++e) {
    const auto& edge = h.hyperedges()[e];
    std::int64_t inside = 0;
    for (const auto v : edge) inside += s.contains(v) ? 1 : 0;
    const auto outside = static_cast<std::int64_t>(edge.size()) - inside;
    if (inside == 0 || outside == 0) continue;
    report.boundary.push_back(e);
    report.vol_boundary += h.weights()[e] * Scalar(inside * outside) /
                           Scalar(static_cast<std::int64_t>(edge.size()));
  }
  if (report.vol_s > Scalar(0) && report.vol_sc > Scalar(0)) {
    const Scalar inverse_sum = Scalar(1) / report.vol_s + Scalar(1) / report.vol_sc;
    report.objective = mode == CutObjective::kNormalized ? report.vol_boundary * inverse_sum
                                                         : report.vol_boundary / inverse_sum;
  }
  return report;
}

template <typename Scalar>
CoverageReport coverage_report(const BasicHypergraph<Scalar>& h) {
  std::vector<char> covered(h.vertex_count(), 0);
  for (const auto& edge : h.hyperedges()) {
    for (const auto v : edge) covered[v] = 1;
  }
  CoverageReport report;
  for (VertexId v = 0; v < h.vertex_count(); ++v) {
    if (covered[v]) {
      ++report.covered;
    } else {
      report.uncovered.push_back(v);
    }
  }
  return report;
}

Hypergraph from_subgraphs(const Graph& g, std::span<const SubgraphSelection> w,
                          std::optional<std::vector<double>> weights,
                          std::optional<SizeBounds> bounds) {
  for (const auto& entry : w) check_selection(g, entry);
  if (weights && weights->size() != w.size()) {
    throw InputError("weight list has " + std::to_string(weights->size()) + " entries for " +
                     std::to_string(w.size()) + " subgraphs");
  }
  return Hypergraph(g.vertex_count(), std::vector<SubgraphSelection>(w.begin(), w.end()),
                    weights.value_or(std::vector<double>{}), {}, bounds);
}

std::vector<double> density_weights(const Graph& g, std::span<const SubgraphSelection> w) {
  std::vector<double> weights;
  weights.reserve(w.size());
  for (const auto& entry : w) {
    const auto d = density(g, entry);
    if (!d || !(*d > Rational(0))) {
      throw InputError("density weighting needs every subgraph to have at least one edge");
    }
    weights.push_back(d->to_double());
  }
  return weights;
}

Hypergraph ensure_coverage(const Hypergraph& h, const Graph& g, const SizeBounds& bounds) {
  if (g.vertex_count() != h.vertex_count()) {
    throw InputError("hypergraph and graph disagree on the vertex count");
  }
  std::vector<SubgraphSelection> edges = h.hyperedges();
  std::vector<double> weights = h.weights();
  std::vector<bool> synthetic = h.synthetic();

  std::vector<char> covered(h.vertex_count(), 0);
  for (const auto& edge : edges) {
    for (const auto v : edge) covered[v] = 1;
  }

  for (VertexId v = 0; v < h.vertex_count(); ++v) {
    if (covered[v]) continue;

    std::vector<VertexId> neighbors(g.neighbors(v).begin(), g.neighbors(v).end());
    std::stable_sort(neighbors.begin(), neighbors.end(),
                     [&](VertexId a, VertexId b) { return g.degree(a) > g.degree(b); });
    std::vector<VertexId> members{v};
    for (const auto u : neighbors) {
      if (members.size() >= bounds.beta()) break;
      members.push_back(u);
    }
    if (members.size() < bounds.alpha()) {
      const auto dist = bfs_distances(g, v);
      std::vector<std::pair<std::size_t, VertexId>> far;
      for (VertexId u = 0; u < g.vertex_count(); ++u) {
        if (dist[u] && *dist[u] >= 2) far.emplace_back(*dist[u], u);
      }
      std::sort(far.begin(), far.end());
      for (const auto& [d, u] : far) {
        if (members.size() >= bounds.alpha()) break;
        members.push_back(u);
      }
    }
    if (members.size() < bounds.alpha()) {
      warn("vertex " + std::to_string(v) + " lies in a component with fewer than alpha = " +
           std::to_string(bounds.alpha()) + " vertices; emitting a below-bound hyperedge of size " +
           std::to_string(members.size()));
    }
    for (const auto u : members) covered[u] = 1;
    edges.emplace_back(std::move(members));
    weights.push_back(1.0);
    synthetic.push_back(true);
  }
  return Hypergraph(h.vertex_count(), std::move(edges), std::move(weights), std::move(synthetic),
                    h.size_bounds());
}

#define DOSAGE_INSTANTIATE(Scalar)                                                            \
  template class BasicHypergraph<Scalar>;                                                     \
  template Matrix<Scalar> incidence_matrix(const BasicHypergraph<Scalar>&);                   \
  template Scalar vertex_degree(const BasicHypergraph<Scalar>&, VertexId);                    \
  template Vector<Scalar> vertex_degrees(const BasicHypergraph<Scalar>&);                     \
  template std::size_t hyperedge_degree(const BasicHypergraph<Scalar>&, std::size_t);         \
  template Matrix<Scalar> adjacency(const BasicHypergraph<Scalar>&);                          \
  template CutReport<Scalar> cut(const BasicHypergraph<Scalar>&, const SubgraphSelection&,    \
                                 CutObjective);                                               \
  template CoverageReport coverage_report(const BasicHypergraph<Scalar>&);

DOSAGE_INSTANTIATE(double)
DOSAGE_INSTANTIATE(Rational)

#undef DOSAGE_INSTANTIATE

}  // namespace dosage
