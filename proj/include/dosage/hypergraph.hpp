#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "dosage/dense_extraction.hpp"
#include "dosage/graph.hpp"
#include "dosage/overlap.hpp"
#include "dosage/rational.hpp"

namespace dosage {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Weighted hypergraph on vertices 0..N-1, templated on the weight scalar.
///
/// Hyperedges are stored sparsely as sorted member lists; dense incidence is
/// materialized on demand by incidence_matrix(). Hyperedges flagged synthetic
/// were added by ensure_coverage() and are exempt from the lower size bound.
template <typename Scalar>
class BasicHypergraph {
 public:
  BasicHypergraph() = default;
  /// Empty `weights` means unit weights; empty `synthetic` means none synthetic.
  /// Throws InputError on empty, out-of-range, duplicate, or out-of-bounds
  /// hyperedges, non-positive weights, or mismatched array lengths.
  BasicHypergraph(std::size_t vertex_count, std::vector<SubgraphSelection> hyperedges,
                  std::vector<Scalar> weights = {}, std::vector<bool> synthetic = {},
                  std::optional<SizeBounds> size_bounds = std::nullopt);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return hyperedges_.size(); }

  const std::vector<SubgraphSelection>& hyperedges() const noexcept { return hyperedges_; }
  const SubgraphSelection& hyperedge(std::size_t e) const;
  const std::vector<Scalar>& weights() const noexcept { return weights_; }
  const Scalar& weight(std::size_t e) const;
  const std::vector<bool>& synthetic() const noexcept { return synthetic_; }
  bool is_synthetic(std::size_t e) const;
  /// Synthetic hyperedge smaller than alpha (isolated vertex in a small component).
  bool is_below_bound(std::size_t e) const;
  const std::optional<SizeBounds>& size_bounds() const noexcept { return size_bounds_; }

  template <typename Other>
  BasicHypergraph<Other> cast() const;

  friend bool operator==(const BasicHypergraph&, const BasicHypergraph&) = default;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<SubgraphSelection> hyperedges_;
  std::vector<Scalar> weights_;
  std::vector<bool> synthetic_;
  std::optional<SizeBounds> size_bounds_;
};

using Hypergraph = BasicHypergraph<double>;
using ExactHypergraph = BasicHypergraph<Rational>;

template <typename Scalar>
template <typename Other>
BasicHypergraph<Other> BasicHypergraph<Scalar>::cast() const {
  std::vector<Other> converted;
  converted.reserve(weights_.size());
  for (const auto& w : weights_) {
    if constexpr (std::is_same_v<Other, Rational> && std::is_same_v<Scalar, double>) {
      converted.push_back(Rational::from_double(w));
    } else if constexpr (std::is_same_v<Other, double>) {
      converted.push_back(to_double(w));
    } else {
      converted.push_back(static_cast<Other>(w));
    }
  }
  return BasicHypergraph<Other>(vertex_count_, hyperedges_, std::move(converted), synthetic_,
                                size_bounds_);
}

/// N x M 0/1 matrix with H(v, e) = 1 iff v is in e.
template <typename Scalar>
Matrix<Scalar> incidence_matrix(const BasicHypergraph<Scalar>& h);

/// d(v) = sum_e w(e) H(v, e). Throws InputError if v >= N.
template <typename Scalar>
Scalar vertex_degree(const BasicHypergraph<Scalar>& h, VertexId v);
template <typename Scalar>
Vector<Scalar> vertex_degrees(const BasicHypergraph<Scalar>& h);

/// |e|. Throws InputError if e >= M.
template <typename Scalar>
std::size_t hyperedge_degree(const BasicHypergraph<Scalar>& h, std::size_t e);

/// H W H^T - D_v: symmetric with an exactly zero diagonal.
template <typename Scalar>
Matrix<Scalar> adjacency(const BasicHypergraph<Scalar>& h);

enum class CutObjective {
  kNormalized,  // vol(dS) * (1/vol(S) + 1/vol(S^c)), the standard normalized hypergraph cut
  kLiteral,     // vol(dS) / (1/vol(S) + 1/vol(S^c))
};

template <typename Scalar>
struct CutReport {
  std::vector<std::size_t> boundary;  // hyperedges meeting both S and S^c
  Scalar vol_s;
  Scalar vol_sc;
  Scalar vol_boundary;  // sum over boundary of w(e) |e n S| |e n S^c| / |e|
  std::optional<Scalar> objective;  // nullopt when vol(S) or vol(S^c) is zero
};

/// Throws InputError unless S is a non-empty proper subset of the vertices.
template <typename Scalar>
CutReport<Scalar> cut(const BasicHypergraph<Scalar>& h, const SubgraphSelection& s,
                      CutObjective mode = CutObjective::kNormalized);

/// One hyperedge per collection entry with exactly that vertex set, over all of
/// g's vertices. `weights` defaults to 1.0 per hyperedge.
Hypergraph from_subgraphs(const Graph& g, std::span<const SubgraphSelection> w,
                          std::optional<std::vector<double>> weights = std::nullopt,
                          std::optional<SizeBounds> bounds = std::nullopt);

/// w(e) = density of the originating subgraph. Throws InputError on a zero density.
std::vector<double> density_weights(const Graph& g, std::span<const SubgraphSelection> w);

struct CoverageReport {
  std::size_t covered = 0;
  std::vector<VertexId> uncovered;
  bool full() const noexcept { return uncovered.empty(); }
};

template <typename Scalar>
CoverageReport coverage_report(const BasicHypergraph<Scalar>& h);

/// For each uncovered vertex v (ascending, skipping vertices covered by an
/// earlier added hyperedge) appends a synthetic unit-weight hyperedge made of v,
/// its highest-degree neighbors up to beta members, and nearest BFS vertices
/// to pad up to alpha. Existing hyperedges are left untouched.
Hypergraph ensure_coverage(const Hypergraph& h, const Graph& g, const SizeBounds& bounds);

extern template class BasicHypergraph<double>;
extern template class BasicHypergraph<Rational>;

}  // namespace dosage
