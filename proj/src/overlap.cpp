#include "dosage/overlap.hpp"

#include <algorithm>
#include <iterator>

#include "dosage/errors.hpp"

namespace dosage {

TradeoffParam::TradeoffParam(Rational lambda) : lambda_(std::move(lambda)) {
  if (!(lambda_ > Rational(0))) throw InputError("lambda must be positive");
}

Rational overlap_distance(const SubgraphSelection& u, const SubgraphSelection& z) {
  if (u.empty() || z.empty()) return Rational(2);
  if (u == z) return Rational(0);
  std::size_t common = 0;
  auto a = u.begin();
  auto b = z.begin();
  while (a != u.end() && b != z.end()) {
    if (*a < *b) {
      ++a;
    } else if (*b < *a) {
      ++b;
    } else {
      ++common;
      ++a;
      ++b;
    }
  }
  const auto c = static_cast<std::int64_t>(common);
  return Rational(2) - Rational(c * c, static_cast<std::int64_t>(u.size() * z.size()));
}

bool is_distinct(const SubgraphSelection& s, std::span<const SubgraphSelection> w) {
  return std::none_of(w.begin(), w.end(), [&](const SubgraphSelection& entry) { return entry == s; });
}

Rational density_sum(const Graph& g, std::span<const SubgraphSelection> w) {
  Rational total(0);
  for (const auto& entry : w) {
    const auto d = density(g, entry);
    if (!d) throw InputError("objective over a collection with an empty entry");
    total += *d;
  }
  return total;
}

Rational pairwise_distance_sum(std::span<const SubgraphSelection> w) {
  Rational total(0);
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) total += overlap_distance(w[i], w[j]);
  }
  return total;
}

Rational objective(const Graph& g, std::span<const SubgraphSelection> w, const TradeoffParam& lambda) {
  return density_sum(g, w) + lambda.value() * pairwise_distance_sum(w);
}

}  // namespace dosage
