#pragma once

#include <random>
#include <vector>

#include "dosage/generators.hpp"
#include "dosage/graph.hpp"

namespace dosage::testing {

inline Graph triangle() { return Graph(3, {{0, 1}, {1, 2}, {0, 2}}); }

/// a-b-c as 0-1-2.
inline Graph path3() { return Graph(3, {{0, 1}, {1, 2}}); }

/// K4 on {0,1,2,3} plus pendant edge {0,4}.
inline Graph k4_pendant() {
  return Graph(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}});
}

/// Triangles {a,b,c} and {c,d,e} sharing c, as 0..4.
inline Graph bowtie() { return Graph(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}}); }

inline Graph complete(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

/// Connected G(n, p) by rejection.
inline Graph random_connected(std::size_t n, double p, std::mt19937_64& rng) {
  while (true) {
    Graph g = erdos_renyi(n, p, rng);
    if (is_connected(g)) return g;
  }
}

}  // namespace dosage::testing
