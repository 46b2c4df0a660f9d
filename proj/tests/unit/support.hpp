#pragma once

#include <cstdint>
#include <vector>

#include "tricompact/generators.hpp"
#include "tricompact/graph.hpp"

namespace tricompact::testing {

// Labelled graph on n vertices whose edges are the set bits of mask, in
// lexicographic pair order.
inline Graph graph_from_mask(int n, std::uint64_t mask) {
  Graph g(n);
  int bit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++bit)
      if (mask >> bit & 1) g.add_edge(i, j);
  return g;
}

inline int pair_count(int n) { return n * (n - 1) / 2; }

inline Graph random_graph(int n, gen::Rng& rng) {
  std::uniform_real_distribution<double> p(0.2, 0.8);
  return gen::gnp(n, p(rng), rng);
}

}  // namespace tricompact::testing
