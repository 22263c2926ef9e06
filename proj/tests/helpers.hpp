#pragma once

#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "seagull/graph.hpp"

namespace helpers {

inline seagull::Graph random_graph(std::mt19937_64& rng, int n, double p = 0.5) {
  std::bernoulli_distribution edge(p);
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (edge(rng)) e.emplace_back(u, v);
  return seagull::Graph::from_edges(n, e);
}

inline std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

inline seagull::Graph relabel(const seagull::Graph& g, const std::vector<int>& perm) {
  std::vector<std::pair<int, int>> e;
  for (auto [u, v] : g.edges())
    e.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
  return seagull::Graph::from_edges(g.n(), e);
}

}  // namespace helpers
