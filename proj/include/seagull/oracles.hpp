#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "seagull/graph.hpp"

namespace seagull {

// Brute-force oracles for tests and the `oracle` CLI subcommand. These stay
// independent of the production solvers: no clique engine, no compatibility
// graphs, no matching structures.

namespace detail {

inline void independence_brute_rec(const Graph& g, VertexSet pool, int size, int& best) {
  if (size + pool.size() <= best) return;
  if (pool.empty()) {
    best = std::max(best, size);
    return;
  }
  const int v = pool.lowest();
  independence_brute_rec(g, pool - g.closed_neighborhood(v), size + 1, best);  // take v
  independence_brute_rec(g, pool - VertexSet::single(v), size, best);          // skip v
}

inline void edge_family_rec(const Graph& g, const std::vector<std::pair<int, int>>& edges, std::size_t idx,
                            std::vector<VertexSet>& chosen, VertexSet used, bool require_joined, int& best) {
  best = std::max(best, static_cast<int>(chosen.size()));
  if (static_cast<int>(chosen.size() + (edges.size() - idx)) <= best) return;
  for (std::size_t e = idx; e < edges.size(); ++e) {
    const VertexSet s = VertexSet::of({edges[e].first, edges[e].second});
    if (s.intersects(used)) continue;
    if (require_joined) {
      const VertexSet snbrs = detail::neighborhood_union(g, s);
      bool ok = true;
      for (const VertexSet& p : chosen)
        if (!snbrs.intersects(p)) {
          ok = false;
          break;
        }
      if (!ok) continue;
    }
    chosen.push_back(s);
    edge_family_rec(g, edges, e + 1, chosen, used | s, require_joined, best);
    chosen.pop_back();
  }
}

}  // namespace detail

inline constexpr int kOracleMaxVertices = 10;

inline void check_oracle_guard(const Graph& g, const char* name) {
  if (g.n() > kOracleMaxVertices)
    throw std::invalid_argument(std::string(name) + ": guarded to n <= " + std::to_string(kOracleMaxVertices));
}

/// Largest independent set by direct branch-and-bound on the graph itself.
inline int independence_bruteforce(const Graph& g) {
  check_oracle_guard(g, "independence_bruteforce");
  int best = 0;
  detail::independence_brute_rec(g, g.vertices(), 0, best);
  return best;
}

/// Largest set of disjoint, pairwise-joined edges by exhaustive search over
/// subsets of the edge list.
inline int cm_bruteforce(const Graph& g) {
  check_oracle_guard(g, "cm_bruteforce");
  int best = 0;
  std::vector<VertexSet> chosen;
  detail::edge_family_rec(g, g.edges(), 0, chosen, VertexSet{}, true, best);
  return best;
}

/// Maximum matching size by exhaustive search over subsets of disjoint edges.
inline int max_matching_bruteforce(const Graph& g) {
  check_oracle_guard(g, "max_matching_bruteforce");
  int best = 0;
  std::vector<VertexSet> chosen;
  detail::edge_family_rec(g, g.edges(), 0, chosen, VertexSet{}, false, best);
  return best;
}

namespace detail {

inline void vertex_edge_brute_rec(const Graph& g, const std::vector<VertexSet>& pool, std::size_t idx,
                                  std::vector<VertexSet>& chosen, VertexSet used, int k2,
                                  std::pair<int, int>& best) {
  const std::pair<int, int> cur{static_cast<int>(chosen.size()), k2};
  best = std::max(best, cur);
  if (static_cast<int>(chosen.size() + (pool.size() - idx)) < best.first) return;
  for (std::size_t i = idx; i < pool.size(); ++i) {
    const VertexSet s = pool[i];
    if (s.intersects(used)) continue;
    const VertexSet snbrs = detail::neighborhood_union(g, s);
    bool ok = true;
    for (const VertexSet& p : chosen)
      if (!snbrs.intersects(p)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    chosen.push_back(s);
    vertex_edge_brute_rec(g, pool, i + 1, chosen, used | s, k2 + (s.size() == 2 ? 1 : 0), best);
    chosen.pop_back();
  }
}

}  // namespace detail

/// Lexicographic maximum (k1+k2, k2) over connected collections of single
/// vertices and edges, by exhaustive search.
inline std::pair<int, int> vertex_edge_bruteforce(const Graph& g) {
  if (g.n() > 8) throw std::invalid_argument("vertex_edge_bruteforce: guarded to n <= 8");
  std::vector<VertexSet> pool;
  for (int v = 0; v < g.n(); ++v) pool.push_back(VertexSet::single(v));
  for (auto [u, v] : g.edges()) pool.push_back(VertexSet::of({u, v}));
  std::pair<int, int> best{0, 0};
  std::vector<VertexSet> chosen;
  detail::vertex_edge_brute_rec(g, pool, 0, chosen, VertexSet{}, 0, best);
  return best;
}

}  // namespace seagull
