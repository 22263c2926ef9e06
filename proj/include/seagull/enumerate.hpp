#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "seagull/canonical.hpp"
#include "seagull/graph.hpp"

namespace seagull {

/// The sharpness example: two disjoint complete graphs on 2t-1 vertices.
/// n = 4t-2, alpha = 2, cm = t-1.
inline Graph extremal_graph(int t) {
  if (t < 1) throw std::invalid_argument("extremal_graph: t must be >= 1");
  if (4 * t - 2 > kMaxVertices)
    throw std::invalid_argument("extremal_graph: order 4t-2 = " + std::to_string(4 * t - 2) +
                                " exceeds the 64-vertex cap");
  const Graph half = Graph::complete(2 * t - 1);
  return disjoint_union(half, half);
}

inline constexpr int kEnumerateMaxVertices = 12;
inline constexpr int kEnumerateAllMaxVertices = 8;
inline constexpr int kBruteForceEnumerateMaxVertices = 7;

namespace detail {

// alpha(g) <= 2 iff no pair of non-adjacent vertices has a common
// non-neighbor, checked directly on the adjacency words.
inline bool alpha_at_most_2(const Graph& g) {
  const std::uint64_t all = g.vertices().bits;
  for (int u = 0; u < g.n(); ++u) {
    const std::uint64_t nu = g.neighbors(u).bits | (std::uint64_t{1} << u);
    for (int v = u + 1; v < g.n(); ++v) {
      if ((nu >> v) & 1u) continue;
      const std::uint64_t nv = g.neighbors(v).bits | (std::uint64_t{1} << v);
      if (all & ~nu & ~nv) return false;
    }
  }
  return true;
}

// One representative per isomorphism class: grow graphs one vertex at a
// time, attaching the new vertex to every subset that the filter admits,
// and reject duplicates by canonical form. Emission order is the
// deterministic generation order, not the set order.
template <typename Filter, typename F>
void enumerate_by_extension(int n, Filter&& admits, F&& emit) {
  std::vector<Graph> level{Graph::empty(1)};
  for (int k = 2; k <= n; ++k) {
    std::vector<Graph> next;
    std::unordered_set<std::string> seen;
    for (const Graph& parent : level) {
      const std::uint64_t limit = std::uint64_t{1} << (k - 1);
      for (std::uint64_t mask = 0; mask < limit; ++mask) {
        if (!admits(parent, VertexSet(mask))) continue;
        std::vector<std::uint64_t> rows(static_cast<std::size_t>(k), 0);
        for (int v = 0; v < k - 1; ++v) rows[static_cast<std::size_t>(v)] = parent.neighbors(v).bits;
        rows[static_cast<std::size_t>(k - 1)] = mask;
        for (int v : VertexSet(mask)) rows[static_cast<std::size_t>(v)] |= std::uint64_t{1} << (k - 1);
        Graph child = Graph::from_adjacency(std::move(rows));
        if (seen.insert(canonical_form(child)).second) next.push_back(std::move(child));
      }
    }
    level = std::move(next);
  }
  for (const Graph& g : level) emit(g);
}

}  // namespace detail

/// One representative per isomorphism class of graphs with alpha <= 2 on n
/// vertices, in a deterministic order. Generates triangle-free graphs by
/// vertex extension (the new vertex's neighborhood must be independent) and
/// emits their complements.
template <typename F>
void enumerate_alpha2(int n, F&& emit) {
  if (n < 1 || n > kEnumerateMaxVertices)
    throw std::invalid_argument("enumerate_alpha2: n must be between 1 and " +
                                std::to_string(kEnumerateMaxVertices));
  detail::enumerate_by_extension(
      n,
      [](const Graph& parent, VertexSet mask) {
        for (int v : mask)
          if (parent.neighbors(v).intersects(mask)) return false;
        return true;
      },
      [&](const Graph& g) { emit(complement(g)); });
}

inline std::vector<Graph> enumerate_alpha2(int n) {
  std::vector<Graph> out;
  enumerate_alpha2(n, [&](const Graph& g) { out.push_back(g); });
  return out;
}

/// Every isomorphism class on n vertices, for oracle sweeps.
template <typename F>
void enumerate_all_graphs(int n, F&& emit) {
  if (n < 1 || n > kEnumerateAllMaxVertices)
    throw std::invalid_argument("enumerate_all_graphs: n must be between 1 and " +
                                std::to_string(kEnumerateAllMaxVertices));
  detail::enumerate_by_extension(n, [](const Graph&, VertexSet) { return true; }, emit);
}

inline std::vector<Graph> enumerate_all_graphs(int n) {
  std::vector<Graph> out;
  enumerate_all_graphs(n, [&](const Graph& g) { out.push_back(g); });
  return out;
}

/// Reference stream for enumerate_alpha2: all 2^(n(n-1)/2) labeled graphs,
/// filtered to alpha <= 2 and deduplicated by canonical form. Independent
/// of the extension generator.
template <typename F>
void brute_force_enumerate(int n, F&& emit) {
  if (n < 1 || n > kBruteForceEnumerateMaxVertices)
    throw std::invalid_argument("brute_force_enumerate: n must be between 1 and " +
                                std::to_string(kBruteForceEnumerateMaxVertices));
  const int nbits = n * (n - 1) / 2;
  std::unordered_set<std::string> seen;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << nbits); ++mask) {
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
    int p = 0;
    for (int i = 1; i < n; ++i) {
      for (int j = 0; j < i; ++j, ++p) {
        if ((mask >> p) & 1u) {
          rows[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
          rows[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
        }
      }
    }
    Graph g = Graph::from_adjacency(std::move(rows));
    if (!detail::alpha_at_most_2(g)) continue;
    if (seen.insert(canonical_form(g)).second) emit(g);
  }
}

inline std::vector<Graph> brute_force_enumerate(int n) {
  std::vector<Graph> out;
  brute_force_enumerate(n, [&](const Graph& g) { out.push_back(g); });
  return out;
}

}  // namespace seagull
