#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "seagull/bits.hpp"

namespace seagull {

inline constexpr int kMaxVertices = 64;

/// Immutable simple graph on 1..64 vertices, one adjacency word per vertex.
/// Safe to share across threads; every operation below is a pure function.
class Graph {
 public:
  static Graph empty(int n) { return Graph(n, std::vector<std::uint64_t>(static_cast<std::size_t>(check_order(n)), 0)); }

  static Graph complete(int n) {
    check_order(n);
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n));
    const std::uint64_t all = VertexSet::all(n).bits;
    for (int v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)] = all & ~(std::uint64_t{1} << v);
    return Graph(n, std::move(adj));
  }

  static Graph path(int n) {
    check_order(n);
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
    return from_edges(n, e);
  }

  static Graph cycle(int n) {
    check_order(n);
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
    return from_edges(n, e);
  }

  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges) {
    check_order(n);
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
      if (u == v) throw std::invalid_argument("loop edges are not allowed");
      adj[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
      adj[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    }
    return Graph(n, std::move(adj));
  }

  static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
    return from_edges(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
  }

  /// Adopts prebuilt adjacency rows after validating the type invariants
  /// (symmetric, irreflexive, all bits below n).
  static Graph from_adjacency(std::vector<std::uint64_t> adj) {
    const int n = static_cast<int>(adj.size());
    check_order(n);
    const std::uint64_t range = VertexSet::all(n).bits;
    for (int v = 0; v < n; ++v) {
      const std::uint64_t row = adj[static_cast<std::size_t>(v)];
      if (row & ~range) throw std::invalid_argument("adjacency bit beyond vertex range");
      if ((row >> v) & 1u) throw std::invalid_argument("self-loop in adjacency");
      for (std::uint64_t rest = row; rest; rest &= rest - 1) {
        const int u = std::countr_zero(rest);
        if (!((adj[static_cast<std::size_t>(u)] >> v) & 1u)) throw std::invalid_argument("asymmetric adjacency");
      }
    }
    return Graph(n, std::move(adj));
  }

  int n() const { return n_; }
  VertexSet vertices() const { return VertexSet::all(n_); }
  VertexSet neighbors(int v) const { return VertexSet(adj_[static_cast<std::size_t>(v)]); }
  VertexSet closed_neighborhood(int v) const { return neighbors(v) | VertexSet::single(v); }
  bool has_edge(int u, int v) const { return (adj_[static_cast<std::size_t>(u)] >> v) & 1u; }
  int degree(int v) const { return std::popcount(adj_[static_cast<std::size_t>(v)]); }

  int edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += degree(v);
    return twice / 2;
  }

  /// Edges as pairs (u, v) with u < v, in lexicographic order.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
      for (int v : VertexSet(adj_[static_cast<std::size_t>(u)] >> (u + 1) << (u + 1))) out.emplace_back(u, v);
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) = default;

 private:
  Graph(int n, std::vector<std::uint64_t> adj) : n_(n), adj_(std::move(adj)) {}

  static int check_order(int n) {
    if (n < 1 || n > kMaxVertices)
      throw std::invalid_argument("graph order must be between 1 and 64, got " + std::to_string(n));
    return n;
  }

  int n_;
  std::vector<std::uint64_t> adj_;
};

inline Graph complement(const Graph& g) {
  const int n = g.n();
  const std::uint64_t range = VertexSet::all(n).bits;
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v)
    adj[static_cast<std::size_t>(v)] = range & ~g.neighbors(v).bits & ~(std::uint64_t{1} << v);
  return Graph::from_adjacency(std::move(adj));
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
  const int n = a.n() + b.n();
  std::vector<std::pair<int, int>> e = a.edges();
  for (auto [u, v] : b.edges()) e.emplace_back(u + a.n(), v + a.n());
  return Graph::from_edges(n, e);
}

namespace detail {

inline void check_in_range(const Graph& g, VertexSet s, const char* what) {
  if (!g.vertices().contains_all(s)) throw std::out_of_range(std::string(what) + ": vertex set beyond graph range");
}

// Vertices reachable from `seed` inside the induced subgraph g[within].
inline VertexSet reach_within(const Graph& g, int seed, VertexSet within) {
  VertexSet reached = VertexSet::single(seed);
  VertexSet frontier = reached;
  while (!frontier.empty()) {
    VertexSet next;
    for (int v : frontier) next |= g.neighbors(v);
    next = (next & within) - reached;
    reached |= next;
    frontier = next;
  }
  return reached;
}

inline VertexSet neighborhood_union(const Graph& g, VertexSet s) {
  VertexSet out;
  for (int v : s) out |= g.neighbors(v);
  return out;
}

}  // namespace detail

/// Connected components as vertex sets, ordered by minimum vertex.
inline std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet todo = g.vertices();
  while (!todo.empty()) {
    const VertexSet comp = detail::reach_within(g, todo.lowest(), todo);
    out.push_back(comp);
    todo = todo - comp;
  }
  return out;
}

/// True iff g[s] is connected. s must be nonempty and within range.
inline bool induces_connected(const Graph& g, VertexSet s) {
  if (s.empty()) throw std::invalid_argument("induces_connected: empty vertex set");
  detail::check_in_range(g, s, "induces_connected");
  return detail::reach_within(g, s.lowest(), s) == s;
}

/// True iff some edge has one endpoint in a and the other in b.
/// a and b must be nonempty and disjoint.
inline bool sets_joined(const Graph& g, VertexSet a, VertexSet b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("sets_joined: empty vertex set");
  if (a.intersects(b)) throw std::invalid_argument("sets_joined: sets overlap");
  detail::check_in_range(g, a | b, "sets_joined");
  return detail::neighborhood_union(g, a).intersects(b);
}

}  // namespace seagull
