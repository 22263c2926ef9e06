#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "seagull/clique.hpp"
#include "seagull/graph.hpp"

namespace seagull {

/// Disjoint vertex sets, each inducing a connected subgraph, pairwise joined
/// by at least one edge of the host graph.
struct ConnectedCollection {
  std::vector<VertexSet> parts;
};

/// Part-size profile: k1 singletons, k2 edges, k3 parts of size >= 3.
struct CollectionProfile {
  int k1 = 0;
  int k2 = 0;
  int k3 = 0;
};

inline CollectionProfile profile_of(const ConnectedCollection& c) {
  CollectionProfile p;
  for (const VertexSet& s : c.parts) {
    const int sz = s.size();
    if (sz == 1)
      ++p.k1;
    else if (sz == 2)
      ++p.k2;
    else if (sz >= 3)
      ++p.k3;
  }
  return p;
}

enum class CollectionFault { empty_part, disconnected_part, overlapping_parts, unjoined_parts };

struct CollectionViolation {
  CollectionFault fault;
  int first;   // part index
  int second;  // second part index for pairwise faults, else -1
};

inline std::string describe(const CollectionViolation& v) {
  switch (v.fault) {
    case CollectionFault::empty_part:
      return "part " + std::to_string(v.first) + " is empty";
    case CollectionFault::disconnected_part:
      return "part " + std::to_string(v.first) + " does not induce a connected subgraph";
    case CollectionFault::overlapping_parts:
      return "parts " + std::to_string(v.first) + " and " + std::to_string(v.second) + " overlap";
    case CollectionFault::unjoined_parts:
      return "parts " + std::to_string(v.first) + " and " + std::to_string(v.second) + " have no joining edge";
  }
  return "unknown fault";
}

/// First violated requirement, scanning per-part faults before pairwise ones
/// and pairs in lexicographic order. Out-of-range parts throw.
inline std::optional<CollectionViolation> find_violation(const Graph& g, const ConnectedCollection& c) {
  const int k = static_cast<int>(c.parts.size());
  for (int i = 0; i < k; ++i) detail::check_in_range(g, c.parts[static_cast<std::size_t>(i)], "collection part");
  for (int i = 0; i < k; ++i)
    if (c.parts[static_cast<std::size_t>(i)].empty()) return CollectionViolation{CollectionFault::empty_part, i, -1};
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (c.parts[static_cast<std::size_t>(i)].intersects(c.parts[static_cast<std::size_t>(j)]))
        return CollectionViolation{CollectionFault::overlapping_parts, i, j};
  for (int i = 0; i < k; ++i)
    if (!induces_connected(g, c.parts[static_cast<std::size_t>(i)]))
      return CollectionViolation{CollectionFault::disconnected_part, i, -1};
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (!sets_joined(g, c.parts[static_cast<std::size_t>(i)], c.parts[static_cast<std::size_t>(j)]))
        return CollectionViolation{CollectionFault::unjoined_parts, i, j};
  return std::nullopt;
}

inline bool validate_collection(const Graph& g, const ConnectedCollection& c) { return !find_violation(g, c); }

/// Auxiliary graph whose nodes are candidate parts and whose edges connect
/// parts that are disjoint and joined; its cliques are exactly the valid
/// connected collections drawn from the node pool.
struct CompatibilityGraph {
  std::vector<VertexSet> nodes;
  std::vector<Bitset> adj;
};

inline CompatibilityGraph build_compatibility_graph(const Graph& g, std::vector<VertexSet> nodes) {
  const int m = static_cast<int>(nodes.size());
  CompatibilityGraph cg{std::move(nodes), std::vector<Bitset>(static_cast<std::size_t>(m), Bitset(m))};
  std::vector<VertexSet> reach(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i)
    reach[static_cast<std::size_t>(i)] = detail::neighborhood_union(g, cg.nodes[static_cast<std::size_t>(i)]);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const VertexSet a = cg.nodes[static_cast<std::size_t>(i)];
      const VertexSet b = cg.nodes[static_cast<std::size_t>(j)];
      if (!a.intersects(b) && reach[static_cast<std::size_t>(i)].intersects(b)) {
        cg.adj[static_cast<std::size_t>(i)].set(j);
        cg.adj[static_cast<std::size_t>(j)].set(i);
      }
    }
  }
  return cg;
}

struct ConnectedMatchingResult {
  int size = 0;
  ConnectedCollection witness;
};

/// Largest connected matching: a maximum clique of the compatibility graph
/// whose nodes are the edges of g. Edgeless graphs have cm = 0.
inline ConnectedMatchingResult max_connected_matching(const Graph& g) {
  std::vector<VertexSet> nodes;
  for (auto [u, v] : g.edges()) nodes.push_back(VertexSet::of({u, v}));
  if (nodes.empty()) return {};
  const CompatibilityGraph cg = build_compatibility_graph(g, std::move(nodes));
  const CliqueResult r = max_clique(cg.adj);
  ConnectedMatchingResult out;
  out.size = r.size;
  for (int i : r.members) out.witness.parts.push_back(cg.nodes[static_cast<std::size_t>(i)]);
  return out;
}

struct VertexEdgeCollectionResult {
  CollectionProfile profile;  // k3 is always 0
  ConnectedCollection witness;
};

/// Largest connected collection whose parts are single vertices or edges,
/// maximizing k1+k2 and, among those, k2. Realized as a maximum-weight
/// clique on the vertex+edge compatibility graph with weights W+0 / W+1
/// (W larger than the pool), which orders outcomes lexicographically.
inline VertexEdgeCollectionResult max_vertex_edge_collection(const Graph& g) {
  std::vector<VertexSet> nodes;
  for (int v = 0; v < g.n(); ++v) nodes.push_back(VertexSet::single(v));
  for (auto [u, v] : g.edges()) nodes.push_back(VertexSet::of({u, v}));
  const long long w_base = static_cast<long long>(nodes.size()) + 1;
  std::vector<long long> weights;
  for (const VertexSet& s : nodes) weights.push_back(w_base + (s.size() == 2 ? 1 : 0));
  const CompatibilityGraph cg = build_compatibility_graph(g, std::move(nodes));
  const WeightedCliqueResult r = max_weight_clique(cg.adj, weights);
  VertexEdgeCollectionResult out;
  for (int i : r.members) {
    const VertexSet s = cg.nodes[static_cast<std::size_t>(i)];
    out.witness.parts.push_back(s);
    if (s.size() == 1)
      ++out.profile.k1;
    else
      ++out.profile.k2;
  }
  return out;
}

/// While some singleton part has a neighbor outside the collection, grow it
/// into an edge. Scans singleton parts in ascending order of their vertex
/// and attaches the lowest available neighbor, so the result is
/// deterministic. Keeps k1+k2 constant and raises k2 until no upgrade
/// applies.
inline ConnectedCollection greedy_upgrade(const Graph& g, const ConnectedCollection& c) {
  if (auto viol = find_violation(g, c))
    throw std::invalid_argument("greedy_upgrade: invalid collection: " + describe(*viol));
  for (const VertexSet& s : c.parts)
    if (s.size() > 2) throw std::invalid_argument("greedy_upgrade: parts must have size at most 2");

  ConnectedCollection out = c;
  for (;;) {
    VertexSet used;
    for (const VertexSet& s : out.parts) used |= s;
    int best_part = -1, best_vertex = g.n();
    for (std::size_t i = 0; i < out.parts.size(); ++i) {
      const VertexSet& s = out.parts[i];
      if (s.size() != 1) continue;
      const int v = s.lowest();
      if (v < best_vertex && !(g.neighbors(v) - used).empty()) {
        best_vertex = v;
        best_part = static_cast<int>(i);
      }
    }
    if (best_part < 0) break;
    const int u = (g.neighbors(best_vertex) - used).lowest();
    out.parts[static_cast<std::size_t>(best_part)].add(u);
  }
  return out;
}

}  // namespace seagull
