#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "seagull/collections.hpp"
#include "seagull/graph.hpp"

namespace seagull {

/// Witness for a K_t minor: a connected collection with t parts (branch sets).
struct MinorCertificate {
  ConnectedCollection collection;
};

namespace detail {

// Depth-first search growing t pairwise-joined connected branch sets.
// Vertices are placed in index order into one of the open parts, the next
// fresh part, or left unassigned. Parts may pass through disconnected
// states; feasibility pruning keeps only states whose parts can still be
// reconnected and joined using unplaced vertices.
class KtMinorSearch {
 public:
  KtMinorSearch(const Graph& g, int t) : g_(g), n_(g.n()), t_(t) {}

  std::optional<ConnectedCollection> run() {
    parts_.assign(static_cast<std::size_t>(t_), VertexSet{});
    joined_.assign(static_cast<std::size_t>(t_), 0);
    if (!dfs(0, 0)) return std::nullopt;
    ConnectedCollection c;
    for (const VertexSet& s : parts_) c.parts.push_back(s);
    return c;
  }

 private:
  bool complete(int opened) const {
    if (opened < t_) return false;
    for (int i = 0; i < t_; ++i) {
      const std::uint64_t others = (VertexSet::all(t_).bits) & ~(std::uint64_t{1} << i);
      if ((joined_[static_cast<std::size_t>(i)] & others) != others) return false;
    }
    for (int i = 0; i < t_; ++i) {
      const VertexSet s = parts_[static_cast<std::size_t>(i)];
      if (reach_within(g_, s.lowest(), s) != s) return false;
    }
    return true;
  }

  bool feasible(int v, int opened) {
    const VertexSet rest = VertexSet::all(n_) - VertexSet::all(v);
    for (int i = 0; i < opened; ++i) {
      const VertexSet part = parts_[static_cast<std::size_t>(i)];
      const VertexSet hull = reach_within(g_, part.lowest(), part | rest);
      if (!hull.contains_all(part)) return false;  // split beyond repair
      hull_[static_cast<std::size_t>(i)] = hull;
      hull_nbrs_[static_cast<std::size_t>(i)] = neighborhood_union(g_, hull);
    }
    for (int i = 0; i < opened; ++i) {
      for (int j = i + 1; j < opened; ++j) {
        if ((joined_[static_cast<std::size_t>(i)] >> j) & 1u) continue;
        if (!hull_nbrs_[static_cast<std::size_t>(i)].intersects(hull_[static_cast<std::size_t>(j)])) return false;
      }
    }
    return true;
  }

  bool dfs(int v, int opened) {
    if (complete(opened)) return true;
    if (v == n_) return false;
    if (t_ - opened > n_ - v) return false;  // not enough vertices for fresh parts
    if (!feasible(v, opened)) return false;

    // Fresh parts are interchangeable; only the next index may be opened,
    // so parts end up ordered by their minimum vertex.
    const int max_part = std::min(opened, t_ - 1);
    for (int i = 0; i <= max_part; ++i) {
      const VertexSet nbrs = g_.neighbors(v);
      parts_[static_cast<std::size_t>(i)].add(v);
      std::uint64_t delta = 0;
      for (int j = 0; j < std::max(opened, i + 1); ++j) {
        if (j == i) continue;
        if (nbrs.intersects(parts_[static_cast<std::size_t>(j)])) delta |= std::uint64_t{1} << j;
      }
      const std::uint64_t saved_row = joined_[static_cast<std::size_t>(i)];
      std::vector<std::pair<int, std::uint64_t>> touched;
      joined_[static_cast<std::size_t>(i)] |= delta;
      for (int j : VertexSet(delta)) {
        touched.emplace_back(j, joined_[static_cast<std::size_t>(j)]);
        joined_[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
      }
      if (dfs(v + 1, std::max(opened, i + 1))) return true;
      joined_[static_cast<std::size_t>(i)] = saved_row;
      for (auto [j, row] : touched) joined_[static_cast<std::size_t>(j)] = row;
      parts_[static_cast<std::size_t>(i)].remove(v);
    }
    return dfs(v + 1, opened);  // leave v unassigned
  }

  const Graph& g_;
  int n_;
  int t_;
  std::vector<VertexSet> parts_;
  std::vector<std::uint64_t> joined_;  // joined_[i] has bit j iff parts i, j share an edge
  std::array<VertexSet, kMaxVertices> hull_{};
  std::array<VertexSet, kMaxVertices> hull_nbrs_{};
};

}  // namespace detail

/// Decides whether g has a K_t minor; returns the branch sets on success.
inline std::optional<MinorCertificate> has_kt_minor(const Graph& g, int t) {
  if (t < 1 || t > g.n())
    throw std::invalid_argument("has_kt_minor: t must be between 1 and n, got " + std::to_string(t));
  detail::KtMinorSearch search(g, t);
  auto c = search.run();
  if (!c) return std::nullopt;
  return MinorCertificate{std::move(*c)};
}

struct HadwigerResult {
  int eta = 0;
  MinorCertificate certificate;
};

/// Exact Hadwiger number: the maximum number of parts in a connected
/// collection. Seeded from the larger of a maximum clique (singleton parts)
/// and a maximum connected matching, then probed upward until failure.
inline HadwigerResult hadwiger_number(const Graph& g) {
  const CliqueResult cl = max_clique(g);
  const ConnectedMatchingResult cm = max_connected_matching(g);
  ConnectedCollection base;
  if (cl.size >= cm.size) {
    for (int v : cl.members) base.parts.push_back(VertexSet::single(v));
  } else {
    base = cm.witness;
  }
  int eta = static_cast<int>(base.parts.size());
  while (eta < g.n()) {
    auto next = has_kt_minor(g, eta + 1);
    if (!next) break;
    base = std::move(next->collection);
    ++eta;
  }
  return HadwigerResult{eta, MinorCertificate{std::move(base)}};
}

inline constexpr int kHadwigerBruteforceMaxVertices = 8;

namespace detail {

inline void hadwiger_brute_rec(const Graph& g, VertexSet free, int prev_min, std::vector<VertexSet>& parts, int& best) {
  best = std::max(best, static_cast<int>(parts.size()));
  if (static_cast<int>(parts.size()) + free.size() <= best) return;
  for (int m : free) {
    if (m <= prev_min) continue;
    const VertexSet tail = free & (VertexSet::all(g.n()) - VertexSet::all(m + 1));
    std::uint64_t sub = tail.bits;
    for (;;) {
      const VertexSet s = VertexSet(sub) | VertexSet::single(m);
      if (reach_within(g, m, s) == s) {
        const VertexSet snbrs = neighborhood_union(g, s);
        bool ok = true;
        for (const VertexSet& p : parts)
          if (!snbrs.intersects(p)) {
            ok = false;
            break;
          }
        if (ok) {
          parts.push_back(s);
          hadwiger_brute_rec(g, free - s, m, parts, best);
          parts.pop_back();
        }
      }
      if (sub == 0) break;
      sub = (sub - 1) & tail.bits;
    }
  }
}

}  // namespace detail

/// Exhaustive maximization over all families of disjoint connected,
/// pairwise-joined vertex sets. Test oracle; guarded to small orders.
inline int hadwiger_bruteforce(const Graph& g) {
  if (g.n() > kHadwigerBruteforceMaxVertices)
    throw std::invalid_argument("hadwiger_bruteforce: guarded to n <= " +
                                std::to_string(kHadwigerBruteforceMaxVertices));
  int best = 0;
  std::vector<VertexSet> parts;
  detail::hadwiger_brute_rec(g, g.vertices(), -1, parts, best);
  return best;
}

/// Scans all nonnegative triples (k1, k2, k3) with k1+k2+k3 = 2t and reports
/// whether none satisfies both k1+2k2+3k3 <= 4t-1 and k1+k2 <= t-1.
inline bool counting_infeasibility(long long t) {
  if (t < 1) throw std::invalid_argument("counting_infeasibility: t must be >= 1");
  for (long long k3 = 0; k3 <= 2 * t; ++k3) {
    for (long long k2 = 0; k2 + k3 <= 2 * t; ++k2) {
      const long long k1 = 2 * t - k2 - k3;
      if (k1 + 2 * k2 + 3 * k3 <= 4 * t - 1 && k1 + k2 <= t - 1) return false;
    }
  }
  return true;
}

/// Vertex-count accounting for a valid collection: k1 + 2 k2 + 3 k3 <= n.
inline bool profile_bounds_check(const Graph& g, const ConnectedCollection& c) {
  if (auto viol = find_violation(g, c))
    throw std::invalid_argument("profile_bounds_check: invalid collection: " + describe(*viol));
  const CollectionProfile p = profile_of(c);
  return p.k1 + 2 * p.k2 + 3 * p.k3 <= g.n();
}

}  // namespace seagull
