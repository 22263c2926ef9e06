#pragma once

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include "seagull/bits.hpp"
#include "seagull/graph.hpp"

namespace seagull {

struct CliqueResult {
  int size = 0;
  std::vector<int> members;  // ascending vertex ids
};

struct WeightedCliqueResult {
  long long weight = 0;
  std::vector<int> members;
};

namespace detail {

// Branch-and-bound maximum-weight clique over explicit adjacency rows.
// Vertices are ordered by descending degree (ties by index) and the bound is
// a greedy coloring: a clique takes at most one vertex per color class, so
// the sum of per-class maximum weights bounds what a candidate set can add.
// With unit weights this is the classic chromatic-bound cardinality search.
// Deterministic: the witness is the first maximum found in this fixed order.
//
// A caller that knows an external upper bound can pass it as `target`: the
// search stops as soon as the incumbent reaches it, skipping the optimality
// proof. The result is still exact because the incumbent can never exceed a
// valid bound.
class CliqueSolver {
 public:
  static constexpr long long kNoTarget = -1;

  CliqueSolver(const std::vector<Bitset>& adj, std::vector<long long> weights, long long target = kNoTarget)
      : m_(static_cast<int>(adj.size())), target_(target), order_(static_cast<std::size_t>(m_)) {
    std::vector<int> deg(static_cast<std::size_t>(m_));
    for (int i = 0; i < m_; ++i) deg[static_cast<std::size_t>(i)] = adj[static_cast<std::size_t>(i)].count();
    std::iota(order_.begin(), order_.end(), 0);
    std::sort(order_.begin(), order_.end(), [&](int a, int b) {
      if (deg[static_cast<std::size_t>(a)] != deg[static_cast<std::size_t>(b)])
        return deg[static_cast<std::size_t>(a)] > deg[static_cast<std::size_t>(b)];
      return a < b;
    });
    std::vector<int> pos(static_cast<std::size_t>(m_));
    for (int i = 0; i < m_; ++i) pos[static_cast<std::size_t>(order_[static_cast<std::size_t>(i)])] = i;
    padj_.assign(static_cast<std::size_t>(m_), Bitset(m_));
    pw_.resize(static_cast<std::size_t>(m_));
    for (int i = 0; i < m_; ++i) {
      pw_[static_cast<std::size_t>(i)] = weights[static_cast<std::size_t>(order_[static_cast<std::size_t>(i)])];
      adj[static_cast<std::size_t>(order_[static_cast<std::size_t>(i)])].for_each(
          [&](int u) { padj_[static_cast<std::size_t>(i)].set(pos[static_cast<std::size_t>(u)]); });
    }
  }

  WeightedCliqueResult run() {
    best_ = 0;
    best_members_.clear();
    stack_.clear();
    done_ = false;
    if (m_ > 0) {
      Bitset all(m_);
      for (int i = 0; i < m_; ++i) all.set(i);
      expand(all, 0);
    }
    WeightedCliqueResult r;
    r.weight = best_;
    for (int i : best_members_) r.members.push_back(order_[static_cast<std::size_t>(i)]);
    std::sort(r.members.begin(), r.members.end());
    return r;
  }

 private:
  void expand(const Bitset& p, long long rw) {
    // Greedy coloring of the candidate set in permuted order.
    std::vector<Bitset> classes;
    std::vector<long long> class_max;
    std::vector<int> vclass(static_cast<std::size_t>(m_));
    p.for_each([&](int v) {
      std::size_t c = 0;
      while (c < classes.size() && classes[c].intersects(padj_[static_cast<std::size_t>(v)])) ++c;
      if (c == classes.size()) {
        classes.emplace_back(m_);
        class_max.push_back(0);
      }
      classes[c].set(v);
      class_max[c] = std::max(class_max[c], pw_[static_cast<std::size_t>(v)]);
      vclass[static_cast<std::size_t>(v)] = static_cast<int>(c);
    });
    std::vector<int> cand;
    std::vector<long long> bound;
    long long cum = 0;
    for (std::size_t c = 0; c < classes.size(); ++c) {
      cum += class_max[c];
      classes[c].for_each([&](int v) {
        cand.push_back(v);
        bound.push_back(cum);
      });
    }

    Bitset rest = p;
    for (int idx = static_cast<int>(cand.size()) - 1; idx >= 0; --idx) {
      if (rw + bound[static_cast<std::size_t>(idx)] <= best_) return;
      const int v = cand[static_cast<std::size_t>(idx)];
      const long long rw2 = rw + pw_[static_cast<std::size_t>(v)];
      stack_.push_back(v);
      Bitset next = rest;
      next &= padj_[static_cast<std::size_t>(v)];
      if (next.none()) {
        if (rw2 > best_) {
          best_ = rw2;
          best_members_ = stack_;
        }
      } else {
        expand(next, rw2);
      }
      stack_.pop_back();
      rest.reset(v);
    }
  }

  int m_;
  std::vector<int> order_;
  std::vector<Bitset> padj_;
  std::vector<long long> pw_;
  long long best_ = 0;
  std::vector<int> best_members_;
  std::vector<int> stack_;
};

inline std::vector<Bitset> adjacency_rows(const Graph& g) {
  std::vector<Bitset> rows(static_cast<std::size_t>(g.n()), Bitset(g.n()));
  for (int v = 0; v < g.n(); ++v)
    for (int u : g.neighbors(v)) rows[static_cast<std::size_t>(v)].set(u);
  return rows;
}

}  // namespace detail

/// Maximum-weight clique; all weights must be positive.
inline WeightedCliqueResult max_weight_clique(const std::vector<Bitset>& adj, const std::vector<long long>& weights) {
  return detail::CliqueSolver(adj, weights).run();
}

/// Maximum-cardinality clique over explicit adjacency rows.
inline CliqueResult max_clique(const std::vector<Bitset>& adj) {
  auto r = detail::CliqueSolver(adj, std::vector<long long>(adj.size(), 1)).run();
  return CliqueResult{static_cast<int>(r.weight), std::move(r.members)};
}

/// Maximum clique of a graph, with one witness clique.
inline CliqueResult max_clique(const Graph& g) { return max_clique(detail::adjacency_rows(g)); }

inline int clique_number(const Graph& g) { return max_clique(g).size; }

/// Maximum independent set, computed as a clique of the complement.
inline CliqueResult max_independent_set(const Graph& g) { return max_clique(complement(g)); }

inline int independence_number(const Graph& g) { return max_independent_set(g).size; }

}  // namespace seagull
