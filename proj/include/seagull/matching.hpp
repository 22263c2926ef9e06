#pragma once

#include <algorithm>
#include <vector>

#include "seagull/graph.hpp"

namespace seagull {

namespace detail {

// Maximum matching in an arbitrary simple graph: breadth-first search for
// augmenting paths with blossom contraction (bases tracked per vertex).
// O(n^3), which is instant at the 64-vertex cap.
class BlossomMatcher {
 public:
  explicit BlossomMatcher(const Graph& g)
      : g_(g),
        n_(g.n()),
        match_(static_cast<std::size_t>(n_), -1),
        parent_(static_cast<std::size_t>(n_), -1),
        base_(static_cast<std::size_t>(n_)),
        used_(static_cast<std::size_t>(n_)),
        blossom_(static_cast<std::size_t>(n_)) {}

  std::vector<int> solve() {
    for (int v = 0; v < n_; ++v) {
      if (match_[static_cast<std::size_t>(v)] != -1) continue;
      int u = find_augmenting_path(v);
      while (u != -1) {
        const int pv = parent_[static_cast<std::size_t>(u)];
        const int ppv = match_[static_cast<std::size_t>(pv)];
        match_[static_cast<std::size_t>(u)] = pv;
        match_[static_cast<std::size_t>(pv)] = u;
        u = ppv;
      }
    }
    return match_;
  }

 private:
  int lowest_common_base(int a, int b) {
    std::vector<bool> seen(static_cast<std::size_t>(n_), false);
    int cur = a;
    for (;;) {
      cur = base_[static_cast<std::size_t>(cur)];
      seen[static_cast<std::size_t>(cur)] = true;
      if (match_[static_cast<std::size_t>(cur)] == -1) break;
      cur = parent_[static_cast<std::size_t>(match_[static_cast<std::size_t>(cur)])];
    }
    cur = b;
    while (!seen[static_cast<std::size_t>(base_[static_cast<std::size_t>(cur)])])
      cur = parent_[static_cast<std::size_t>(match_[static_cast<std::size_t>(cur)])];
    return base_[static_cast<std::size_t>(cur)];
  }

  void mark_path(int v, int b, int child) {
    while (base_[static_cast<std::size_t>(v)] != b) {
      blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(v)])] = true;
      blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(match_[static_cast<std::size_t>(v)])])] = true;
      parent_[static_cast<std::size_t>(v)] = child;
      child = match_[static_cast<std::size_t>(v)];
      v = parent_[static_cast<std::size_t>(child)];
    }
  }

  int find_augmenting_path(int root) {
    std::fill(used_.begin(), used_.end(), false);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (int i = 0; i < n_; ++i) base_[static_cast<std::size_t>(i)] = i;
    used_[static_cast<std::size_t>(root)] = true;
    std::vector<int> queue{root};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const int v = queue[qi];
      for (int to : g_.neighbors(v)) {
        if (base_[static_cast<std::size_t>(v)] == base_[static_cast<std::size_t>(to)] ||
            match_[static_cast<std::size_t>(v)] == to)
          continue;
        if (to == root ||
            (match_[static_cast<std::size_t>(to)] != -1 && parent_[static_cast<std::size_t>(match_[static_cast<std::size_t>(to)])] != -1)) {
          // Odd cycle: contract the blossom down to the common base.
          const int cur_base = lowest_common_base(v, to);
          std::fill(blossom_.begin(), blossom_.end(), false);
          mark_path(v, cur_base, to);
          mark_path(to, cur_base, v);
          for (int i = 0; i < n_; ++i) {
            if (blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(i)])]) {
              base_[static_cast<std::size_t>(i)] = cur_base;
              if (!used_[static_cast<std::size_t>(i)]) {
                used_[static_cast<std::size_t>(i)] = true;
                queue.push_back(i);
              }
            }
          }
        } else if (parent_[static_cast<std::size_t>(to)] == -1) {
          parent_[static_cast<std::size_t>(to)] = v;
          if (match_[static_cast<std::size_t>(to)] == -1) return to;
          used_[static_cast<std::size_t>(match_[static_cast<std::size_t>(to)])] = true;
          queue.push_back(match_[static_cast<std::size_t>(to)]);
        }
      }
    }
    return -1;
  }

  const Graph& g_;
  int n_;
  std::vector<int> match_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<bool> used_;
  std::vector<bool> blossom_;
};

}  // namespace detail

/// mate[v] for a maximum matching, -1 for exposed vertices.
inline std::vector<int> maximum_matching(const Graph& g) { return detail::BlossomMatcher(g).solve(); }

/// Number of edges in a maximum matching.
inline int matching_number(const Graph& g) {
  const auto mate = maximum_matching(g);
  int size = 0;
  for (int v = 0; v < g.n(); ++v)
    if (mate[static_cast<std::size_t>(v)] > v) ++size;
  return size;
}

}  // namespace seagull
