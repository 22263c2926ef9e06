#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "seagull/graph.hpp"
#include "seagull/graph6.hpp"

namespace seagull {

inline constexpr int kCanonicalMaxVertices = 12;

namespace detail {

// Canonical labeling by equitable refinement plus individualization.
// The refinement splits color classes by neighbor-color multisets until
// stable; the search individualizes one vertex of the first smallest
// non-singleton class and recurses. The canonical form is the minimum
// adjacency encoding over all leaves. Automorphisms discovered from leaves
// with equal encodings merge candidate orbits, which keeps symmetric
// inputs (complete, empty, unions of equal cliques) from exploding into
// factorially many branches. Only automorphisms fixing the current
// individualization path prune siblings, so the pruning is sound.
class Canonicalizer {
 public:
  explicit Canonicalizer(const Graph& g) : g_(g), n_(g.n()) {}

  std::vector<int> run() {
    std::array<int, kCanonicalMaxVertices> color{};
    refine(color);
    std::vector<int> path;
    search(color, path);
    return {best_label_.begin(), best_label_.begin() + n_};
  }

 private:
  using Code = std::array<std::uint64_t, kCanonicalMaxVertices>;
  using Label = std::array<int, kCanonicalMaxVertices>;

  // Neighbor-color counts packed base-13: sound because n <= 12 bounds both
  // the number of colors and every count.
  void refine(std::array<int, kCanonicalMaxVertices>& color) const {
    std::array<std::uint64_t, 13> pow13{};
    pow13[0] = 1;
    for (int i = 1; i <= 12; ++i) pow13[static_cast<std::size_t>(i)] = pow13[static_cast<std::size_t>(i - 1)] * 13;
    for (;;) {
      std::array<std::uint64_t, kCanonicalMaxVertices> sig{};
      for (int v = 0; v < n_; ++v) {
        std::uint64_t s = static_cast<std::uint64_t>(color[static_cast<std::size_t>(v)]) * pow13[12];
        for (int u : g_.neighbors(v)) s += pow13[static_cast<std::size_t>(color[static_cast<std::size_t>(u)])];
        sig[static_cast<std::size_t>(v)] = s;
      }
      std::array<std::uint64_t, kCanonicalMaxVertices> sorted = sig;
      std::sort(sorted.begin(), sorted.begin() + n_);
      const int old_count = count_colors(color);
      int new_count = 0;
      std::array<std::uint64_t, kCanonicalMaxVertices> uniq{};
      for (int i = 0; i < n_; ++i) {
        if (i == 0 || sorted[static_cast<std::size_t>(i)] != sorted[static_cast<std::size_t>(i - 1)])
          uniq[static_cast<std::size_t>(new_count++)] = sorted[static_cast<std::size_t>(i)];
      }
      for (int v = 0; v < n_; ++v) {
        const auto* it = std::lower_bound(uniq.begin(), uniq.begin() + new_count, sig[static_cast<std::size_t>(v)]);
        color[static_cast<std::size_t>(v)] = static_cast<int>(it - uniq.begin());
      }
      if (new_count == old_count) return;
    }
  }

  int count_colors(const std::array<int, kCanonicalMaxVertices>& color) const {
    int mx = -1;
    for (int v = 0; v < n_; ++v) mx = std::max(mx, color[static_cast<std::size_t>(v)]);
    return mx + 1;
  }

  void search(const std::array<int, kCanonicalMaxVertices>& color, std::vector<int>& path) {
    // Pick the first smallest non-singleton class; discrete partitions are leaves.
    std::array<int, kCanonicalMaxVertices> class_size{};
    for (int v = 0; v < n_; ++v) ++class_size[static_cast<std::size_t>(color[static_cast<std::size_t>(v)])];
    int target = -1, target_size = n_ + 1;
    const int k = count_colors(color);
    for (int c = 0; c < k; ++c) {
      const int sz = class_size[static_cast<std::size_t>(c)];
      if (sz >= 2 && sz < target_size) {
        target = c;
        target_size = sz;
      }
    }
    if (target < 0) {
      process_leaf(color);
      return;
    }

    std::vector<int> tried;
    for (int v = 0; v < n_; ++v) {
      if (color[static_cast<std::size_t>(v)] != target) continue;
      if (in_known_orbit(v, tried, path)) continue;
      tried.push_back(v);
      std::array<int, kCanonicalMaxVertices> child = color;
      for (int u = 0; u < n_; ++u)
        child[static_cast<std::size_t>(u)] =
            2 * child[static_cast<std::size_t>(u)] + (u == v ? 1 : 0);
      normalize(child);
      refine(child);
      path.push_back(v);
      search(child, path);
      path.pop_back();
    }
  }

  void normalize(std::array<int, kCanonicalMaxVertices>& color) const {
    std::array<int, 2 * kCanonicalMaxVertices + 1> seen{};
    seen.fill(0);
    for (int v = 0; v < n_; ++v) seen[static_cast<std::size_t>(color[static_cast<std::size_t>(v)])] = 1;
    std::array<int, 2 * kCanonicalMaxVertices + 1> rank{};
    int r = 0;
    for (std::size_t c = 0; c < seen.size(); ++c) {
      rank[c] = r;
      r += seen[c];
    }
    for (int v = 0; v < n_; ++v)
      color[static_cast<std::size_t>(v)] = rank[static_cast<std::size_t>(color[static_cast<std::size_t>(v)])];
  }

  // Is v equivalent to an already-tried sibling under some known
  // automorphism fixing every vertex of the current path?
  bool in_known_orbit(int v, const std::vector<int>& tried, const std::vector<int>& path) const {
    if (tried.empty() || autos_.empty()) return false;
    std::array<int, kCanonicalMaxVertices> parent{};
    for (int i = 0; i < n_; ++i) parent[static_cast<std::size_t>(i)] = i;
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
      return x;
    };
    for (const Label& phi : autos_) {
      bool fixes_path = true;
      for (int p : path) {
        if (phi[static_cast<std::size_t>(p)] != p) {
          fixes_path = false;
          break;
        }
      }
      if (!fixes_path) continue;
      for (int x = 0; x < n_; ++x) {
        const int a = find(x), b = find(phi[static_cast<std::size_t>(x)]);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
      }
    }
    const int rv = find(v);
    for (int u : tried)
      if (find(u) == rv) return true;
    return false;
  }

  void process_leaf(const std::array<int, kCanonicalMaxVertices>& color) {
    Label label{};
    for (int v = 0; v < n_; ++v) label[static_cast<std::size_t>(color[static_cast<std::size_t>(v)])] = v;
    Code code{};
    for (int i = 0; i < n_; ++i) {
      std::uint64_t row = 0;
      for (int j = 0; j < n_; ++j)
        if (g_.has_edge(label[static_cast<std::size_t>(i)], label[static_cast<std::size_t>(j)]))
          row |= std::uint64_t{1} << j;
      code[static_cast<std::size_t>(i)] = row;
    }
    if (!have_first_) {
      have_first_ = true;
      first_code_ = code;
      first_label_ = label;
      best_code_ = code;
      best_label_ = label;
      return;
    }
    if (code == first_code_ && label != first_label_) record_automorphism(first_label_, label);
    if (code < best_code_) {
      best_code_ = code;
      best_label_ = label;
    } else if (code == best_code_ && label != best_label_) {
      record_automorphism(best_label_, label);
    }
  }

  // Equal codes under labelings a and b yield the automorphism b[i] -> a[i].
  void record_automorphism(const Label& a, const Label& b) {
    Label phi{};
    for (int i = 0; i < n_; ++i) phi[static_cast<std::size_t>(b[static_cast<std::size_t>(i)])] = a[static_cast<std::size_t>(i)];
    for (const Label& known : autos_)
      if (known == phi) return;
    autos_.push_back(phi);
  }

  const Graph& g_;
  int n_;
  bool have_first_ = false;
  Code first_code_{}, best_code_{};
  Label first_label_{}, best_label_{};
  std::vector<Label> autos_;
};

}  // namespace detail

/// Canonical graph6 string of the canonically relabeled graph: isomorphic
/// graphs and only isomorphic graphs share a canonical form.
inline std::string canonical_form(const Graph& g) {
  if (g.n() > kCanonicalMaxVertices)
    throw std::invalid_argument("canonical_form: guarded to n <= " + std::to_string(kCanonicalMaxVertices));
  detail::Canonicalizer canon(g);
  const std::vector<int> label = canon.run();
  std::vector<std::pair<int, int>> edges;
  std::vector<int> pos(static_cast<std::size_t>(g.n()));
  for (int i = 0; i < g.n(); ++i) pos[static_cast<std::size_t>(label[static_cast<std::size_t>(i)])] = i;
  for (auto [u, v] : g.edges())
    edges.emplace_back(pos[static_cast<std::size_t>(u)], pos[static_cast<std::size_t>(v)]);
  return to_graph6(Graph::from_edges(g.n(), edges));
}

}  // namespace seagull
