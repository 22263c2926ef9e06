#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "seagull/clique.hpp"
#include "seagull/matching.hpp"

namespace seagull {

/// Scalar parameters of one graph. cm and eta are filled by the collection
/// and minor solvers; chi and eta stay empty when a size guard skipped them.
struct InvariantReport {
  int n = 0;
  int alpha = 0;
  int omega = 0;
  int delta = 0;
  std::optional<int> chi;
  int cm = 0;
  std::optional<int> eta;
};

inline int min_degree(const Graph& g) {
  int d = g.n();
  for (int v = 0; v < g.n(); ++v) d = std::min(d, g.degree(v));
  return d;
}

/// Exact chromatic number for graphs with independence number at most 2.
/// Color classes have size <= 2, so an optimal coloring is a maximum
/// matching of the complement plus singletons: chi = n - matching_number.
/// The complement is triangle-free but in general not bipartite, hence the
/// blossom matcher.
inline int chromatic_number_alpha2(const Graph& g) {
  if (independence_number(g) > 2)
    throw std::invalid_argument(
        "chromatic_number_alpha2: independence number exceeds 2; use the chromatic_number_bruteforce oracle");
  return g.n() - matching_number(complement(g));
}

inline constexpr int kChromaticBruteforceMaxVertices = 12;

namespace detail {

inline bool colorable_rec(const Graph& g, int k, int v, int used, std::vector<std::uint64_t>& class_mask) {
  if (v == g.n()) return true;
  const int limit = std::min(used + 1, k);  // a fresh color only as the next unused one
  for (int c = 0; c < limit; ++c) {
    if (class_mask[static_cast<std::size_t>(c)] & g.neighbors(v).bits) continue;
    class_mask[static_cast<std::size_t>(c)] |= std::uint64_t{1} << v;
    if (colorable_rec(g, k, v + 1, std::max(used, c + 1), class_mask)) return true;
    class_mask[static_cast<std::size_t>(c)] &= ~(std::uint64_t{1} << v);
  }
  return false;
}

}  // namespace detail

/// Exact chromatic number by backtracking, trying k = omega, omega+1, ...
/// Test oracle; guarded to small orders.
inline int chromatic_number_bruteforce(const Graph& g) {
  if (g.n() > kChromaticBruteforceMaxVertices)
    throw std::invalid_argument("chromatic_number_bruteforce: guarded to n <= " +
                                std::to_string(kChromaticBruteforceMaxVertices));
  for (int k = clique_number(g);; ++k) {
    std::vector<std::uint64_t> class_mask(static_cast<std::size_t>(k), 0);
    if (detail::colorable_rec(g, k, 0, 0, class_mask)) return k;
  }
}

}  // namespace seagull
