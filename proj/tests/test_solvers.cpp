#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "helpers.hpp"
#include "seagull/enumerate.hpp"
#include "seagull/invariants.hpp"
#include "seagull/oracles.hpp"

using namespace seagull;

namespace {
const Graph kTwoTriangles = disjoint_union(Graph::complete(3), Graph::complete(3));

bool is_clique(const Graph& g, const std::vector<int>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!g.has_edge(vs[i], vs[j])) return false;
  return true;
}
}  // namespace

TEST_CASE("clique number on fixed graphs") {
  CHECK(clique_number(Graph::complete(5)) == 5);
  CHECK(clique_number(Graph::cycle(5)) == 2);
  CHECK(clique_number(kTwoTriangles) == 3);

  const auto w = max_clique(kTwoTriangles);
  CHECK(w.size == 3);
  CHECK(static_cast<int>(w.members.size()) == 3);
  CHECK(is_clique(kTwoTriangles, w.members));
}

TEST_CASE("independence number on fixed graphs") {
  CHECK(independence_number(Graph::complete(5)) == 1);
  CHECK(independence_number(Graph::cycle(5)) == 2);
  CHECK(independence_number(kTwoTriangles) == 2);
}

TEST_CASE("independence number agrees with the direct branch-and-bound oracle") {
  for (int n = 1; n <= 6; ++n)
    enumerate_all_graphs(n, [&](const Graph& g) { CHECK(independence_number(g) == independence_bruteforce(g)); });

  std::mt19937_64 rng(7201);
  for (int iter = 0; iter < 300; ++iter) {
    const Graph g = helpers::random_graph(rng, 8 + static_cast<int>(rng() % 3), 0.4);
    CHECK(independence_number(g) == independence_bruteforce(g));
  }
}

TEST_CASE("clique witnesses are cliques of maximum size") {
  std::mt19937_64 rng(7202);
  for (int iter = 0; iter < 300; ++iter) {
    const Graph g = helpers::random_graph(rng, 1 + static_cast<int>(rng() % 10));
    const auto w = max_clique(g);
    CHECK(static_cast<int>(w.members.size()) == w.size);
    CHECK(is_clique(g, w.members));
  }
}

TEST_CASE("min_degree") {
  CHECK(min_degree(Graph::cycle(5)) == 2);
  CHECK(min_degree(Graph::complete(5)) == 4);
  CHECK(min_degree(Graph::complete(1)) == 0);
}

TEST_CASE("maximum matching agrees with the exhaustive oracle") {
  for (int n = 1; n <= 6; ++n)
    enumerate_all_graphs(n, [&](const Graph& g) { CHECK(matching_number(g) == max_matching_bruteforce(g)); });

  std::mt19937_64 rng(7203);
  for (int iter = 0; iter < 400; ++iter) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const Graph g = helpers::random_graph(rng, n, 0.2 + 0.6 * (static_cast<double>(rng() % 100) / 100.0));
    CHECK(matching_number(g) == max_matching_bruteforce(g));
  }
}

TEST_CASE("matching output is a valid matching") {
  std::mt19937_64 rng(7204);
  for (int iter = 0; iter < 200; ++iter) {
    const int n = 1 + static_cast<int>(rng() % 14);
    const Graph g = helpers::random_graph(rng, n);
    const auto mate = maximum_matching(g);
    for (int v = 0; v < n; ++v) {
      if (mate[static_cast<std::size_t>(v)] == -1) continue;
      const int u = mate[static_cast<std::size_t>(v)];
      CHECK(mate[static_cast<std::size_t>(u)] == v);
      CHECK(g.has_edge(u, v));
    }
  }
}

TEST_CASE("chromatic number via complement matching on fixed graphs") {
  CHECK(chromatic_number_alpha2(Graph::complete(5)) == 5);

  // chi(C5) = 3: the complement C5 has matching number 2; cross-checked
  // against the backtracking oracle.
  CHECK(matching_number(complement(Graph::cycle(5))) == 2);
  CHECK(chromatic_number_alpha2(Graph::cycle(5)) == 3);
  CHECK(chromatic_number_bruteforce(Graph::cycle(5)) == 3);

  // Complement of K3+K3 is K3,3 with a perfect matching.
  CHECK(matching_number(complement(kTwoTriangles)) == 3);
  CHECK(chromatic_number_alpha2(kTwoTriangles) == 3);

  CHECK_THROWS_WITH(chromatic_number_alpha2(Graph::empty(3)),
                    Catch::Matchers::ContainsSubstring("bruteforce"));
}

TEST_CASE("chromatic backtracking oracle on fixed graphs") {
  CHECK(chromatic_number_bruteforce(Graph::complete(5)) == 5);
  CHECK(chromatic_number_bruteforce(Graph::empty(4)) == 1);
  CHECK_THROWS_AS(chromatic_number_bruteforce(Graph::empty(13)), std::invalid_argument);
}

TEST_CASE("the two chromatic routes agree on the alpha<=2 universe") {
  for (int n = 1; n <= 6; ++n)
    brute_force_enumerate(n, [&](const Graph& g) {
      CHECK(chromatic_number_alpha2(g) == chromatic_number_bruteforce(g));
    });
}

TEST_CASE("report invariants over the small alpha<=2 universe") {
  for (int n = 1; n <= 7; ++n) {
    enumerate_alpha2(n, [&](const Graph& g) {
      const int alpha = independence_number(g);
      const int omega = clique_number(g);
      const int delta = min_degree(g);
      const int chi = chromatic_number_alpha2(g);
      CHECK(alpha >= 1);
      CHECK(omega >= 1);
      CHECK(delta >= 0);
      CHECK(delta <= n - 1);
      CHECK(chi >= omega);
      CHECK(chi * alpha >= n);
      // complement of a closed neighborhood is a clique
      CHECK(omega >= n - delta - 1);
    });
  }
}

TEST_CASE("disconnected alpha=2 graphs are unions of two cliques") {
  for (int n = 2; n <= 7; ++n) {
    enumerate_alpha2(n, [&](const Graph& g) {
      if (independence_number(g) != 2) return;
      const auto comps = components(g);
      if (comps.size() == 1) return;
      REQUIRE(comps.size() == 2);
      for (const VertexSet& comp : comps) {
        for (int v : comp) CHECK((g.neighbors(v) & comp).size() == comp.size() - 1);
      }
    });
  }
}
