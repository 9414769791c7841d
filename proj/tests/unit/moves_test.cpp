#include <doctest.h>

#include <random>

#include "minorsieve/canonical.hpp"
#include "minorsieve/catalog.hpp"
#include "minorsieve/enumerate.hpp"
#include "minorsieve/moves.hpp"
#include "minorsieve/planarity.hpp"
#include "oracles.hpp"

using namespace minorsieve;

TEST_CASE("triangles") {
  CHECK(triangles(complete_graph(4)).size() == 4);
  CHECK(triangles(complete_graph(5)).size() == 10);
  CHECK(triangles(complete_bipartite(3, 3)).empty());
  CHECK(triangles(complete_bipartite(4, 3)).empty());
  auto t = triangles(complete_graph(3));
  REQUIRE(t.size() == 1);
  CHECK((t[0].a == 0 && t[0].b == 1 && t[0].c == 2));
}

TEST_CASE("triangle_to_star") {
  Graph g = triangle_to_star(complete_graph(4), {0, 1, 2});
  CHECK(g.order() == 5);
  CHECK(g.size() == 6);
  CHECK(g.degree(4) == 3);
  CHECK_FALSE(g.has_edge(0, 1));

  Graph h = triangle_to_star(complete_graph(5), {1, 2, 4});
  CHECK(h.order() == 6);
  CHECK(h.size() == 10);

  CHECK_THROWS_AS(triangle_to_star(complete_bipartite(3, 3), {0, 1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(triangle_to_star(complete_graph(3), {0, 1, 7}), std::invalid_argument);
}

TEST_CASE("star_to_triangle") {
  Graph star = complete_bipartite(1, 3);
  CHECK(star_to_triangle(star, 0) == complete_graph(3));
  CHECK_THROWS_AS(star_to_triangle(subdivide_edge(complete_graph(5), {0, 1}), 5),
                  std::invalid_argument);
  // Neighbours already pairwise adjacent: only the star's edges disappear.
  Graph k4 = complete_graph(4);
  CHECK(star_to_triangle(k4, 0).size() == k4.size() - 3);
}

TEST_CASE("moves invert each other on random triangles") {
  std::mt19937_64 rng(7);
  int tested = 0;
  for (int iter = 0; iter < 400; ++iter) {
    Graph g = oracle::random_graph(rng, 4 + iter % 7, 0.5);
    auto ts = triangles(g);
    if (ts.empty()) continue;
    const auto& t = ts[rng() % ts.size()];
    Graph s = triangle_to_star(g, t);
    CHECK(s.order() == g.order() + 1);
    CHECK(s.size() == g.size());
    CHECK(canonical(star_to_triangle(s, static_cast<Vertex>(g.order()))) == canonical(g));
    ++tested;
  }
  CHECK(tested > 100);
}

TEST_CASE("NE criterion agrees with the direct check") {
  std::size_t calls = 0;
  auto compare = [&](const Graph& g) {
    for (const auto& t : triangles(g)) {
      CHECK(ne_preserved_after_ty(g, t) == check(triangle_to_star(g, t), PropertyId::NE));
      ++calls;
    }
  };
  for (const auto& e : mm_catalog(PropertyId::NE)) {
    if (e.graph.order() <= 8) compare(e.graph);
  }
  // Every NE graph of order <= 8.
  for (std::size_t n = 5; n <= 8; ++n) {
    EnumFilter f;
    f.order = n;
    f.planarity = PlanarityFilter::KeepNonplanar;
    enumerate(f, [&](const Graph& g) {
      if (check(g, PropertyId::NE)) compare(g);
    });
  }
  CHECK(calls > 1000);
  CHECK_THROWS_AS(ne_preserved_after_ty(complete_graph(5), {0, 1, 2}), std::invalid_argument);
}

TEST_CASE("explore_family") {
  auto seeds = build_two_cut_mmne();
  auto report = explore_family(seeds, PropertyId::NE, 1);
  CHECK(report.scanned > seeds.size());
  CHECK(!report.found.empty());
  for (const auto& g : report.found) CHECK(is_mmne(g));
  // Every seed is MMNE, so every seed is reported.
  for (const auto& s : seeds) {
    bool present = false;
    for (const auto& g : report.found) present = present || g == canonical_graph(s);
    CHECK(present);
  }
  CHECK(explore_family(seeds, PropertyId::NE, 1, {.jobs = 3}).found == report.found);

  CHECK(explore_family({}, PropertyId::NC, 2).found.empty());
  CHECK(explore_family({}, PropertyId::NC, 2).scanned == 0);
  CHECK_THROWS_AS(explore_family(seeds, PropertyId::NE, 0), std::invalid_argument);
  CHECK_THROWS_AS(explore_family(seeds, PropertyId::NA, 1), std::invalid_argument);
}
