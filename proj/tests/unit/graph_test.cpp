#include <doctest.h>

#include <random>
#include <stdexcept>

#include "minorsieve/canonical.hpp"
#include "minorsieve/graph.hpp"
#include "oracles.hpp"

using namespace minorsieve;

namespace {

Graph k33_minus_e() { return delete_edge(complete_bipartite(3, 3), {0, 3}); }

}  // namespace

TEST_CASE("construction rejects loops, duplicates and out-of-range vertices") {
  CHECK_THROWS_AS(Graph(3, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(65), std::invalid_argument);
  const Graph g(4, {{2, 0}, {3, 1}});
  CHECK(g.size() == 2);
  CHECK(g.edges() == std::vector<Edge>{{0, 2}, {1, 3}});
}

TEST_CASE("delete_vertex") {
  CHECK(is_isomorphic(delete_vertex(complete_graph(5), 3), complete_graph(4)));
  const Graph k1_k5 = disjoint_union(empty_graph(1), complete_graph(5));
  CHECK(delete_vertex(k1_k5, 0) == complete_graph(5));
  const Graph p = delete_vertex(path_graph(3), 1);
  CHECK(p.order() == 2);
  CHECK(p.size() == 0);
  CHECK_THROWS_AS(delete_vertex(path_graph(3), 3), std::invalid_argument);
  // order-preserving relabelling
  const Graph g(4, {{0, 3}, {2, 3}});
  CHECK(delete_vertex(g, 1) == Graph(3, {{0, 2}, {1, 2}}));
}

TEST_CASE("delete_edge") {
  const Graph k5e = delete_edge(complete_graph(5), {1, 4});
  CHECK(k5e.order() == 5);
  CHECK(k5e.size() == 9);
  CHECK(delete_edge(complete_graph(2), {0, 1}) == empty_graph(2));
  CHECK(k33_minus_e().size() == 8);
  CHECK_THROWS_AS(delete_edge(complete_bipartite(3, 3), {0, 1}), std::invalid_argument);
}

TEST_CASE("contract_edge") {
  CHECK(contract_edge(cycle_graph(3), {0, 2}) == complete_graph(2));
  CHECK(contract_edge(complete_graph(5), {2, 3}) == complete_graph(4));
  const Graph bar_k5 = subdivide_edge(complete_graph(5), {0, 1});
  CHECK(is_isomorphic(contract_edge(bar_k5, {0, 5}), complete_graph(5)));
  CHECK_THROWS_AS(contract_edge(path_graph(3), {0, 2}), std::invalid_argument);
  // u keeps its label, v disappears, higher labels shift down
  const Graph g(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(contract_edge(g, {1, 2}) == Graph(3, {{0, 1}, {1, 2}}));
}

TEST_CASE("add_edge") {
  const Graph k5e = delete_edge(complete_graph(5), {0, 1});
  CHECK(add_edge(k5e, 0, 1) == complete_graph(5));
  const Graph k33e = add_edge(complete_bipartite(3, 3), 0, 1);
  CHECK(k33e.size() == 10);
  CHECK(add_edge(empty_graph(2), 0, 1) == complete_graph(2));
  CHECK_THROWS_AS(add_edge(complete_graph(3), 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(add_edge(complete_graph(3), 2, 2), std::invalid_argument);
}

TEST_CASE("subdivide_edge") {
  const Graph bar_k5 = subdivide_edge(complete_graph(5), {0, 1});
  CHECK(bar_k5.order() == 6);
  CHECK(bar_k5.size() == 11);
  CHECK(is_isomorphic(subdivide_edge(complete_graph(2), {0, 1}), path_graph(3)));
  CHECK_THROWS_AS(subdivide_edge(path_graph(3), {0, 2}), std::invalid_argument);
}

TEST_CASE("subdivide then contract the new edge is the identity up to isomorphism") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = oracle::random_graph(rng, 2 + trial % 8, 0.5);
    for (const Edge& e : g.edges()) {
      const Graph s = subdivide_edge(g, e);
      const auto w = static_cast<Vertex>(g.order());
      CHECK(is_isomorphic(contract_edge(s, {e.u, w}), g));
    }
  }
}

TEST_CASE("unions") {
  const Graph k5 = complete_graph(5);
  const Graph du = disjoint_union(k5, k5);
  CHECK(du.order() == 10);
  CHECK(du.size() == 20);
  const Graph ou = one_vertex_union(k5, 0, k5, 0);
  CHECK(ou.order() == 9);
  CHECK(ou.size() == 20);
  // K3,3-e glued on the endpoints of the missing edge
  const Graph k = k33_minus_e();
  const Graph tu = two_vertex_union(k, {0, 3}, k, {0, 3});
  CHECK(tu.order() == 10);
  CHECK(tu.size() == 16);
  // shared edges merge
  const Graph merged = two_vertex_union(k5, {0, 1}, k5, {0, 1});
  CHECK(merged.order() == 8);
  CHECK(merged.size() == 19);
  CHECK_THROWS_AS(two_vertex_union(k5, {0, 0}, k5, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(one_vertex_union(k5, 5, k5, 0), std::invalid_argument);
}

TEST_CASE("degrees") {
  CHECK(min_degree(complete_graph(5)) == 4);
  CHECK(min_degree(disjoint_union(empty_graph(1), complete_graph(5))) == 0);
  CHECK(min_degree(subdivide_edge(complete_graph(5), {0, 1})) == 2);
  CHECK_THROWS_AS(min_degree(empty_graph(0)), std::invalid_argument);
  CHECK(degree(path_graph(3), 1) == 2);
}

TEST_CASE("connectivity follows the order > k definition") {
  CHECK(connectivity(complete_graph(5)) == 4);
  CHECK(connectivity(complete_bipartite(3, 3)) == 3);
  const Graph k5 = complete_graph(5);
  CHECK(connectivity(one_vertex_union(k5, 0, k5, 0)) == 1);
  CHECK(connectivity(disjoint_union(k5, k5)) == 0);
  CHECK(connectivity(empty_graph(1)) == 0);
  CHECK(connectivity(complete_graph(2)) == 1);
  CHECK(connectivity(petersen_graph()) == 3);
  CHECK(connectivity(cycle_graph(6)) == 2);
  CHECK_THROWS_AS(connectivity(empty_graph(0)), std::invalid_argument);
}

TEST_CASE("connectivity never exceeds minimum degree") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    const Graph g = oracle::random_graph(rng, 2 + trial % 9, 0.3 + 0.05 * (trial % 10));
    if (is_connected(g)) CHECK(connectivity(g) <= min_degree(g));
  }
}

TEST_CASE("connected components") {
  const auto comps = connected_components(disjoint_union(complete_graph(5), complete_bipartite(3, 3)));
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].size() == 5);
  CHECK(comps[1].size() == 6);
  CHECK(connected_components(petersen_graph()).size() == 1);
  CHECK(connected_components(empty_graph(3)).size() == 3);
  CHECK(connected_components(empty_graph(0)).empty());
}

TEST_CASE("deletion and contraction of disjoint edges commute") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = oracle::random_graph(rng, 4 + trial % 6, 0.5);
    const auto edges = g.edges();
    for (const Edge& e : edges) {
      for (const Edge& f : edges) {
        if (e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v) continue;
        const Graph a = delete_edge(g, e);
        const Graph lhs = contract_edge(a, f);
        // e survives contraction of f with shifted labels
        const Graph b = contract_edge(g, f);
        auto shift = [&](Vertex x) { return x == f.v ? f.u : (x > f.v ? x - 1 : x); };
        const Graph rhs = delete_edge(b, {shift(e.u), shift(e.v)});
        CHECK(canonical(lhs) == canonical(rhs));
      }
    }
  }
}

TEST_CASE("vertex deletion equals deleting its edges then the isolated vertex") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = oracle::random_graph(rng, 2 + trial % 8, 0.5);
    for (Vertex v = 0; v < g.order(); ++v) {
      Graph h = g;
      for (const Edge& e : g.edges()) {
        if (e.u == v || e.v == v) h = delete_edge(h, e);
      }
      CHECK(h.degree(v) == 0);
      CHECK(canonical(delete_vertex(h, v)) == canonical(delete_vertex(g, v)));
    }
  }
}

TEST_CASE("contraction drops exactly one vertex and never adds edges") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = oracle::random_graph(rng, 2 + trial % 9, 0.6);
    for (const Edge& e : g.edges()) {
      const Graph c = contract_edge(g, e);
      CHECK(c.order() == g.order() - 1);
      CHECK(c.size() < g.size());
    }
  }
}
