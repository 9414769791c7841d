#include <doctest.h>

#include <random>

#include "minorsieve/planarity.hpp"
#include "minorsieve/properties.hpp"
#include "oracles.hpp"

using namespace minorsieve;

namespace {

Graph k5e() { return delete_edge(complete_graph(5), {0, 1}); }
Graph k33e() { return delete_edge(complete_bipartite(3, 3), {0, 3}); }
Graph two_k5_sharing_edge() { return two_vertex_union(complete_graph(5), {0, 1}, complete_graph(5), {0, 1}); }

// Definitions evaluated literally, with planarity taken from the minor oracle.
bool planar(const Graph& g) {
  return !has_minor(g, Kuratowski::K5) && !has_minor(g, Kuratowski::K33);
}

bool literal(const Graph& g, PropertyId p) {
  const auto edges = g.edges();
  std::vector<Edge> missing;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.has_edge(u, v)) missing.emplace_back(u, v);
  auto all_v = [&](auto pred) {
    for (Vertex v = 0; v < g.order(); ++v)
      if (!pred(delete_vertex(g, v))) return false;
    return true;
  };
  auto any_v = [&](auto pred) { return !all_v([&](const Graph& h) { return !pred(h); }); };
  auto all_e = [&](auto op, auto pred) {
    for (const Edge& e : edges)
      if (!pred(op(g, e))) return false;
    return true;
  };
  auto any_e = [&](auto op, auto pred) {
    return !all_e(op, [&](const Graph& h) { return !pred(h); });
  };
  auto del = [](const Graph& h, Edge e) { return delete_edge(h, e); };
  auto con = [](const Graph& h, Edge e) { return contract_edge(h, e); };
  auto nonplanar = [](const Graph& h) { return !planar(h); };
  switch (p) {
    case PropertyId::NA: return !planar(g) && all_v(nonplanar);
    case PropertyId::NE: return !planar(g) && all_e(del, nonplanar);
    case PropertyId::NC: return !planar(g) && all_e(con, nonplanar);
    case PropertyId::IA: return any_v(nonplanar);
    case PropertyId::IE: return any_e(del, nonplanar);
    case PropertyId::IC: return any_e(con, nonplanar);
    case PropertyId::AN:
    case PropertyId::CAN: {
      if (!planar(g)) return false;
      std::size_t bad = 0;
      for (const Edge& e : missing) bad += !planar(add_edge(g, e.u, e.v));
      return p == PropertyId::AN ? bad > 0 : (!missing.empty() && bad == missing.size());
    }
  }
  return false;
}

}  // namespace

TEST_CASE("apex vertex") {
  REQUIRE(find_apex_vertex(complete_graph(5)));
  CHECK(find_apex_vertex(complete_graph(5))->u == 0);
  CHECK_FALSE(find_apex_vertex(complete_graph(6)));
  const Graph k33 = complete_bipartite(3, 3);
  CHECK_FALSE(find_apex_vertex(disjoint_union(k33, k33)));
}

TEST_CASE("apex edge") {
  const auto e = find_apex_edge(complete_graph(5));
  REQUIRE(e);
  CHECK(e->kind == Witness::Kind::Edge);
  CHECK((e->u == 0 && e->v == 1));
  CHECK_FALSE(find_apex_edge(complete_bipartite(4, 3)));
}

TEST_CASE("contraction apex") {
  const Graph g = two_k5_sharing_edge();
  const auto e = find_contraction_apex(g);
  REQUIRE(e);
  CHECK((e->u == 0 && e->v == 1));
  CHECK_FALSE(find_contraction_apex(delete_edge(g, {0, 1})));
  const auto k4 = find_contraction_apex(complete_graph(4));
  REQUIRE(k4);
  CHECK((k4->u == 0 && k4->v == 1));
}

TEST_CASE("property examples") {
  CHECK(check(k5e(), PropertyId::CAN));
  CHECK(check(k33e(), PropertyId::AN));
  CHECK(check(disjoint_union(empty_graph(1), complete_graph(5)), PropertyId::IA));
  CHECK(check(complete_graph(6), PropertyId::NA));
  CHECK_FALSE(check(complete_graph(4), PropertyId::AN));
  CHECK_FALSE(check(complete_graph(4), PropertyId::CAN));
  CHECK_FALSE(check(complete_graph(5), PropertyId::AN));
  CHECK_FALSE(check(complete_graph(5), PropertyId::CAN));
  // vacuous quantifiers do not make planar graphs NA/NE/NC
  CHECK_FALSE(check(empty_graph(3), PropertyId::NE));
  CHECK_FALSE(check(empty_graph(1), PropertyId::NA));
  CHECK_FALSE(check(empty_graph(2), PropertyId::NC));
}

TEST_CASE("property names round trip") {
  for (PropertyId p : kAllProperties) CHECK(parse_property(to_string(p)) == p);
  CHECK_THROWS_AS(parse_property("XX"), std::invalid_argument);
}

TEST_CASE("check matches the literal definitions on random graphs") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 600; ++trial) {
    const std::size_t n = 4 + trial % 5;
    const Graph g = oracle::random_graph(rng, n, 0.4 + 0.08 * (trial % 7));
    for (PropertyId p : kAllProperties) CHECK(check(g, p) == literal(g, p));
  }
}

TEST_CASE("implications between properties") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 1500; ++trial) {
    const std::size_t n = 3 + trial % 8;
    const Graph g = oracle::random_graph(rng, n, 0.3 + 0.07 * (trial % 8));
    if (is_planar(g) && !g.is_complete() && check(g, PropertyId::CAN)) {
      CHECK(check(g, PropertyId::AN));
    }
    for (PropertyId p : {PropertyId::IA, PropertyId::IE, PropertyId::IC}) {
      if (check(g, p)) CHECK_FALSE(is_planar(g));
    }
    // planar graphs of positive order are apex; nonplanar ones are apex unless NA
    CHECK(!find_apex_vertex(g).has_value() == (g.order() == 0 || check(g, PropertyId::NA)));
  }
}

TEST_CASE("witnesses are least and certify their property") {
  const Graph g = disjoint_union(empty_graph(1), complete_graph(5));
  const auto w = witness(g, PropertyId::IA);
  REQUIRE(w);
  CHECK(w->u == 0);
  const auto an = witness(k33e(), PropertyId::AN);
  REQUIRE(an);
  CHECK(an->kind == Witness::Kind::VertexPair);
  CHECK_FALSE(is_planar(add_edge(k33e(), an->u, an->v)));
  CHECK_FALSE(witness(complete_graph(5), PropertyId::NE));
}
