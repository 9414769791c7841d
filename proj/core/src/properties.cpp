#include "minorsieve/properties.hpp"

#include <stdexcept>
#include <string>

#include "minorsieve/planarity.hpp"

namespace minorsieve {

namespace {

Witness vertex_witness(Vertex v) { return {Witness::Kind::Vertex, v, 0}; }
Witness edge_witness(const Edge& e) { return {Witness::Kind::Edge, e.u, e.v}; }

template <class Pred>
std::optional<Witness> first_vertex(const Graph& g, Pred pred) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (pred(delete_vertex(g, v))) return vertex_witness(v);
  }
  return std::nullopt;
}

template <class Op, class Pred>
std::optional<Witness> first_edge(const Graph& g, Op op, Pred pred) {
  for (const Edge& e : g.edges()) {
    if (pred(op(g, e))) return edge_witness(e);
  }
  return std::nullopt;
}

bool nonplanar(const Graph& g) { return !is_planar(g); }

Graph minus_edge(const Graph& g, const Edge& e) { return delete_edge(g, e); }
Graph over_edge(const Graph& g, const Edge& e) { return contract_edge(g, e); }

// Nonadjacent pair whose addition gives a graph with the wanted planarity.
std::optional<Witness> first_addition(const Graph& g, bool want_planar) {
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (g.has_edge(u, v)) continue;
      if (is_planar(add_edge(g, u, v)) == want_planar) {
        return Witness{Witness::Kind::VertexPair, u, v};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::string_view to_string(PropertyId p) {
  switch (p) {
    case PropertyId::AN: return "AN";
    case PropertyId::CAN: return "CAN";
    case PropertyId::NA: return "NA";
    case PropertyId::NE: return "NE";
    case PropertyId::NC: return "NC";
    case PropertyId::IA: return "IA";
    case PropertyId::IE: return "IE";
    case PropertyId::IC: return "IC";
  }
  return "?";
}

PropertyId parse_property(std::string_view s) {
  for (PropertyId p : kAllProperties) {
    if (to_string(p) == s) return p;
  }
  throw std::invalid_argument("unknown property: " + std::string(s));
}

bool implies_nonplanar(PropertyId p) { return p != PropertyId::AN && p != PropertyId::CAN; }

std::optional<Witness> find_apex_vertex(const Graph& g) { return first_vertex(g, is_planar); }

std::optional<Witness> find_apex_edge(const Graph& g) {
  return first_edge(g, minus_edge, is_planar);
}

std::optional<Witness> find_contraction_apex(const Graph& g) {
  return first_edge(g, over_edge, is_planar);
}

bool check(const Graph& g, PropertyId p) {
  switch (p) {
    case PropertyId::AN:
      return is_planar(g) && first_addition(g, false).has_value();
    case PropertyId::CAN:
      return is_planar(g) && !g.is_complete() && !first_addition(g, true).has_value();
    case PropertyId::NA:
      return nonplanar(g) && !find_apex_vertex(g);
    case PropertyId::NE:
      return nonplanar(g) && !find_apex_edge(g);
    case PropertyId::NC:
      return nonplanar(g) && !find_contraction_apex(g);
    case PropertyId::IA:
    case PropertyId::IE:
    case PropertyId::IC:
      return witness(g, p).has_value();
  }
  return false;
}

std::optional<Witness> witness(const Graph& g, PropertyId p) {
  switch (p) {
    case PropertyId::AN:
      if (!is_planar(g)) return std::nullopt;
      return first_addition(g, false);
    case PropertyId::IA: return first_vertex(g, nonplanar);
    case PropertyId::IE: return first_edge(g, minus_edge, nonplanar);
    case PropertyId::IC: return first_edge(g, over_edge, nonplanar);
    default: return std::nullopt;
  }
}

}  // namespace minorsieve
