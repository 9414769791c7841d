#pragma once

#include <optional>
#include <string_view>

#include "minorsieve/graph.hpp"

namespace minorsieve {

enum class PropertyId { AN, CAN, NA, NE, NC, IA, IE, IC };

inline constexpr PropertyId kAllProperties[] = {PropertyId::AN, PropertyId::CAN, PropertyId::NA,
                                                PropertyId::NE, PropertyId::NC,  PropertyId::IA,
                                                PropertyId::IE, PropertyId::IC};

std::string_view to_string(PropertyId p);
/// Parses "AN", "CAN", ... (case-sensitive); throws std::invalid_argument.
PropertyId parse_property(std::string_view s);

/// True for the properties that force nonplanarity (all but AN and CAN).
bool implies_nonplanar(PropertyId p);

struct Witness {
  enum class Kind { Vertex, Edge, VertexPair };
  Kind kind = Kind::Vertex;
  Vertex u = 0;
  Vertex v = 0;  // unused for Kind::Vertex

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Least v with g - v planar.
std::optional<Witness> find_apex_vertex(const Graph& g);
/// Least edge e with g - e planar.
std::optional<Witness> find_apex_edge(const Graph& g);
/// Least edge e with g / e planar.
std::optional<Witness> find_contraction_apex(const Graph& g);

bool check(const Graph& g, PropertyId p);

/// The least witness certifying p, when p has one: the nonplanar deletion or
/// contraction for IA/IE/IC, the nonadjacent pair for AN. None otherwise.
std::optional<Witness> witness(const Graph& g, PropertyId p);

}  // namespace minorsieve
