#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "minorsieve/enumerate.hpp"
#include "minorsieve/graph.hpp"
#include "minorsieve/minimality.hpp"
#include "minorsieve/properties.hpp"

namespace minorsieve {

struct Triangle {
  Vertex a = 0, b = 0, c = 0;
};

/// Triangles of g with a < b < c, lexicographic.
std::vector<Triangle> triangles(const Graph& g);

/// Delta-to-wye: removes the triangle's three edges and joins a new vertex
/// (label order()) to its corners. Throws std::invalid_argument if t is not
/// a triangle of g.
Graph triangle_to_star(const Graph& g, const Triangle& t);

/// Wye-to-delta: removes v and makes its three neighbours pairwise adjacent.
/// Pairs that were already adjacent stay single edges. Throws
/// std::invalid_argument unless v has degree 3.
Graph star_to_triangle(const Graph& g, Vertex v);

/// For NE g, decides whether triangle_to_star(g, t) is NE by testing only the
/// three new edges: it is exactly when deleting any one of them leaves a
/// nonplanar graph. Throws std::invalid_argument if g is not NE or t is not
/// a triangle.
bool ne_preserved_after_ty(const Graph& g, const Triangle& t);

struct ExploreOptions {
  bool triangle_to_star = true;
  bool star_to_triangle = true;
  std::size_t jobs = 1;
  SieveOptions sieve;
};

/// Closes the seeds under the enabled moves for `depth` rounds, removes isomorphic
/// copies and tests every member with the NE or NC minimality sieve.
/// `scanned` counts distinct members; `found` holds the minor-minimal ones.
/// Throws std::invalid_argument for depth 0 or p other than NE and NC.
SearchReport explore_family(const std::vector<Graph>& seeds, PropertyId p, std::size_t depth,
                            const ExploreOptions& options = {});

}  // namespace minorsieve
