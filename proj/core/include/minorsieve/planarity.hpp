#pragma once

#include <optional>
#include <vector>

#include "minorsieve/graph.hpp"

namespace minorsieve {

enum class Kuratowski { K5, K33 };

/// A subdivision of K5 or K3,3 inside a host graph.
struct KSubgraph {
  Graph host;
  Kuratowski kind = Kuratowski::K5;
  /// 5 vertices for K5; 6 for K3,3 with the two sides as [0,3) and [3,6).
  std::vector<Vertex> branch_vertices;
  /// One host path per edge of the kind, each listed from one branch vertex
  /// to the other.
  std::vector<std::vector<Vertex>> paths;
};

/// Left-right planarity test.
bool is_planar(const Graph& g);

/// A Kuratowski subgraph if g is nonplanar, otherwise none.
std::optional<KSubgraph> find_k_subgraph(const Graph& g);

/// Checks the structural invariants of a witness against its host.
bool is_valid_k_subgraph(const KSubgraph& k);

/// Exact minor containment for the two Kuratowski graphs, by searching
/// partitions of the vertex set into connected branch sets. Exponential;
/// meant for orders up to about 10.
bool has_minor(const Graph& g, Kuratowski h);

}  // namespace minorsieve
