#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace minorsieve {

using Vertex = std::uint32_t;

/// Unordered vertex pair, stored normalized so that u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  constexpr Edge() = default;
  constexpr Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..order-1.
///
/// Adjacency is held as one 64-bit row per vertex, so the order is capped at
/// kMaxOrder. Graphs are values: every operation below returns a new graph and
/// never mutates its input.
class Graph {
 public:
  static constexpr std::size_t kMaxOrder = 64;

  Graph() = default;
  explicit Graph(std::size_t order);
  Graph(std::size_t order, std::initializer_list<Edge> edges);
  Graph(std::size_t order, std::span<const Edge> edges);

  /// Builds a graph from adjacency rows; validates symmetry and the absence of loops.
  static Graph from_rows(std::span<const std::uint64_t> rows);

  std::size_t order() const noexcept { return rows_.size(); }
  std::size_t size() const noexcept { return size_; }

  bool has_edge(Vertex a, Vertex b) const;
  bool has_edge(Edge e) const { return has_edge(e.u, e.v); }
  std::uint64_t neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const;

  /// Edges in lexicographic order.
  std::vector<Edge> edges() const;
  std::span<const std::uint64_t> rows() const noexcept { return rows_; }

  bool is_complete() const noexcept;

  /// Mask with one bit per vertex.
  std::uint64_t vertex_mask() const noexcept;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(Vertex v) const;

  std::vector<std::uint64_t> rows_;
  std::size_t size_ = 0;

  friend Graph add_edge(const Graph& g, Vertex a, Vertex b);
};

// Named constructions.
Graph empty_graph(std::size_t order);
Graph complete_graph(std::size_t order);
Graph complete_bipartite(std::size_t left, std::size_t right);
Graph path_graph(std::size_t order);
Graph cycle_graph(std::size_t order);
Graph grid_graph(std::size_t rows, std::size_t cols);
Graph petersen_graph();

// Minor operations. Relabeling after a vertex disappears is order-preserving:
// vertices above the removed one shift down by one.
Graph delete_vertex(const Graph& g, Vertex v);
Graph delete_edge(const Graph& g, Edge e);
/// Merges e.v into e.u (then closes the gap at e.v); parallel edges collapse.
Graph contract_edge(const Graph& g, Edge e);
Graph add_edge(const Graph& g, Vertex a, Vertex b);
/// Replaces e by a 2-path through a new vertex with label order().
Graph subdivide_edge(const Graph& g, Edge e);

/// Keeps the vertices in `keep` (relabelled in increasing order).
Graph induced_subgraph(const Graph& g, std::uint64_t keep);
/// Vertex v of g becomes vertex perm[v] of the result.
Graph relabel(const Graph& g, std::span<const Vertex> perm);

// Unions. Vertices of g1 keep their labels; the remaining vertices of g2
// follow in increasing order.
Graph disjoint_union(const Graph& g1, const Graph& g2);
Graph one_vertex_union(const Graph& g1, Vertex v1, const Graph& g2, Vertex v2);
Graph two_vertex_union(const Graph& g1, std::pair<Vertex, Vertex> p1, const Graph& g2,
                       std::pair<Vertex, Vertex> p2);

std::size_t degree(const Graph& g, Vertex v);
std::size_t min_degree(const Graph& g);
std::size_t max_degree(const Graph& g);

/// Components as vertex sets, sorted by least vertex; each set ascending.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

/// Vertex connectivity: the largest k with order > k and no cut of size < k.
/// Complete graphs give order-1; disconnected graphs give 0.
std::size_t connectivity(const Graph& g);

/// Maximum number of internally vertex-disjoint s-t paths (s, t nonadjacent).
std::size_t local_connectivity(const Graph& g, Vertex s, Vertex t);

}  // namespace minorsieve
