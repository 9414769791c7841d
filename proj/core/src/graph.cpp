#include "minorsieve/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

namespace minorsieve {

namespace {

constexpr std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << i; }

// Bits below position p stay, bits above shift down by one, bit p is dropped.
constexpr std::uint64_t close_gap(std::uint64_t row, std::size_t p) {
  const std::uint64_t low = row & (bit(p) - 1);
  const std::uint64_t high = p + 1 < 64 ? (row >> (p + 1)) << p : 0;
  return low | high;
}

void check_order(std::size_t order) {
  if (order > Graph::kMaxOrder) {
    throw std::invalid_argument("graph order " + std::to_string(order) + " exceeds " +
                                std::to_string(Graph::kMaxOrder));
  }
}

}  // namespace

Graph::Graph(std::size_t order) : rows_(order, 0) { check_order(order); }

Graph::Graph(std::size_t order, std::initializer_list<Edge> edges)
    : Graph(order, std::span<const Edge>(edges.begin(), edges.size())) {}

Graph::Graph(std::size_t order, std::span<const Edge> edges) : Graph(order) {
  for (const Edge& e : edges) {
    if (e.u == e.v) throw std::invalid_argument("loop at vertex " + std::to_string(e.u));
    check_vertex(e.v);
    if (rows_[e.u] & bit(e.v)) {
      throw std::invalid_argument("duplicate edge (" + std::to_string(e.u) + "," +
                                  std::to_string(e.v) + ")");
    }
    rows_[e.u] |= bit(e.v);
    rows_[e.v] |= bit(e.u);
    ++size_;
  }
}

Graph Graph::from_rows(std::span<const std::uint64_t> rows) {
  Graph g(rows.size());
  const std::uint64_t all = g.vertex_mask();
  std::size_t degree_sum = 0;
  for (std::size_t v = 0; v < rows.size(); ++v) {
    const std::uint64_t r = rows[v];
    if (r & ~all) throw std::invalid_argument("adjacency row references a missing vertex");
    if (r & bit(v)) throw std::invalid_argument("adjacency row contains a loop");
    for (std::uint64_t m = r; m; m &= m - 1) {
      if (!(rows[std::countr_zero(m)] & bit(v))) {
        throw std::invalid_argument("adjacency rows are not symmetric");
      }
    }
    degree_sum += std::popcount(r);
  }
  g.rows_.assign(rows.begin(), rows.end());
  g.size_ = degree_sum / 2;
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (v >= rows_.size()) {
    throw std::invalid_argument("vertex " + std::to_string(v) + " out of range for order " +
                                std::to_string(rows_.size()));
  }
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  check_vertex(a);
  check_vertex(b);
  return (rows_[a] >> b) & 1U;
}

std::uint64_t Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return rows_[v];
}

std::size_t Graph::degree(Vertex v) const {
  return static_cast<std::size_t>(std::popcount(neighbors(v)));
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(size_);
  for (std::size_t u = 0; u < rows_.size(); ++u) {
    const std::uint64_t above = u + 1 < 64 ? ~(bit(u + 1) - 1) : 0;
    for (std::uint64_t m = rows_[u] & above; m; m &= m - 1) {
      out.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(std::countr_zero(m)));
    }
  }
  return out;
}

bool Graph::is_complete() const noexcept {
  const std::size_t n = rows_.size();
  return size_ == n * (n - (n > 0 ? 1 : 0)) / 2;
}

std::uint64_t Graph::vertex_mask() const noexcept {
  return rows_.size() == 64 ? ~std::uint64_t{0} : bit(rows_.size()) - 1;
}

Graph empty_graph(std::size_t order) { return Graph(order); }

Graph complete_graph(std::size_t order) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < order; ++u) {
    for (Vertex v = u + 1; v < order; ++v) edges.emplace_back(u, v);
  }
  return Graph(order, edges);
}

Graph complete_bipartite(std::size_t left, std::size_t right) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < left; ++u) {
    for (std::size_t j = 0; j < right; ++j) edges.emplace_back(u, static_cast<Vertex>(left + j));
  }
  return Graph(left + right, edges);
}

Graph path_graph(std::size_t order) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < order; ++v) edges.emplace_back(v - 1, v);
  return Graph(order, edges);
}

Graph cycle_graph(std::size_t order) {
  if (order < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < order; ++v) edges.emplace_back(v, static_cast<Vertex>((v + 1) % order));
  return Graph(order, edges);
}

Graph grid_graph(std::size_t rows, std::size_t cols) {
  std::vector<Edge> edges;
  auto id = [cols](std::size_t r, std::size_t c) { return static_cast<Vertex>(r * cols + c); };
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) edges.emplace_back(id(r, c), id(r + 1, c));
    }
  }
  return Graph(rows * cols, edges);
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);           // outer cycle
    edges.emplace_back(i, i + 5);                 // spokes
    edges.emplace_back(i + 5, (i + 2) % 5 + 5);  // inner pentagram
  }
  return Graph(10, edges);
}

Graph delete_vertex(const Graph& g, Vertex v) {
  if (v >= g.order()) throw std::invalid_argument("delete_vertex: vertex out of range");
  std::vector<std::uint64_t> rows;
  rows.reserve(g.order() - 1);
  for (std::size_t u = 0; u < g.order(); ++u) {
    if (u != v) rows.push_back(close_gap(g.rows()[u], v));
  }
  return Graph::from_rows(rows);
}

Graph delete_edge(const Graph& g, Edge e) {
  if (e.u == e.v || e.v >= g.order() || !g.has_edge(e)) {
    throw std::invalid_argument("delete_edge: edge not present");
  }
  std::vector<std::uint64_t> rows(g.rows().begin(), g.rows().end());
  rows[e.u] &= ~bit(e.v);
  rows[e.v] &= ~bit(e.u);
  return Graph::from_rows(rows);
}

Graph contract_edge(const Graph& g, Edge e) {
  if (e.u == e.v || e.v >= g.order() || !g.has_edge(e)) {
    throw std::invalid_argument("contract_edge: edge not present");
  }
  std::vector<std::uint64_t> rows(g.rows().begin(), g.rows().end());
  const std::uint64_t merged = (rows[e.u] | rows[e.v]) & ~(bit(e.u) | bit(e.v));
  for (std::uint64_t m = rows[e.v]; m; m &= m - 1) rows[std::countr_zero(m)] &= ~bit(e.v);
  rows[e.v] = 0;
  rows[e.u] = merged;
  for (std::uint64_t m = merged; m; m &= m - 1) rows[std::countr_zero(m)] |= bit(e.u);
  std::vector<std::uint64_t> out;
  out.reserve(rows.size() - 1);
  for (std::size_t w = 0; w < rows.size(); ++w) {
    if (w != e.v) out.push_back(close_gap(rows[w], e.v));
  }
  return Graph::from_rows(out);
}

Graph add_edge(const Graph& g, Vertex a, Vertex b) {
  if (a == b) throw std::invalid_argument("add_edge: loops are not allowed");
  if (g.has_edge(a, b)) throw std::invalid_argument("add_edge: edge already present");
  Graph out = g;
  out.rows_[a] |= bit(b);
  out.rows_[b] |= bit(a);
  ++out.size_;
  return out;
}

Graph subdivide_edge(const Graph& g, Edge e) {
  if (e.u == e.v || e.v >= g.order() || !g.has_edge(e)) {
    throw std::invalid_argument("subdivide_edge: edge not present");
  }
  std::vector<std::uint64_t> rows(g.rows().begin(), g.rows().end());
  const std::size_t w = rows.size();
  check_order(w + 1);
  rows[e.u] = (rows[e.u] & ~bit(e.v)) | bit(w);
  rows[e.v] = (rows[e.v] & ~bit(e.u)) | bit(w);
  rows.push_back(bit(e.u) | bit(e.v));
  return Graph::from_rows(rows);
}

Graph induced_subgraph(const Graph& g, std::uint64_t keep) {
  keep &= g.vertex_mask();
  std::vector<Vertex> index(g.order(), 0);
  Vertex next = 0;
  for (std::uint64_t m = keep; m; m &= m - 1) index[std::countr_zero(m)] = next++;
  std::vector<std::uint64_t> rows;
  rows.reserve(next);
  for (std::uint64_t m = keep; m; m &= m - 1) {
    std::uint64_t row = 0;
    for (std::uint64_t r = g.rows()[std::countr_zero(m)] & keep; r; r &= r - 1) {
      row |= bit(index[std::countr_zero(r)]);
    }
    rows.push_back(row);
  }
  return Graph::from_rows(rows);
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  const std::size_t n = g.order();
  if (perm.size() != n) throw std::invalid_argument("relabel: permutation size mismatch");
  std::uint64_t seen = 0;
  for (Vertex p : perm) {
    if (p >= n || (seen & bit(p))) throw std::invalid_argument("relabel: not a permutation");
    seen |= bit(p);
  }
  std::vector<std::uint64_t> rows(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    std::uint64_t row = 0;
    for (std::uint64_t m = g.rows()[v]; m; m &= m - 1) row |= bit(perm[std::countr_zero(m)]);
    rows[perm[v]] = row;
  }
  return Graph::from_rows(rows);
}

namespace {

// Glues g2 onto g1, identifying g2 vertex ids2[i] with g1 vertex ids1[i].
Graph glue(const Graph& g1, std::span<const Vertex> ids1, const Graph& g2,
           std::span<const Vertex> ids2) {
  for (Vertex v : ids1) {
    if (v >= g1.order()) throw std::invalid_argument("union: vertex out of range in first graph");
  }
  for (Vertex v : ids2) {
    if (v >= g2.order()) throw std::invalid_argument("union: vertex out of range in second graph");
  }
  const std::size_t n = g1.order() + g2.order() - ids2.size();
  check_order(n);
  std::vector<Vertex> map2(g2.order(), 0);
  std::vector<bool> identified(g2.order(), false);
  for (std::size_t i = 0; i < ids2.size(); ++i) {
    map2[ids2[i]] = ids1[i];
    identified[ids2[i]] = true;
  }
  Vertex next = static_cast<Vertex>(g1.order());
  for (Vertex v = 0; v < g2.order(); ++v) {
    if (!identified[v]) map2[v] = next++;
  }
  std::vector<std::uint64_t> rows(n, 0);
  std::copy(g1.rows().begin(), g1.rows().end(), rows.begin());
  for (const Edge& e : g2.edges()) {
    const Vertex a = map2[e.u];
    const Vertex b = map2[e.v];
    rows[a] |= bit(b);
    rows[b] |= bit(a);
  }
  return Graph::from_rows(rows);
}

}  // namespace

Graph disjoint_union(const Graph& g1, const Graph& g2) { return glue(g1, {}, g2, {}); }

Graph one_vertex_union(const Graph& g1, Vertex v1, const Graph& g2, Vertex v2) {
  const Vertex a[] = {v1};
  const Vertex b[] = {v2};
  return glue(g1, a, g2, b);
}

Graph two_vertex_union(const Graph& g1, std::pair<Vertex, Vertex> p1, const Graph& g2,
                       std::pair<Vertex, Vertex> p2) {
  if (p1.first == p1.second || p2.first == p2.second) {
    throw std::invalid_argument("two_vertex_union: identified vertices must be distinct");
  }
  const Vertex a[] = {p1.first, p1.second};
  const Vertex b[] = {p2.first, p2.second};
  return glue(g1, a, g2, b);
}

std::size_t degree(const Graph& g, Vertex v) { return g.degree(v); }

std::size_t min_degree(const Graph& g) {
  if (g.order() == 0) throw std::invalid_argument("min_degree of the empty graph");
  std::size_t best = g.order();
  for (std::uint64_t row : g.rows()) best = std::min<std::size_t>(best, std::popcount(row));
  return best;
}

std::size_t max_degree(const Graph& g) {
  std::size_t best = 0;
  for (std::uint64_t row : g.rows()) best = std::max<std::size_t>(best, std::popcount(row));
  return best;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  std::uint64_t unseen = g.vertex_mask();
  while (unseen) {
    std::uint64_t comp = unseen & -unseen;
    std::uint64_t frontier = comp;
    while (frontier) {
      std::uint64_t next = 0;
      for (std::uint64_t m = frontier; m; m &= m - 1) next |= g.rows()[std::countr_zero(m)];
      frontier = next & ~comp;
      comp |= next;
    }
    unseen &= ~comp;
    auto& vs = out.emplace_back();
    for (std::uint64_t m = comp; m; m &= m - 1) vs.push_back(static_cast<Vertex>(std::countr_zero(m)));
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

std::size_t local_connectivity(const Graph& g, Vertex s, Vertex t) {
  const std::size_t n = g.order();
  if (s >= n || t >= n || s == t) throw std::invalid_argument("local_connectivity: bad vertices");
  if (g.has_edge(s, t)) throw std::invalid_argument("local_connectivity: vertices are adjacent");
  // Split every vertex v into v_in = 2v and v_out = 2v+1 joined by a unit arc;
  // each edge uv becomes arcs u_out->v_in and v_out->u_in.
  const std::size_t nodes = 2 * n;
  std::vector<std::vector<int>> cap(nodes, std::vector<int>(nodes, 0));
  for (std::size_t v = 0; v < n; ++v) cap[2 * v][2 * v + 1] = (v == s || v == t) ? static_cast<int>(n) : 1;
  for (const Edge& e : g.edges()) {
    cap[2 * e.u + 1][2 * e.v] = static_cast<int>(n);
    cap[2 * e.v + 1][2 * e.u] = static_cast<int>(n);
  }
  const std::size_t source = 2 * s + 1;
  const std::size_t sink = 2 * t;
  std::size_t flow = 0;
  std::vector<int> parent(nodes);
  for (;;) {
    std::fill(parent.begin(), parent.end(), -1);
    parent[source] = static_cast<int>(source);
    std::vector<std::size_t> queue{source};
    for (std::size_t head = 0; head < queue.size() && parent[sink] < 0; ++head) {
      const std::size_t x = queue[head];
      for (std::size_t y = 0; y < nodes; ++y) {
        if (parent[y] < 0 && cap[x][y] > 0) {
          parent[y] = static_cast<int>(x);
          queue.push_back(y);
        }
      }
    }
    if (parent[sink] < 0) break;
    for (std::size_t y = sink; y != source; y = static_cast<std::size_t>(parent[y])) {
      const auto x = static_cast<std::size_t>(parent[y]);
      --cap[x][y];
      ++cap[y][x];
    }
    ++flow;
  }
  return flow;
}

std::size_t connectivity(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) throw std::invalid_argument("connectivity of the empty graph");
  if (g.is_complete()) return n - 1;
  if (!is_connected(g)) return 0;
  std::size_t best = n - 2;
  for (Vertex s = 0; s < n; ++s) {
    for (Vertex t = s + 1; t < n; ++t) {
      if (!g.has_edge(s, t)) best = std::min(best, local_connectivity(g, s, t));
    }
  }
  return best;
}

}  // namespace minorsieve
