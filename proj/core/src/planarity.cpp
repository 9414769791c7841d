#include "minorsieve/planarity.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>

namespace minorsieve {

namespace {

constexpr std::uint64_t bit(unsigned i) { return std::uint64_t{1} << i; }

// Left-right planarity test over fixed-size scratch arrays. Edges are
// oriented by a DFS; conflict pairs of return-edge intervals are kept on a
// stack of ids into a pair pool.
class LrTest {
 public:
  bool run(const Graph& g);

 private:
  static constexpr int kMaxV = 64;
  static constexpr int kMaxE = kMaxV * (kMaxV - 1) / 2;
  static constexpr int kNone = -1;

  struct Interval {
    int low = kNone;
    int high = kNone;
    bool empty() const { return low == kNone && high == kNone; }
  };
  struct ConflictPair {
    Interval left;
    Interval right;
  };

  void orient(int v);
  bool test(int v);
  bool add_constraints(int ei, int e);
  void remove_back_edges(int e);

  bool conflicting(const Interval& i, int b) const {
    return !i.empty() && lowpt_[i.high] > lowpt_[b];
  }
  int lowest(const ConflictPair& p) const {
    if (p.left.empty()) return lowpt_[p.right.low];
    if (p.right.empty()) return lowpt_[p.left.low];
    return std::min(lowpt_[p.left.low], lowpt_[p.right.low]);
  }
  int top() const { return stack_.empty() ? kNone : stack_.back(); }
  int new_pair(const ConflictPair& p) {
    pool_.push_back(p);
    return static_cast<int>(pool_.size()) - 1;
  }

  const std::uint64_t* adj_ = nullptr;
  int n_ = 0;
  int m_ = 0;
  std::array<std::uint64_t, kMaxV> oriented_{};
  std::array<int, kMaxV> height_{};
  std::array<int, kMaxV> parent_edge_{};
  std::array<int, kMaxE> src_{};
  std::array<int, kMaxE> dst_{};
  std::array<int, kMaxE> lowpt_{};
  std::array<int, kMaxE> lowpt2_{};
  std::array<int, kMaxE> nesting_{};
  std::array<int, kMaxE> lowpt_edge_{};
  std::array<int, kMaxE> ref_{};
  std::array<int, kMaxE> stack_bottom_{};
  std::array<std::vector<int>, kMaxV> out_;
  std::vector<int> stack_;
  std::vector<ConflictPair> pool_;
};

bool LrTest::run(const Graph& g) {
  n_ = static_cast<int>(g.order());
  if (n_ <= 4) return true;
  if (g.size() > 3 * g.order() - 6) return false;
  adj_ = g.rows().data();
  m_ = 0;
  stack_.clear();
  pool_.clear();
  for (int v = 0; v < n_; ++v) {
    oriented_[v] = 0;
    height_[v] = kNone;
    parent_edge_[v] = kNone;
    out_[v].clear();
  }
  std::array<int, kMaxV> roots;
  int root_count = 0;
  for (int v = 0; v < n_; ++v) {
    if (height_[v] != kNone) continue;
    height_[v] = 0;
    roots[root_count++] = v;
    orient(v);
  }
  for (int v = 0; v < n_; ++v) {
    std::sort(out_[v].begin(), out_[v].end(),
              [&](int a, int b) { return nesting_[a] < nesting_[b]; });
  }
  for (int i = 0; i < m_; ++i) ref_[i] = kNone;
  for (int r = 0; r < root_count; ++r) {
    if (!test(roots[r])) return false;
  }
  return true;
}

void LrTest::orient(int v) {
  const int e = parent_edge_[v];
  for (std::uint64_t m = adj_[v] & ~oriented_[v]; m; m &= m - 1) {
    const int w = std::countr_zero(m);
    if (oriented_[v] & bit(w)) continue;  // oriented during the recursion
    oriented_[v] |= bit(w);
    oriented_[w] |= bit(v);
    const int vw = m_++;
    src_[vw] = v;
    dst_[vw] = w;
    out_[v].push_back(vw);
    lowpt_[vw] = height_[v];
    lowpt2_[vw] = height_[v];
    if (height_[w] == kNone) {
      parent_edge_[w] = vw;
      height_[w] = height_[v] + 1;
      orient(w);
    } else {
      lowpt_[vw] = height_[w];
    }
    nesting_[vw] = 2 * lowpt_[vw] + (lowpt2_[vw] < height_[v] ? 1 : 0);
    if (e != kNone) {
      if (lowpt_[vw] < lowpt_[e]) {
        lowpt2_[e] = std::min(lowpt_[e], lowpt2_[vw]);
        lowpt_[e] = lowpt_[vw];
      } else if (lowpt_[vw] > lowpt_[e]) {
        lowpt2_[e] = std::min(lowpt2_[e], lowpt_[vw]);
      } else {
        lowpt2_[e] = std::min(lowpt2_[e], lowpt2_[vw]);
      }
    }
  }
}

bool LrTest::test(int v) {
  const int e = parent_edge_[v];
  const auto& out = out_[v];
  for (std::size_t i = 0; i < out.size(); ++i) {
    const int ei = out[i];
    const int w = dst_[ei];
    stack_bottom_[ei] = top();
    if (ei == parent_edge_[w]) {
      if (!test(w)) return false;
    } else {
      lowpt_edge_[ei] = ei;
      ConflictPair p;
      p.right = {ei, ei};
      stack_.push_back(new_pair(p));
    }
    if (lowpt_[ei] < height_[v]) {
      if (i == 0) {
        lowpt_edge_[e] = lowpt_edge_[ei];
      } else if (!add_constraints(ei, e)) {
        return false;
      }
    }
  }
  if (e != kNone) remove_back_edges(e);
  return true;
}

bool LrTest::add_constraints(int ei, int e) {
  ConflictPair p;
  do {
    ConflictPair q = pool_[stack_.back()];
    stack_.pop_back();
    if (!q.left.empty()) std::swap(q.left, q.right);
    if (!q.left.empty()) return false;
    if (lowpt_[q.right.low] > lowpt_[e]) {
      if (p.right.empty()) {
        p.right = q.right;
      } else {
        ref_[p.right.low] = q.right.high;
      }
      p.right.low = q.right.low;
    } else {
      ref_[q.right.low] = lowpt_edge_[e];
    }
  } while (top() != stack_bottom_[ei]);

  while (!stack_.empty() && (conflicting(pool_[stack_.back()].left, ei) ||
                             conflicting(pool_[stack_.back()].right, ei))) {
    ConflictPair q = pool_[stack_.back()];
    stack_.pop_back();
    if (conflicting(q.right, ei)) std::swap(q.left, q.right);
    if (conflicting(q.right, ei)) return false;
    ref_[p.right.low] = q.right.high;
    if (q.right.low != kNone) p.right.low = q.right.low;
    if (p.left.empty()) {
      p.left = q.left;
    } else {
      ref_[p.left.low] = q.left.high;
    }
    p.left.low = q.left.low;
  }
  if (!p.left.empty() || !p.right.empty()) stack_.push_back(new_pair(p));
  return true;
}

void LrTest::remove_back_edges(int e) {
  const int u = src_[e];
  while (!stack_.empty() && lowest(pool_[stack_.back()]) == height_[u]) stack_.pop_back();
  if (!stack_.empty()) {
    ConflictPair& p = pool_[stack_.back()];
    while (p.left.high != kNone && dst_[p.left.high] == u) p.left.high = ref_[p.left.high];
    if (p.left.high == kNone && p.left.low != kNone) {
      ref_[p.left.low] = p.right.low;
      p.left.low = kNone;
    }
    while (p.right.high != kNone && dst_[p.right.high] == u) p.right.high = ref_[p.right.high];
    if (p.right.high == kNone && p.right.low != kNone) {
      ref_[p.right.low] = p.left.low;
      p.right.low = kNone;
    }
  }
  if (lowpt_[e] < height_[u] && !stack_.empty()) {
    const ConflictPair& p = pool_[stack_.back()];
    const int hl = p.left.high;
    const int hr = p.right.high;
    ref_[e] = (hl != kNone && (hr == kNone || lowpt_[hl] > lowpt_[hr])) ? hl : hr;
  }
}

LrTest& lr_test() {
  thread_local LrTest t;
  return t;
}

// Follows a chain of degree-2 vertices from branch vertex b through its
// neighbour w until the next branch vertex.
std::vector<Vertex> trace(const std::vector<std::uint64_t>& rows, std::uint64_t branch, Vertex b,
                          Vertex w) {
  std::vector<Vertex> path{b};
  Vertex prev = b;
  Vertex cur = w;
  while (!(branch & bit(cur))) {
    path.push_back(cur);
    const std::uint64_t next = rows[cur] & ~bit(prev);
    prev = cur;
    cur = static_cast<Vertex>(std::countr_zero(next));
  }
  path.push_back(cur);
  return path;
}

bool blocks_connected(const std::vector<std::uint64_t>& rows, std::uint64_t block) {
  std::uint64_t seen = block & (~block + 1);
  std::uint64_t frontier = seen;
  while (frontier) {
    std::uint64_t next = 0;
    for (std::uint64_t m = frontier; m; m &= m - 1) next |= rows[std::countr_zero(m)];
    next &= block & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == block;
}

bool quotient_has(const std::vector<std::uint64_t>& q, Kuratowski h) {
  const int k = static_cast<int>(q.size());
  if (h == Kuratowski::K5) {
    // 5-clique search
    auto extend = [&](auto&& self, int depth, int from, std::uint64_t cand) -> bool {
      if (depth == 5) return true;
      for (int v = from; v < k; ++v) {
        if (!(cand & bit(v))) continue;
        if (self(self, depth + 1, v + 1, cand & q[v])) return true;
      }
      return false;
    };
    return extend(extend, 0, 0, k == 64 ? ~std::uint64_t{0} : bit(k) - 1);
  }
  // K3,3 subgraph: choose side A (3 vertices) and side B (3 vertices in the
  // common neighbourhood of A).
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      for (int c = b + 1; c < k; ++c) {
        const std::uint64_t common = q[a] & q[b] & q[c];
        if (std::popcount(common) >= 3) return true;
      }
    }
  }
  return false;
}

}  // namespace

bool is_planar(const Graph& g) { return lr_test().run(g); }

std::optional<KSubgraph> find_k_subgraph(const Graph& g) {
  if (is_planar(g)) return std::nullopt;
  Graph h = g;
  for (const Edge& e : g.edges()) {
    Graph smaller = delete_edge(h, e);
    if (!is_planar(smaller)) h = std::move(smaller);
  }
  // h is now an edge-minimal nonplanar subgraph: a Kuratowski subdivision
  // plus isolated vertices.
  const std::vector<std::uint64_t> rows(h.rows().begin(), h.rows().end());
  std::vector<Vertex> branch;
  std::uint64_t branch_mask = 0;
  for (Vertex v = 0; v < h.order(); ++v) {
    if (h.degree(v) >= 3) {
      branch.push_back(v);
      branch_mask |= bit(v);
    }
  }
  KSubgraph k;
  k.host = g;
  k.kind = branch.size() == 5 ? Kuratowski::K5 : Kuratowski::K33;
  std::vector<std::vector<Vertex>> paths;
  for (Vertex b : branch) {
    for (std::uint64_t m = rows[b]; m; m &= m - 1) {
      auto p = trace(rows, branch_mask, b, static_cast<Vertex>(std::countr_zero(m)));
      if (p.front() < p.back()) paths.push_back(std::move(p));
    }
  }
  if (k.kind == Kuratowski::K33) {
    // Side of each branch vertex by 2-colouring the branch graph.
    std::vector<int> side(h.order(), -1);
    side[branch[0]] = 0;
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& p : paths) {
        const int a = side[p.front()];
        const int b = side[p.back()];
        if (a >= 0 && b < 0) side[p.back()] = 1 - a, changed = true;
        if (b >= 0 && a < 0) side[p.front()] = 1 - b, changed = true;
      }
    }
    std::stable_partition(branch.begin(), branch.end(), [&](Vertex v) { return side[v] == 0; });
  }
  std::sort(paths.begin(), paths.end());
  k.branch_vertices = std::move(branch);
  k.paths = std::move(paths);
  return k;
}

bool is_valid_k_subgraph(const KSubgraph& k) {
  const Graph& g = k.host;
  const std::size_t nb = k.kind == Kuratowski::K5 ? 5 : 6;
  const std::size_t ne = k.kind == Kuratowski::K5 ? 10 : 9;
  if (k.branch_vertices.size() != nb || k.paths.size() != ne) return false;
  std::uint64_t branch = 0;
  for (Vertex v : k.branch_vertices) {
    if (v >= g.order() || (branch & bit(v))) return false;
    branch |= bit(v);
  }
  auto index_of = [&](Vertex v) {
    return static_cast<std::size_t>(
        std::find(k.branch_vertices.begin(), k.branch_vertices.end(), v) -
        k.branch_vertices.begin());
  };
  std::uint64_t used_interior = 0;
  std::vector<std::pair<std::size_t, std::size_t>> realised;
  for (const auto& p : k.paths) {
    if (p.size() < 2) return false;
    if (!(branch & bit(p.front())) || !(branch & bit(p.back()))) return false;
    for (std::size_t i = 1; i + 1 < p.size(); ++i) {
      if (p[i] >= g.order()) return false;
      if ((branch | used_interior) & bit(p[i])) return false;
      used_interior |= bit(p[i]);
    }
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      if (!g.has_edge(p[i], p[i + 1])) return false;
    }
    auto a = index_of(p.front());
    auto b = index_of(p.back());
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    realised.emplace_back(a, b);
  }
  std::sort(realised.begin(), realised.end());
  if (std::adjacent_find(realised.begin(), realised.end()) != realised.end()) return false;
  if (k.kind == Kuratowski::K33) {
    for (const auto& [a, b] : realised) {
      if ((a < 3) == (b < 3)) return false;
    }
  }
  return true;
}

bool has_minor(const Graph& g, Kuratowski h) {
  const std::size_t n = g.order();
  const std::size_t need = h == Kuratowski::K5 ? 5 : 6;
  const std::size_t need_edges = h == Kuratowski::K5 ? 10 : 9;
  if (n < need || g.size() < need_edges) return false;
  const std::vector<std::uint64_t> rows(g.rows().begin(), g.rows().end());
  // Restricted growth strings: block[v] <= max(block[0..v)) + 1. Every
  // block must induce a connected subgraph; the quotient must contain h.
  std::vector<std::uint64_t> blocks;
  auto rec = [&](auto&& self, std::size_t v) -> bool {
    if (v == n) {
      if (blocks.size() < need) return false;
      for (std::uint64_t b : blocks) {
        if (!blocks_connected(rows, b)) return false;
      }
      std::vector<std::uint64_t> q(blocks.size(), 0);
      for (std::size_t i = 0; i < blocks.size(); ++i) {
        std::uint64_t nb = 0;
        for (std::uint64_t m = blocks[i]; m; m &= m - 1) nb |= rows[std::countr_zero(m)];
        for (std::size_t j = 0; j < blocks.size(); ++j) {
          if (j != i && (nb & blocks[j])) q[i] |= bit(static_cast<unsigned>(j));
        }
      }
      return quotient_has(q, h);
    }
    // Too few vertices left to reach the required block count.
    if (blocks.size() + (n - v) < need) return false;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      blocks[b] |= bit(static_cast<unsigned>(v));
      const bool found = self(self, v + 1);
      blocks[b] &= ~bit(static_cast<unsigned>(v));
      if (found) return true;
    }
    blocks.push_back(bit(static_cast<unsigned>(v)));
    const bool found = self(self, v + 1);
    blocks.pop_back();
    return found;
  };
  return rec(rec, 0);
}

}  // namespace minorsieve
