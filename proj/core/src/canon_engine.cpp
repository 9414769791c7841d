#include "canon_engine.hpp"

#include <algorithm>

namespace minorsieve::detail {

namespace {

constexpr std::uint64_t bit(int i) { return std::uint64_t{1} << i; }
constexpr std::size_t kMaxGenerators = 256;

int find_root(std::uint8_t* parent, int v) {
  while (parent[v] != v) {
    parent[v] = parent[parent[v]];
    v = parent[v];
  }
  return v;
}

void unite(std::uint8_t* parent, int a, int b) {
  a = find_root(parent, a);
  b = find_root(parent, b);
  if (a == b) return;
  // Keep the smaller vertex as the root so roots are orbit minima.
  if (a < b) {
    parent[b] = static_cast<std::uint8_t>(a);
  } else {
    parent[a] = static_cast<std::uint8_t>(b);
  }
}

}  // namespace

void CanonEngine::run(const std::uint64_t* adj, int n) {
  n_ = n;
  std::copy(adj, adj + n, adj_.begin());
  first_len_ = -1;
  best_len_ = -1;
  generators_.clear();
  if (n == 0) return;
  Partition p;
  p.cells = 1;
  p.cell[0] = n == 64 ? ~std::uint64_t{0} : bit(n) - 1;
  refine(p, p.cell[0]);
  search(p, 0, true);
}

void CanonEngine::refine(Partition& p, std::uint64_t splitter) const {
  std::array<std::uint64_t, 2 * kMax + 4> queue;
  int head = 0;
  int tail = 0;
  queue[tail++] = splitter;
  std::array<int, kMax> count{};
  while (head < tail && p.cells < n_) {
    const std::uint64_t w = queue[head++];
    for (int i = 0; i < p.cells; ++i) {
      const std::uint64_t c = p.cell[i];
      if (!(c & (c - 1))) continue;
      int lo = kMax + 1;
      int hi = -1;
      for (std::uint64_t m = c; m; m &= m - 1) {
        const int v = std::countr_zero(m);
        const int k = std::popcount(adj_[v] & w);
        count[v] = k;
        lo = std::min(lo, k);
        hi = std::max(hi, k);
      }
      if (lo == hi) continue;
      std::array<std::uint64_t, kMax + 1> piece;
      int pieces = 0;
      for (int k = lo; k <= hi; ++k) {
        std::uint64_t mask = 0;
        for (std::uint64_t m = c; m; m &= m - 1) {
          const int v = std::countr_zero(m);
          if (count[v] == k) mask |= bit(v);
        }
        if (mask) piece[pieces++] = mask;
      }
      for (int j = p.cells - 1; j > i; --j) p.cell[j + pieces - 1] = p.cell[j];
      for (int j = 0; j < pieces; ++j) {
        p.cell[i + j] = piece[j];
        queue[tail++] = piece[j];
      }
      p.cells += pieces - 1;
      i += pieces - 1;
    }
  }
}

int CanonEngine::search(const Partition& p, int depth, bool on_first) {
  if (p.cells == n_) return leaf(p, depth);
  int target = 0;
  while (!(p.cell[target] & (p.cell[target] - 1))) ++target;
  const std::uint64_t cell = p.cell[target];

  std::array<std::uint8_t, kMax> root{};
  std::size_t gens_seen = static_cast<std::size_t>(-1);
  for (std::uint64_t m = cell; m; m &= m - 1) {
    const int v = std::countr_zero(m);
    if (on_first && first_len_ >= 0) {
      if (generators_.size() != gens_seen) {
        orbits_fixing(depth, root.data());
        gens_seen = generators_.size();
      }
      if (root[v] != v) continue;
    }
    Partition child = p;
    for (int j = child.cells - 1; j > target; --j) child.cell[j + 1] = child.cell[j];
    child.cell[target] = bit(v);
    child.cell[target + 1] = cell & ~bit(v);
    ++child.cells;
    refine(child, bit(v));
    path_[depth] = static_cast<std::uint8_t>(v);
    const bool child_on_first = on_first && (first_len_ < 0 || first_path_[depth] == v);
    const int r = search(child, depth + 1, child_on_first);
    if (r < depth) return r;
  }
  return depth;
}

int CanonEngine::leaf(const Partition& p, int depth) {
  std::array<std::uint8_t, kMax> lab;
  std::array<std::uint8_t, kMax> pos;
  for (int i = 0; i < n_; ++i) {
    lab[i] = static_cast<std::uint8_t>(std::countr_zero(p.cell[i]));
    pos[lab[i]] = static_cast<std::uint8_t>(i);
  }
  std::array<std::uint64_t, kMax> code;
  for (int i = 0; i < n_; ++i) {
    std::uint64_t row = 0;
    for (std::uint64_t m = adj_[lab[i]]; m; m &= m - 1) row |= bit(pos[std::countr_zero(m)]);
    code[i] = row;
  }

  auto common_prefix = [&](const std::array<std::uint8_t, kMax>& other, int other_len) {
    int k = 0;
    const int limit = std::min(depth, other_len);
    while (k < limit && path_[k] == other[k]) ++k;
    return k;
  };

  if (first_len_ < 0) {
    first_len_ = best_len_ = depth;
    first_lab_ = best_lab_ = lab;
    first_code_ = best_code_ = code;
    first_path_ = best_path_ = path_;
    return depth;
  }
  if (std::equal(code.begin(), code.begin() + n_, first_code_.begin())) {
    add_generator(first_lab_.data(), lab.data());
    return common_prefix(first_path_, first_len_);
  }
  const auto cmp = std::lexicographical_compare_three_way(
      code.begin(), code.begin() + n_, best_code_.begin(), best_code_.begin() + n_);
  if (cmp > 0) {
    best_len_ = depth;
    best_lab_ = lab;
    best_code_ = code;
    best_path_ = path_;
    return depth;
  }
  if (cmp == 0) {
    add_generator(best_lab_.data(), lab.data());
    return common_prefix(best_path_, best_len_);
  }
  return depth;
}

void CanonEngine::add_generator(const std::uint8_t* from_lab, const std::uint8_t* to_lab) {
  if (generators_.size() >= kMaxGenerators) return;
  std::array<std::uint8_t, kMax> gen{};
  for (int i = 0; i < n_; ++i) gen[from_lab[i]] = to_lab[i];
  generators_.push_back(gen);
}

void CanonEngine::orbits_fixing(int depth, std::uint8_t* root) const {
  for (int v = 0; v < n_; ++v) root[v] = static_cast<std::uint8_t>(v);
  for (const auto& gen : generators_) {
    bool fixes = true;
    for (int k = 0; k < depth && fixes; ++k) fixes = gen[first_path_[k]] == first_path_[k];
    if (!fixes) continue;
    for (int v = 0; v < n_; ++v) unite(root, v, gen[v]);
  }
  for (int v = 0; v < n_; ++v) root[v] = static_cast<std::uint8_t>(find_root(root, v));
}

void CanonEngine::orbits(std::uint8_t* out) const { orbits_fixing(0, out); }

}  // namespace minorsieve::detail
