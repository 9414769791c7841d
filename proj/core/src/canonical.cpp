#include "minorsieve/canonical.hpp"

#include <bit>

#include "canon_engine.hpp"

namespace minorsieve {

namespace {

detail::CanonEngine& engine() {
  thread_local detail::CanonEngine e;
  return e;
}

}  // namespace

CanonicalForm make_canonical_form(std::size_t order, const std::uint64_t* rows) {
  CanonicalForm f;
  const std::size_t bits = order * (order > 0 ? order - 1 : 0) / 2;
  f.words_.assign(2 + (bits + 63) / 64, 0);
  f.words_[0] = order;
  std::size_t size = 0;
  std::size_t k = 0;
  // Column-major upper triangle, most significant bit first, so that word
  // comparison is bitstream comparison.
  for (std::size_t j = 1; j < order; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      if ((rows[i] >> j) & 1U) {
        f.words_[2 + k / 64] |= std::uint64_t{1} << (63 - k % 64);
        ++size;
      }
    }
  }
  f.words_[1] = size;
  return f;
}

Graph CanonicalForm::graph() const {
  const std::size_t n = order();
  std::vector<std::uint64_t> rows(n, 0);
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      if ((words_[2 + k / 64] >> (63 - k % 64)) & 1U) {
        rows[i] |= std::uint64_t{1} << j;
        rows[j] |= std::uint64_t{1} << i;
      }
    }
  }
  return Graph::from_rows(rows);
}

std::string CanonicalForm::bytes() const {
  std::string out;
  out.reserve(words_.size() * 8);
  for (std::uint64_t w : words_) {
    for (int s = 56; s >= 0; s -= 8) out.push_back(static_cast<char>((w >> s) & 0xFF));
  }
  return out;
}

std::size_t CanonicalForm::hash() const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::uint64_t w : words_) {
    h ^= w;
    h *= 0x100000001b3ULL;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

CanonicalLabeling canonical_labeling(const Graph& g) {
  const int n = static_cast<int>(g.order());
  auto& e = engine();
  e.run(g.rows().data(), n);
  CanonicalLabeling out;
  out.position.assign(g.order(), 0);
  for (int i = 0; i < n; ++i) out.position[e.labels()[i]] = static_cast<Vertex>(i);
  out.form = make_canonical_form(g.order(), e.rows());
  return out;
}

CanonicalForm canonical(const Graph& g) {
  auto& e = engine();
  e.run(g.rows().data(), static_cast<int>(g.order()));
  return make_canonical_form(g.order(), e.rows());
}

Graph canonical_graph(const Graph& g) { return relabel(g, canonical_labeling(g).position); }

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical(a) == canonical(b);
}

std::vector<Vertex> automorphism_orbits(const Graph& g) {
  auto& e = engine();
  e.run(g.rows().data(), static_cast<int>(g.order()));
  std::vector<std::uint8_t> roots(g.order());
  e.orbits(roots.data());
  return {roots.begin(), roots.end()};
}

}  // namespace minorsieve
