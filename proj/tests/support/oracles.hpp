#pragma once

// Slow, independent reference implementations used only by the tests.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "minorsieve/graph.hpp"

namespace oracle {

using minorsieve::Edge;
using minorsieve::Graph;
using minorsieve::Vertex;

/// Isomorphism by trying every permutation (degree sequence checked first).
inline bool brute_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  const std::size_t n = a.order();
  std::vector<std::size_t> da(n), db(n);
  for (Vertex v = 0; v < n; ++v) {
    da[v] = a.degree(v);
    db[v] = b.degree(v);
  }
  auto sa = da, sb = db;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (Vertex v = 0; v < n && ok; ++v) {
      if (da[v] != db[perm[v]]) ok = false;
    }
    for (Vertex v = 0; v < n && ok; ++v) {
      std::uint64_t mapped = 0;
      for (std::uint64_t m = a.rows()[v]; m; m &= m - 1) {
        mapped |= std::uint64_t{1} << perm[std::countr_zero(m)];
      }
      if (mapped != b.rows()[perm[v]]) ok = false;
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// Graph on n vertices whose edge set is given by the bits of `code`
/// (pair index in lexicographic (u,v) order).
inline Graph labeled_graph(std::size_t n, std::uint64_t code) {
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v, ++k) {
      if ((code >> k) & 1U) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

/// Isomorphism-class representatives of all labelled graphs of order n,
/// by pairwise brute-force comparison. Only practical for n <= 6.
inline std::vector<Graph> brute_iso_classes(std::size_t n) {
  const std::size_t pairs = n * (n > 0 ? n - 1 : 0) / 2;
  std::vector<Graph> reps;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code) {
    Graph g = labeled_graph(n, code);
    bool seen = false;
    for (const Graph& r : reps) {
      if (brute_isomorphic(r, g)) {
        seen = true;
        break;
      }
    }
    if (!seen) reps.push_back(std::move(g));
  }
  return reps;
}

/// Orbit representative (least vertex) of each vertex, by enumerating all
/// permutations and keeping the automorphisms.
inline std::vector<Vertex> brute_orbits(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<Vertex> rep(n);
  std::iota(rep.begin(), rep.end(), 0);
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (Vertex v = 0; v < n && ok; ++v) {
      std::uint64_t mapped = 0;
      for (std::uint64_t m = g.rows()[v]; m; m &= m - 1) {
        mapped |= std::uint64_t{1} << perm[std::countr_zero(m)];
      }
      if (mapped != g.rows()[perm[v]]) ok = false;
    }
    if (!ok) continue;
    for (Vertex v = 0; v < n; ++v) rep[perm[v]] = std::min(rep[perm[v]], v);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return rep;
}

inline Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

inline std::vector<Vertex> random_permutation(std::mt19937_64& rng, std::size_t n) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace oracle

namespace oracle {

/// One labelled representative per isomorphism class of order n, found by
/// scanning all labelled graphs; `key` maps a graph to an isomorphism
/// invariant that is also complete and ordered (e.g. a canonical form).
template <class Key>
std::vector<Graph> all_graphs(std::size_t n, Key key) {
  const std::size_t pairs = n * (n > 0 ? n - 1 : 0) / 2;
  std::vector<Graph> out;
  std::set<decltype(key(Graph(0)))> seen;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code) {
    Graph g = labeled_graph(n, code);
    if (seen.insert(key(g)).second) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace oracle
