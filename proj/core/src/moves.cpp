#include "minorsieve/moves.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <exception>
#include <chrono>
#include <set>
#include <stdexcept>
#include <thread>

#include "minorsieve/canonical.hpp"
#include "minorsieve/planarity.hpp"

namespace minorsieve {

namespace {

bool is_triangle(const Graph& g, const Triangle& t) {
  const auto n = g.order();
  if (t.a >= n || t.b >= n || t.c >= n) return false;
  return g.has_edge(t.a, t.b) && g.has_edge(t.a, t.c) && g.has_edge(t.b, t.c);
}

}  // namespace

std::vector<Triangle> triangles(const Graph& g) {
  std::vector<Triangle> out;
  for (Edge e : g.edges()) {
    std::uint64_t common = g.neighbors(e.u) & g.neighbors(e.v);
    common &= ~((std::uint64_t{2} << e.v) - 1);  // third corner above e.v
    for (; common; common &= common - 1) {
      out.push_back({e.u, e.v, static_cast<Vertex>(std::countr_zero(common))});
    }
  }
  return out;
}

Graph triangle_to_star(const Graph& g, const Triangle& t) {
  if (!is_triangle(g, t)) throw std::invalid_argument("triangle_to_star: not a triangle");
  Graph h = delete_edge(delete_edge(delete_edge(g, {t.a, t.b}), {t.a, t.c}), {t.b, t.c});
  h = disjoint_union(h, Graph(1));
  const auto v = static_cast<Vertex>(g.order());
  return add_edge(add_edge(add_edge(h, v, t.a), v, t.b), v, t.c);
}

Graph star_to_triangle(const Graph& g, Vertex v) {
  if (v >= g.order() || g.degree(v) != 3) {
    throw std::invalid_argument("star_to_triangle: vertex must have degree 3");
  }
  std::vector<Vertex> nb;
  for (std::uint64_t m = g.neighbors(v); m; m &= m - 1) {
    nb.push_back(static_cast<Vertex>(std::countr_zero(m)));
  }
  Graph h = g;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (!h.has_edge(nb[i], nb[j])) h = add_edge(h, nb[i], nb[j]);
    }
  }
  return delete_vertex(h, v);
}

bool ne_preserved_after_ty(const Graph& g, const Triangle& t) {
  if (!is_triangle(g, t)) throw std::invalid_argument("ne_preserved_after_ty: not a triangle");
  if (!check(g, PropertyId::NE)) throw std::invalid_argument("ne_preserved_after_ty: graph is not NE");
  const Graph h = triangle_to_star(g, t);
  const auto v = static_cast<Vertex>(g.order());
  for (Vertex x : {t.a, t.b, t.c}) {
    if (is_planar(delete_edge(h, {v, x}))) return false;
  }
  return true;
}

SearchReport explore_family(const std::vector<Graph>& seeds, PropertyId p, std::size_t depth,
                            const ExploreOptions& options) {
  if (p != PropertyId::NE && p != PropertyId::NC) {
    throw std::invalid_argument("explore_family: property must be NE or NC");
  }
  if (depth == 0) throw std::invalid_argument("explore_family: depth must be at least 1");
  const auto t0 = std::chrono::steady_clock::now();

  std::set<CanonicalForm> members;
  std::vector<Graph> frontier;
  auto offer = [&](const Graph& g, std::vector<Graph>& next) {
    auto form = canonical(g);
    if (members.insert(form).second) next.push_back(form.graph());
  };
  for (const Graph& s : seeds) offer(s, frontier);
  for (std::size_t round = 0; round < depth && !frontier.empty(); ++round) {
    std::vector<Graph> next;
    for (const Graph& g : frontier) {
      if (options.triangle_to_star && g.order() < Graph::kMaxOrder) {
        for (const auto& t : triangles(g)) offer(triangle_to_star(g, t), next);
      }
      for (Vertex v = 0; options.star_to_triangle && v < g.order(); ++v) {
        if (g.degree(v) == 3) offer(star_to_triangle(g, v), next);
      }
    }
    frontier = std::move(next);
  }

  std::vector<CanonicalForm> all(members.begin(), members.end());
  std::vector<char> keep(all.size(), 0);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  auto work = [&] {
    for (std::size_t i; !failed && (i = next.fetch_add(1)) < all.size();) {
      try {
        const Graph g = all[i].graph();
        keep[i] = p == PropertyId::NE ? is_mmne(g, options.sieve) : is_mmnc(g, options.sieve);
      } catch (...) {
        if (!failed.exchange(true)) error = std::current_exception();
      }
    }
  };
  const std::size_t jobs = std::max<std::size_t>(1, std::min(options.jobs, all.size()));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < jobs; ++t) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);

  SearchReport report;
  report.property = p;
  report.filter = default_search_filter(p);
  report.scanned = all.size();
  if (!all.empty()) {
    auto [lo, hi] = std::minmax_element(all.begin(), all.end(), [](const auto& x, const auto& y) {
      return x.order() < y.order();
    });
    report.min_order = lo->order();
    report.max_order = hi->order();
  }
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (keep[i]) report.found.push_back(all[i].graph());
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

}  // namespace minorsieve
