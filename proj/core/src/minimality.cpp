#include "minorsieve/minimality.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <unordered_set>

#include "minorsieve/canonical.hpp"
#include "minorsieve/planarity.hpp"

namespace minorsieve {

namespace {

template <class F>
void for_each_one_step_minor(const Graph& g, F&& f) {
  const auto edges = g.edges();
  for (const Edge& e : edges) f(delete_edge(g, e));
  for (const Edge& e : edges) f(contract_edge(g, e));
  for (Vertex v = 0; v < g.order(); ++v) f(delete_vertex(g, v));
}

// Shared body of both sieves. `seed_op` builds the extra seeds from g,
// `step_op` is the operation iterated to a fixed point.
template <class SeedOp, class StepOp>
bool sieve(const Graph& g, PropertyId p, SeedOp seed_op, StepOp step_op,
           const SieveOptions& options) {
  const auto edges = g.edges();
  // Step 1: g itself must have p.
  if (!check(g, p)) return false;
  // Step 2: no one-step minor may have p.
  for (const Graph& m : one_step_minors(g)) {
    if (check(m, p)) return false;
  }
  // Step 3: iterate the second operation from g and the seeds, dropping
  // planar graphs (every minor of a planar graph is planar) and repeats.
  std::unordered_set<CanonicalForm> visited;
  std::vector<Graph> frontier;
  auto admit = [&](Graph h) {
    if (!is_planar(h) && visited.insert(canonical(h)).second) frontier.push_back(std::move(h));
  };
  visited.insert(canonical(g));
  frontier.push_back(g);
  for (const Edge& e : edges) admit(seed_op(g, e));
  while (!frontier.empty()) {
    std::vector<Graph> next;
    for (const Graph& h : frontier) {
      for (const Edge& e : h.edges()) {
        Graph m = step_op(h, e);
        if (is_planar(m)) continue;
        if (!visited.insert(canonical(m)).second) continue;
        if (visited.size() > options.max_visited) {
          throw ResourceLimitError("sieve exceeded " + std::to_string(options.max_visited) +
                                   " graphs");
        }
        if (check(m, p)) return false;
        next.push_back(std::move(m));
      }
    }
    frontier = std::move(next);
  }
  return true;
}

Graph op_delete(const Graph& g, const Edge& e) { return delete_edge(g, e); }
Graph op_contract(const Graph& g, const Edge& e) { return contract_edge(g, e); }

}  // namespace

std::vector<Graph> one_step_minors(const Graph& g) {
  std::map<CanonicalForm, Graph> out;
  for_each_one_step_minor(g, [&](Graph m) {
    auto f = canonical(m);
    if (!out.contains(f)) {
      Graph c = f.graph();
      out.emplace(std::move(f), std::move(c));
    }
  });
  std::vector<Graph> result;
  result.reserve(out.size());
  for (auto& [f, m] : out) result.push_back(std::move(m));
  return result;
}

bool is_minor_minimal_upclosed(const Graph& g, PropertyId p) {
  if (p != PropertyId::NA && p != PropertyId::IA && p != PropertyId::IE && p != PropertyId::IC) {
    throw std::invalid_argument("one-step minimality applies to NA, IA, IE, IC only");
  }
  if (!check(g, p)) return false;
  for (const Graph& m : one_step_minors(g)) {
    if (check(m, p)) return false;
  }
  return true;
}

bool is_mmne(const Graph& g, const SieveOptions& options) {
  // Fast rejection: an edge whose deletion leaves a planar graph.
  if (find_apex_edge(g)) return false;
  return sieve(g, PropertyId::NE, op_delete, op_contract, options);
}

bool is_mmnc(const Graph& g, const SieveOptions& options) {
  if (find_contraction_apex(g)) return false;
  return sieve(g, PropertyId::NC, op_contract, op_delete, options);
}

bool is_minor_minimal_exhaustive(const Graph& g, PropertyId p, std::size_t max_order) {
  if (g.order() > max_order) {
    throw ResourceLimitError("exhaustive minor closure refused for order " +
                             std::to_string(g.order()) + " > " + std::to_string(max_order));
  }
  if (!check(g, p)) return false;
  const bool prune = implies_nonplanar(p);
  std::unordered_set<CanonicalForm> visited{canonical(g)};
  std::vector<Graph> frontier{g};
  while (!frontier.empty()) {
    std::vector<Graph> next;
    for (const Graph& h : frontier) {
      bool found = false;
      for_each_one_step_minor(h, [&](Graph m) {
        if (found) return;
        if (prune && is_planar(m)) return;
        if (!visited.insert(canonical(m)).second) return;
        if (check(m, p)) {
          found = true;
          return;
        }
        next.push_back(std::move(m));
      });
      if (found) return false;
    }
    frontier = std::move(next);
  }
  return true;
}

bool is_minor_minimal(const Graph& g, PropertyId p, const SieveOptions& options) {
  switch (p) {
    case PropertyId::NE: return is_mmne(g, options);
    case PropertyId::NC: return is_mmnc(g, options);
    case PropertyId::AN:
    case PropertyId::CAN: return is_minor_minimal_exhaustive(g, p);
    default: return is_minor_minimal_upclosed(g, p);
  }
}

}  // namespace minorsieve
