#include "minorsieve/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <thread>

#include "appendix_data.hpp"
#include "minorsieve/canonical.hpp"
#include "minorsieve/io.hpp"
#include "minorsieve/minimality.hpp"
#include "minorsieve/planarity.hpp"

namespace minorsieve {

namespace {

constexpr std::string_view kSqcup = "⊔";
constexpr std::string_view kCupDot = "∪̇";

Graph k33() { return complete_bipartite(3, 3); }
Graph k5() { return complete_graph(5); }

const std::vector<std::string>& base_ids() {
  static const std::vector<std::string> ids = {
      "K1",    "K2",     "K4",     "K5",    "K6",     "K33",     "K43",
      "K5-e",  "K33-e",  "K6-e",   "K33+e", "K33+2e", "barK5",   "barK33", "Petersen"};
  return ids;
}

Graph base_graph(std::string_view id) {
  if (id == "K1") return complete_graph(1);
  if (id == "K2") return complete_graph(2);
  if (id == "K4") return complete_graph(4);
  if (id == "K5") return k5();
  if (id == "K6") return complete_graph(6);
  if (id == "K33") return k33();
  if (id == "K43") return complete_bipartite(4, 3);
  if (id == "K5-e") return delete_edge(k5(), {0, 1});
  if (id == "K33-e") return delete_edge(k33(), {0, 3});
  if (id == "K6-e") return delete_edge(complete_graph(6), {0, 1});
  if (id == "K33+e") return add_edge(k33(), 0, 1);
  // One new edge inside each part.
  if (id == "K33+2e") return add_edge(add_edge(k33(), 0, 1), 3, 4);
  if (id == "barK5") return subdivide_edge(k5(), {0, 1});
  if (id == "barK33") return subdivide_edge(k33(), {0, 3});
  if (id == "Petersen") return petersen_graph();
  throw std::invalid_argument("unknown graph id: " + std::string(id));
}

std::string ascii_id(std::string_view id) {
  std::string s(id);
  auto replace = [&s](std::string_view from, std::string_view to) {
    for (std::size_t pos = 0; (pos = s.find(from, pos)) != std::string::npos;) {
      s.replace(pos, from.size(), to);
      pos += to.size();
    }
  };
  replace(kCupDot, ".");
  replace(kSqcup, "|");
  replace("−", "-");
  replace("K3,3", "K33");
  replace("K_{3,3}", "K33");
  replace("K4,3", "K43");
  return s;
}

Graph build_ascii(const std::string& id) {
  if (auto pos = id.find('|'); pos != std::string::npos) {
    return disjoint_union(build_ascii(id.substr(0, pos)), build_ascii(id.substr(pos + 1)));
  }
  if (auto pos = id.find('.'); pos != std::string::npos) {
    // Every factor used here is vertex-transitive, so the shared vertex is immaterial.
    return one_vertex_union(build_ascii(id.substr(0, pos)), 0, build_ascii(id.substr(pos + 1)),
                            0);
  }
  return base_graph(id);
}

// --- structural recipes ------------------------------------------------------

// A block attached to the rest of the graph at an ordered vertex pair.
struct Placement {
  Graph block;
  Vertex u, v;
};

std::vector<Placement> placements(const Graph& block, bool adjacent) {
  std::vector<Placement> out;
  for (Vertex u = 0; u < block.order(); ++u) {
    for (Vertex v = 0; v < block.order(); ++v) {
      if (u != v && block.has_edge(u, v) == adjacent) out.push_back({block, u, v});
    }
  }
  return out;
}

// Blocks a nonadjacent cut pair can carry on the side without the K-subgraph.
std::vector<Placement> nonadjacent_blocks() {
  std::vector<Placement> out;
  for (const auto& b : {base_graph("K5-e"), base_graph("K33-e"), k33()}) {
    auto p = placements(b, false);
    out.insert(out.end(), p.begin(), p.end());
  }
  return out;
}

Graph attach(const Graph& host, Vertex a, Vertex b, const Placement& p) {
  return two_vertex_union(host, {a, b}, p.block, {p.u, p.v});
}

Graph with_edges(Graph g, std::initializer_list<Edge> edges) {
  for (Edge e : edges) g = add_edge(g, e.u, e.v);
  return g;
}

class Collector {
 public:
  explicit Collector(std::function<bool(const Graph&)> keep) : keep_(std::move(keep)) {}

  void offer(const Graph& g) {
    auto form = canonical(g);
    if (!seen_.insert(form).second) return;
    if (keep_(g)) kept_.emplace(std::move(form));
  }

  std::vector<Graph> graphs() const {
    std::vector<Graph> out;
    for (const auto& f : kept_) out.push_back(f.graph());
    return out;
  }

 private:
  std::function<bool(const Graph&)> keep_;
  std::set<CanonicalForm> seen_;
  std::set<CanonicalForm> kept_;
};

bool is_mmna(const Graph& g) { return is_minor_minimal_upclosed(g, PropertyId::NA); }

std::vector<Graph> family_ab_edge() {
  // Triangle positions a=0, b=1, c=2. Each side of the triangle carries a K5
  // or K33 block; a pair that is nonadjacent in its block leaves that
  // triangle edge out.
  std::vector<Placement> slots;
  for (const auto& b : {k5(), k33()}) {
    for (bool adj : {true, false}) {
      for (auto& p : placements(b, adj)) {
        if (p.u < p.v) slots.push_back(p);
      }
    }
  }
  Collector c([](const Graph& g) {
    return (g.has_edge(0, 1) || g.has_edge(0, 2) || g.has_edge(1, 2)) && is_mmna(g);
  });
  const Graph base(3);
  for (const auto& s1 : slots) {
    Graph g1 = attach(base, 0, 1, s1);
    for (const auto& s2 : slots) {
      Graph g2 = attach(g1, 0, 2, s2);
      for (const auto& s3 : slots) c.offer(attach(g2, 1, 2, s3));
    }
  }
  return c.graphs();
}

// Two blocks on the cut pairs (0,1) and (x,y) of `core`.
std::vector<Graph> two_block_family(const Graph& core, Vertex x, Vertex y,
                                    const std::function<bool(const Graph&)>& keep) {
  const auto blocks = nonadjacent_blocks();
  Collector c(keep);
  for (const auto& p1 : blocks) {
    Graph g1 = attach(core, 0, 1, p1);
    for (const auto& p2 : blocks) c.offer(attach(g1, x, y, p2));
  }
  return c.graphs();
}

std::vector<Graph> family_bowtie() {
  // a=0, b=1, c=2, d=3, e=4.
  Graph core = with_edges(Graph(5), {{0, 2}, {0, 3}, {2, 3}, {1, 2}, {1, 4}, {2, 4}});
  return two_block_family(core, 3, 4, is_mmna);
}

std::vector<Graph> family_222() {
  // a=0, b=1 both joined to c=2 and d=3.
  Graph core = with_edges(Graph(4), {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
  return two_block_family(core, 2, 3, is_mmna);
}

// a=0 and b=1 attached by two edges each to a Kuratowski graph; `common`
// is the number of shared neighbours (0 or 1).
std::vector<Graph> family_22c(int common) {
  const auto blocks = nonadjacent_blocks();
  Collector c(is_mmna);
  for (const auto& k : {k5(), k33()}) {
    const Graph host = disjoint_union(Graph(2), k);
    const Vertex n = static_cast<Vertex>(host.order());
    for (Vertex v1 = 2; v1 < n; ++v1) {
      for (Vertex v2 = 2; v2 < n; ++v2) {
        for (Vertex v3 = 2; v3 < n; ++v3) {
          for (Vertex v4 = 2; v4 < n; ++v4) {
            if (v1 >= v2 || v3 >= v4) continue;
            std::set<Vertex> all{v1, v2, v3, v4};
            if (all.size() != static_cast<std::size_t>(4 - common)) continue;
            Graph h = with_edges(host, {{0, v1}, {0, v2}, {1, v3}, {1, v4}});
            for (const auto& p : blocks) c.offer(attach(h, 0, 1, p));
          }
        }
      }
    }
  }
  return c.graphs();
}

std::vector<Graph> checked_family(MmnaFamily f, std::vector<Graph> graphs) {
  if (graphs.size() != expected_family_size(f)) {
    throw CatalogConsistencyError("family " + std::string(to_string(f)) + " produced " +
                                  std::to_string(graphs.size()) + " MMNA graphs, expected " +
                                  std::to_string(expected_family_size(f)));
  }
  return graphs;
}

// --- catalog assembly --------------------------------------------------------

CatalogEntry entry(std::string id, const Graph& g, PropertyId p, std::string provenance) {
  return {std::move(id), canonical_graph(g),
          {Claim{Claim::Kind::MinorMinimal, p, true}}, std::move(provenance)};
}

void add_named(std::vector<CatalogEntry>& out, PropertyId p,
               std::initializer_list<std::string_view> ids, std::string_view provenance) {
  for (auto id : ids) out.push_back(entry(std::string(id), build_named(id), p, std::string(provenance)));
}

std::string numbered(std::string_view prefix, std::size_t i) {
  std::string n = std::to_string(i + 1);
  if (n.size() < 2) n.insert(0, "0");
  return std::string(prefix) + n;
}

void add_disconnected_and_cut_vertex(std::vector<CatalogEntry>& out, PropertyId p,
                                     bool cut_vertex) {
  add_named(out, p, {"K5⊔K5", "K5⊔K33", "K33⊔K33"}, "disconnected: two disjoint Kuratowski graphs");
  if (cut_vertex) {
    add_named(out, p, {"K5∪̇K5", "K5∪̇K33", "K33∪̇K33"},
              "connectivity one: two Kuratowski graphs sharing a vertex");
  }
}

void add_list(std::vector<CatalogEntry>& out, PropertyId p, std::string_view prefix,
              const std::vector<Graph>& graphs, std::string_view provenance) {
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    out.push_back(entry(numbered(prefix, i), graphs[i], p, std::string(provenance)));
  }
}

std::vector<CatalogEntry> build_catalog(PropertyId p) {
  std::vector<CatalogEntry> out;
  switch (p) {
    case PropertyId::AN:
      add_named(out, p, {"K5-e", "K33-e"}, "classification of minor-minimal AN graphs");
      break;
    case PropertyId::CAN:
      add_named(out, p, {"K5-e"}, "classification of minor-minimal CAN graphs");
      break;
    case PropertyId::IA:
      add_named(out, p, {"K1⊔K5", "K1⊔K33"}, "MMIA classification");
      break;
    case PropertyId::IE:
      add_named(out, p, {"K33+e", "K2⊔K5", "K2⊔K33", "K2∪̇K5", "K2∪̇K33"},
                "MMIE classification");
      break;
    case PropertyId::IC:
      add_named(out, p,
                {"K33+2e", "barK5", "barK33", "K2⊔K5", "K2⊔K33", "K2∪̇K5", "K2∪̇K33"},
                "MMIC classification");
      break;
    case PropertyId::NA:
      add_disconnected_and_cut_vertex(out, p, false);
      for (auto f : kAllMmnaFamilies) {
        add_list(out, p, std::string(to_string(f)) + "-", build_mmna_family(f),
                 "connectivity two MMNA family " + std::string(to_string(f)));
      }
      break;
    case PropertyId::NE:
    case PropertyId::NC: {
      add_disconnected_and_cut_vertex(out, p, true);
      add_list(out, p, "two-cut-", build_two_cut_mmne(),
               "connectivity two: K5-e, K33, K33-e blocks on a nonadjacent 2-cut");
      const bool ne = p == PropertyId::NE;
      add_list(out, p, ne ? "A1-" : "A2-",
               appendix_graphs(ne ? AppendixList::A1_MMNE_15 : AppendixList::A2_MMNC_22),
               ne ? "appendix list of computer-found MMNE graphs"
                  : "appendix list of computer-found MMNC graphs");
      break;
    }
  }
  return out;
}

template <class F>
void parallel_for(std::size_t n, std::size_t jobs, F&& body) {
  jobs = std::max<std::size_t>(1, std::min(jobs, n));
  if (jobs == 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < jobs; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < n;) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

ClaimResult check_claim(const CatalogEntry& e, const Claim& c) {
  ClaimResult r{e.id, to_string(c), false, {}};
  try {
    bool got = c.kind == Claim::Kind::Has ? check(e.graph, c.property)
                                          : is_minor_minimal(e.graph, c.property);
    r.passed = got == c.expected;
    if (!r.passed) r.detail = "checker returned " + std::string(got ? "true" : "false");
  } catch (const std::exception& ex) {
    r.detail = ex.what();
  }
  return r;
}

ClaimResult fact(std::string subject, std::string claim, bool passed, std::string detail = {}) {
  return {std::move(subject), std::move(claim), passed, std::move(detail)};
}

std::set<CanonicalForm> forms_where(const std::vector<CatalogEntry>& entries,
                                    const std::function<bool(const Graph&)>& pred) {
  std::set<CanonicalForm> out;
  for (const auto& e : entries) {
    if (pred(e.graph)) out.insert(canonical(e.graph));
  }
  return out;
}

std::map<std::size_t, std::size_t> size_histogram(const std::vector<CatalogEntry>& entries,
                                                  std::size_t max_size) {
  std::map<std::size_t, std::size_t> h;
  for (const auto& e : entries) {
    if (e.graph.size() <= max_size) ++h[e.graph.size()];
  }
  return h;
}

std::string describe_histogram(const std::map<std::size_t, std::size_t>& h) {
  std::string s;
  for (auto [size, count] : h) {
    if (!s.empty()) s += ", ";
    s += std::to_string(size) + ":" + std::to_string(count);
  }
  return s;
}

std::vector<Edge> edges_where(const Graph& g, const std::function<bool(const Graph&)>& pred,
                              bool contract) {
  std::vector<Edge> out;
  for (Edge e : g.edges()) {
    if (pred(contract ? contract_edge(g, e) : delete_edge(g, e))) out.push_back(e);
  }
  return out;
}

// K33 with every edge replaced by a triangle: each edge keeps a new common neighbour.
Graph triangled_k33() {
  Graph g = k33();
  for (Edge e : k33().edges()) {
    g = disjoint_union(g, Graph(1));
    const Vertex t = static_cast<Vertex>(g.order() - 1);
    g = with_edges(g, {{e.u, t}, {e.v, t}});
  }
  return g;
}

void structural_facts(std::vector<ClaimResult>& out) {
  static const std::map<PropertyId, std::size_t> kCounts = {
      {PropertyId::AN, 2}, {PropertyId::CAN, 1}, {PropertyId::IA, 2}, {PropertyId::IE, 5},
      {PropertyId::IC, 7}, {PropertyId::NA, 36}, {PropertyId::NE, 27}, {PropertyId::NC, 34}};
  for (auto [p, n] : kCounts) {
    const auto& cat = mm_catalog(p);
    const std::string subj = "MM" + std::string(to_string(p)) + " catalog";
    out.push_back(fact(subj, "has " + std::to_string(n) + " members", cat.size() == n,
                       "found " + std::to_string(cat.size())));
    auto forms = forms_where(cat, [](const Graph&) { return true; });
    out.push_back(fact(subj, "members pairwise non-isomorphic", forms.size() == cat.size()));
  }

  const auto& na = mm_catalog(PropertyId::NA);
  const auto& ne = mm_catalog(PropertyId::NE);
  const auto& nc = mm_catalog(PropertyId::NC);
  for (const auto& e : na) {
    const std::size_t delta = min_degree(e.graph);
    const std::size_t kappa = connectivity(e.graph);
    out.push_back(fact(e.id, "minimum degree at least 3", delta >= 3,
                       "delta " + std::to_string(delta)));
    out.push_back(fact(e.id, "disconnected or connectivity in [2,5]",
                       kappa == 0 || (kappa >= 2 && kappa <= 5),
                       "kappa " + std::to_string(kappa)));
  }

  auto disconnected = [](const Graph& g) { return !is_connected(g); };
  auto cut_vertex = [](const Graph& g) { return is_connected(g) && connectivity(g) == 1; };
  auto d_na = forms_where(na, disconnected);
  out.push_back(fact("disconnected members", "NA, NE and NC catalogs agree",
                     d_na.size() == 3 && d_na == forms_where(ne, disconnected) &&
                         d_na == forms_where(nc, disconnected)));
  auto c_ne = forms_where(ne, cut_vertex);
  out.push_back(fact("connectivity-one members", "NE and NC catalogs agree",
                     c_ne.size() == 3 && c_ne == forms_where(nc, cut_vertex)));
  out.push_back(fact("connectivity-one members", "none in the NA catalog",
                     forms_where(na, cut_vertex).empty()));

  // Size distributions against the reference tables.
  {
    const std::map<std::size_t, std::size_t> want = {{12, 1}, {14, 2}, {16, 2},
                                                     {17, 3}, {18, 11}, {19, 6}};
    auto got = size_histogram(ne, 19);
    out.push_back(fact("MMNE catalog", "size distribution through size 19 matches table",
                       got == want, describe_histogram(got)));
    std::size_t in_range = 0;
    for (const auto& e : ne) in_range += e.graph.order() <= 9 || e.graph.size() <= 19;
    out.push_back(fact("MMNE catalog", "26 members of order <= 9 or size <= 19",
                       in_range == 26, "found " + std::to_string(in_range)));
  }
  {
    const std::map<std::size_t, std::size_t> want = {{12, 1}, {15, 1}, {16, 6}, {17, 14}};
    auto got = size_histogram(nc, 17);
    out.push_back(fact("MMNC catalog", "size distribution through size 17 matches table",
                       got == want, describe_histogram(got)));
  }

  // Appendix spot checks.
  {
    auto a1 = appendix_graphs(AppendixList::A1_MMNE_15);
    auto a2 = appendix_graphs(AppendixList::A2_MMNC_22);
    auto contains = [](const std::vector<Graph>& list, const Graph& g) {
      return std::any_of(list.begin(), list.end(),
                         [&](const Graph& h) { return is_isomorphic(g, h); });
    };
    out.push_back(fact("A1 first entry", "order 9 and size 18",
                       a1.front().order() == 9 && a1.front().size() == 18));
    out.push_back(fact("A1", "contains K43 and K6-e",
                       contains(a1, build_named("K43")) && contains(a1, build_named("K6-e"))));
    out.push_back(fact("A2", "contains K6", contains(a2, build_named("K6"))));
  }

  // Named graphs that must fail.
  for (auto [id, p] : {std::pair{"K5", PropertyId::NE}, std::pair{"K6", PropertyId::NE},
                       std::pair{"K5", PropertyId::NC}, std::pair{"K33", PropertyId::NE}}) {
    CatalogEntry e{id, build_named(id), {}, {}};
    out.push_back(check_claim(e, Claim{Claim::Kind::MinorMinimal, p, false}));
  }

  {
    auto [g, e] = counterexample(Counterexample::NE_not_closed);
    const std::string subj = "NE_not_closed";
    out.push_back(fact(subj, "order 16 and size 28", g.order() == 16 && g.size() == 28));
    auto apex = edges_where(g, is_planar, false);
    out.push_back(fact(subj, "distinguished edge is the unique apex edge",
                       apex.size() == 1 && apex.front() == e,
                       std::to_string(apex.size()) + " apex edges"));
    Graph ge = contract_edge(g, e);
    out.push_back(fact(subj, "contracting it gives an NE graph", check(ge, PropertyId::NE)));
    out.push_back(fact(subj, "contracting it gives K33 with every edge in a triangle",
                       is_isomorphic(ge, triangled_k33())));
  }
  {
    auto [g, e] = counterexample(Counterexample::NC_not_closed);
    const std::string subj = "NC_not_closed";
    out.push_back(fact(subj, "order 8 and size 19", g.order() == 8 && g.size() == 19));
    auto apex = edges_where(g, is_planar, true);
    out.push_back(fact(subj, "distinguished edge is the unique contraction apex",
                       apex.size() == 1 && apex.front() == e,
                       std::to_string(apex.size()) + " contraction apexes"));
    Graph ge = contract_edge(g, e);
    out.push_back(fact(subj, "contracting it gives the planar K4∪̇K4",
                       is_planar(ge) && is_isomorphic(ge, build_named("K4∪̇K4"))));
    out.push_back(fact(subj, "deleting it gives an NC graph",
                       check(delete_edge(g, e), PropertyId::NC)));
  }
}

}  // namespace

std::string to_string(const Claim& c) {
  std::string s = c.expected ? "" : "not ";
  s += c.kind == Claim::Kind::MinorMinimal ? "MM" : "";
  s += to_string(c.property);
  return s;
}

Graph build_named(std::string_view id) { return canonical_graph(build_ascii(ascii_id(id))); }

std::vector<std::string> named_ids() {
  std::vector<std::string> ids = base_ids();
  for (std::string_view u : {"K1⊔K5", "K1⊔K33", "K2⊔K5", "K2⊔K33", "K2∪̇K5", "K2∪̇K33",
                             "K5⊔K5", "K5⊔K33", "K33⊔K33", "K5∪̇K5", "K5∪̇K33", "K33∪̇K33"}) {
    ids.emplace_back(u);
  }
  return ids;
}

const std::vector<CatalogEntry>& mm_catalog(PropertyId p) {
  static const std::map<PropertyId, std::vector<CatalogEntry>> all = [] {
    std::map<PropertyId, std::vector<CatalogEntry>> m;
    for (auto q : kAllProperties) m[q] = build_catalog(q);
    return m;
  }();
  return all.at(p);
}

std::string_view to_string(MmnaFamily f) {
  switch (f) {
    case MmnaFamily::AbEdge9: return "abEdge9";
    case MmnaFamily::Bowtie3: return "bowtie3";
    case MmnaFamily::T220: return "t220";
    case MmnaFamily::T221: return "t221";
    case MmnaFamily::T222: return "t222";
  }
  return "?";
}

MmnaFamily parse_mmna_family(std::string_view s) {
  for (auto f : kAllMmnaFamilies) {
    if (to_string(f) == s) return f;
  }
  throw std::invalid_argument("unknown MMNA family: " + std::string(s));
}

std::size_t expected_family_size(MmnaFamily f) {
  switch (f) {
    case MmnaFamily::AbEdge9: return 9;
    case MmnaFamily::Bowtie3: return 3;
    case MmnaFamily::T220: return 8;
    case MmnaFamily::T221: return 8;
    case MmnaFamily::T222: return 5;
  }
  return 0;
}

std::vector<Graph> build_mmna_family(MmnaFamily f) {
  switch (f) {
    case MmnaFamily::AbEdge9: return checked_family(f, family_ab_edge());
    case MmnaFamily::Bowtie3: return checked_family(f, family_bowtie());
    case MmnaFamily::T220: return checked_family(f, family_22c(0));
    case MmnaFamily::T221: return checked_family(f, family_22c(1));
    case MmnaFamily::T222: return checked_family(f, family_222());
  }
  throw std::invalid_argument("unknown MMNA family");
}

std::vector<Graph> build_two_cut_mmne() {
  const auto blocks = nonadjacent_blocks();
  Collector c([](const Graph& g) { return is_mmne(g); });
  for (const auto& p1 : blocks) {
    for (const auto& p2 : blocks) {
      c.offer(two_vertex_union(p1.block, {p1.u, p1.v}, p2.block, {p2.u, p2.v}));
    }
  }
  auto out = c.graphs();
  if (out.size() != 6) {
    throw CatalogConsistencyError("two-cut MMNE recipe produced " + std::to_string(out.size()) +
                                  " graphs, expected 6");
  }
  return out;
}

std::string_view appendix_text(AppendixList which, std::size_t index) {
  if (which == AppendixList::A1_MMNE_15) return detail::kAppendixMmne.at(index);
  return detail::kAppendixMmnc.at(index);
}

std::vector<Graph> appendix_graphs(AppendixList which) {
  const std::size_t n = which == AppendixList::A1_MMNE_15 ? detail::kAppendixMmne.size()
                                                          : detail::kAppendixMmnc.size();
  std::vector<Graph> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(parse_edge_list(appendix_text(which, i)));
  return out;
}

std::pair<Graph, Edge> counterexample(Counterexample which) {
  if (which == Counterexample::NC_not_closed) {
    // Two K5s on {0..4} and {0,1,5,6,7}.
    Graph g = two_vertex_union(k5(), {0, 1}, k5(), {0, 1});
    return {g, Edge{0, 1}};
  }
  // K33 on 0..5 with every edge except 0-3 given a triangle. The edge 0-3 is
  // replaced by 0-z, a triangle 0,z,w, and the edge z-3.
  Graph g = k33();
  for (Edge e : k33().edges()) {
    if (e == Edge{0, 3}) continue;
    g = disjoint_union(g, Graph(1));
    const Vertex t = static_cast<Vertex>(g.order() - 1);
    g = with_edges(g, {{e.u, t}, {e.v, t}});
  }
  g = delete_edge(g, {0, 3});
  g = disjoint_union(g, Graph(2));
  const Vertex z = static_cast<Vertex>(g.order() - 2);
  const Vertex w = z + 1;
  g = with_edges(g, {{0, z}, {0, w}, {z, w}, {z, 3}});
  return {g, Edge{z, 3}};
}

std::size_t CatalogReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(), [](const ClaimResult& r) { return !r.passed; }));
}

CatalogReport verify_entries(const std::vector<CatalogEntry>& entries,
                             const VerifyOptions& options) {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<std::pair<const CatalogEntry*, const Claim*>> work;
  for (const auto& e : entries) {
    for (const auto& c : e.claims) work.emplace_back(&e, &c);
  }
  CatalogReport report;
  report.results.resize(work.size());
  parallel_for(work.size(), options.jobs, [&](std::size_t i) {
    report.results[i] = check_claim(*work[i].first, *work[i].second);
  });
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

CatalogReport verify_catalog(const VerifyOptions& options) {
  const auto t0 = std::chrono::steady_clock::now();
  CatalogReport report;
  std::vector<CatalogEntry> entries;
  try {
    for (auto p : kAllProperties) {
      for (auto e : mm_catalog(p)) {
        e.id = std::string(to_string(p)) + "/" + e.id;
        entries.push_back(std::move(e));
      }
    }
  } catch (const std::exception& ex) {
    report.results.push_back(fact("catalog", "builds", false, ex.what()));
    return report;
  }
  report = verify_entries(entries, options);
  structural_facts(report.results);
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

}  // namespace minorsieve
