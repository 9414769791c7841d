#include "cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <map>
#include <sstream>

#include "minorsieve/canonical.hpp"
#include "minorsieve/catalog.hpp"
#include "minorsieve/enumerate.hpp"
#include "minorsieve/io.hpp"
#include "minorsieve/minimality.hpp"
#include "minorsieve/moves.hpp"
#include "minorsieve/planarity.hpp"
#include "minorsieve/properties.hpp"

#ifndef MINORSIEVE_VERSION
#define MINORSIEVE_VERSION "0.0.0"
#endif

namespace minorsieve::cli {

namespace {

using nlohmann::json;

constexpr int kSchemaVersion = 1;
constexpr const char* kMaxVisitedEnv = "MINORSIEVE_MAX_VISITED";

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json envelope(std::string_view command) {
  return {{"schema", "minorsieve." + std::string(command)},
          {"schema_version", kSchemaVersion},
          {"tool_version", MINORSIEVE_VERSION}};
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<Graph> read_input_graphs(const std::string& path) {
  auto graphs = read_graphs(read_input(path));
  for (auto& g : graphs) g = canonical_graph(g);
  return graphs;
}

SieveOptions sieve_options(std::optional<std::size_t> flag) {
  SieveOptions s;
  if (const char* env = std::getenv(kMaxVisitedEnv); env && *env) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (*end != '\0' || v == 0) throw UsageError(std::string(kMaxVisitedEnv) + " must be a positive integer");
    s.max_visited = v;
  }
  if (flag) s.max_visited = *flag;
  return s;
}

std::string one_based(Vertex v) { return std::to_string(v + 1); }

std::string pair_text(Vertex u, Vertex v) { return "(" + one_based(u) + "," + one_based(v) + ")"; }

json graph_json(const Graph& g) {
  return {{"graph6", emit_graph6(g)},
          {"edge_list", emit_edge_list(g)},
          {"order", g.order()},
          {"size", g.size()}};
}

std::string_view planarity_name(PlanarityFilter p) {
  switch (p) {
    case PlanarityFilter::KeepAll: return "any";
    case PlanarityFilter::KeepPlanar: return "planar";
    case PlanarityFilter::KeepNonplanar: return "nonplanar";
  }
  return "any";
}

json filter_json(const EnumFilter& f, std::size_t min_order, std::size_t max_order) {
  json j = {{"min_order", min_order},
            {"max_order", max_order},
            {"connected", f.connected},
            {"planarity", planarity_name(f.planarity)}};
  j["min_degree"] = f.min_degree ? json(*f.min_degree) : json(nullptr);
  j["min_size"] = f.min_size ? json(*f.min_size) : json(nullptr);
  j["max_size"] = f.max_size ? json(*f.max_size) : json(nullptr);
  return j;
}

void print_found(std::ostream& out, const std::vector<Graph>& found) {
  for (const auto& g : found) out << emit_graph6(g) << ' ' << emit_edge_list(g) << '\n';
}

// --- check -------------------------------------------------------------------

struct CheckResult {
  bool value = false;
  std::string witness;
  json witness_json;
};

std::string witness_text(const Witness& w) {
  switch (w.kind) {
    case Witness::Kind::Vertex: return "vertex " + one_based(w.u);
    case Witness::Kind::Edge: return "edge " + pair_text(w.u, w.v);
    case Witness::Kind::VertexPair: return "pair " + pair_text(w.u, w.v);
  }
  return {};
}

json witness_json(const Witness& w, std::string_view role) {
  json j = {{"role", role}};
  switch (w.kind) {
    case Witness::Kind::Vertex:
      j["vertex"] = w.u + 1;
      break;
    case Witness::Kind::Edge:
      j["edge"] = {w.u + 1, w.v + 1};
      break;
    case Witness::Kind::VertexPair:
      j["pair"] = {w.u + 1, w.v + 1};
      break;
  }
  return j;
}

CheckResult evaluate(const Graph& g, const std::string& property) {
  CheckResult r;
  if (property == "planar") {
    r.value = is_planar(g);
    if (!r.value) {
      auto k = find_k_subgraph(g);
      std::vector<Vertex> branch;
      std::string text = k->kind == Kuratowski::K5 ? "K5 subdivision on" : "K33 subdivision on";
      for (Vertex v : k->branch_vertices) {
        branch.push_back(v + 1);
        text += " " + one_based(v);
      }
      r.witness = text;
      r.witness_json = {{"role", "refutation"},
                        {"kuratowski", k->kind == Kuratowski::K5 ? "K5" : "K33"},
                        {"branch_vertices", branch}};
    }
    return r;
  }
  if (property == "apex") {
    auto w = find_apex_vertex(g);
    r.value = w.has_value();
    if (w) {
      r.witness = "apex " + witness_text(*w);
      r.witness_json = witness_json(*w, "witness");
    }
    return r;
  }
  const PropertyId p = parse_property(property);
  r.value = check(g, p);
  std::optional<Witness> w;
  std::string_view role = "witness";
  if (r.value) {
    w = witness(g, p);
  } else {
    role = "refutation";
    // A deletion or contraction that leaves a planar graph.
    if (p == PropertyId::NA) w = find_apex_vertex(g);
    if (p == PropertyId::NE) w = find_apex_edge(g);
    if (p == PropertyId::NC) w = find_contraction_apex(g);
  }
  if (w) {
    r.witness = std::string(role) + " " + witness_text(*w);
    r.witness_json = witness_json(*w, role);
  }
  return r;
}

// --- subcommand bodies ------------------------------------------------------

struct Common {
  std::string format = "text";
  std::size_t jobs = 1;
  std::optional<std::size_t> max_visited;
};

bool as_json(const Common& c) { return c.format == "json"; }

int cmd_check(const Common& c, const std::string& file, const std::string& property,
              std::ostream& out) {
  auto graphs = read_input_graphs(file);
  json results = json::array();
  bool all = true;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    auto r = evaluate(graphs[i], property);
    all = all && r.value;
    if (as_json(c)) {
      json j = graph_json(graphs[i]);
      j["index"] = i + 1;
      j["value"] = r.value;
      j["witness"] = r.witness_json.is_null() ? json(nullptr) : r.witness_json;
      results.push_back(std::move(j));
    } else {
      out << i + 1 << ' ' << emit_graph6(graphs[i]) << ' ' << (r.value ? "true" : "false");
      if (!r.witness.empty()) out << ' ' << r.witness;
      out << '\n';
    }
  }
  if (as_json(c)) {
    json j = envelope("check");
    j["property"] = property;
    j["count"] = graphs.size();
    j["results"] = std::move(results);
    out << j.dump(2) << '\n';
  }
  return all ? kExitOk : kExitFailure;
}

int cmd_minimal(const Common& c, const std::string& file, PropertyId p, std::ostream& out) {
  auto graphs = read_input_graphs(file);
  const auto sieve = sieve_options(c.max_visited);
  json results = json::array();
  bool all = true;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const bool v = is_minor_minimal(graphs[i], p, sieve);
    all = all && v;
    if (as_json(c)) {
      json j = graph_json(graphs[i]);
      j["index"] = i + 1;
      j["minor_minimal"] = v;
      results.push_back(std::move(j));
    } else {
      out << i + 1 << ' ' << emit_graph6(graphs[i]) << ' ' << (v ? "true" : "false") << '\n';
    }
  }
  if (as_json(c)) {
    json j = envelope("minimal");
    j["property"] = to_string(p);
    j["count"] = graphs.size();
    j["results"] = std::move(results);
    out << j.dump(2) << '\n';
  }
  return all ? kExitOk : kExitFailure;
}

struct SearchArgs {
  std::optional<std::size_t> order, min_order, max_order;
  std::optional<std::size_t> min_degree, min_size, max_size;
  bool connected = false;
  std::string property = "NE";
  std::optional<std::string> planarity;
  bool count_only = false;
  std::size_t order_cap = 10;
};

PlanarityFilter parse_planarity(const std::string& s) {
  if (s == "any") return PlanarityFilter::KeepAll;
  if (s == "planar") return PlanarityFilter::KeepPlanar;
  if (s == "nonplanar") return PlanarityFilter::KeepNonplanar;
  throw UsageError("--planarity must be any, planar or nonplanar");
}

json search_report_json(const SearchReport& r, bool include_found) {
  json j = envelope("search");
  j["property"] = to_string(r.property);
  j["filter"] = filter_json(r.filter, r.min_order, r.max_order);
  j["scanned"] = r.scanned;
  j["found_count"] = r.found.size();
  if (include_found) {
    json found = json::array();
    for (const auto& g : r.found) found.push_back(graph_json(g));
    j["found"] = std::move(found);
  }
  j["seconds"] = r.seconds;
  return j;
}

int cmd_search(const Common& c, const SearchArgs& a, std::ostream& out) {
  const PropertyId p = parse_property(a.property);
  std::size_t lo = a.min_order.value_or(1), hi = a.max_order.value_or(0);
  if (a.order) lo = hi = *a.order;
  if (!a.order && !a.max_order) throw UsageError("search needs --order or --max-order");
  if (lo == 0 || lo > hi) throw UsageError("empty order range");

  EnumFilter f = default_search_filter(p);
  if (a.planarity) f.planarity = parse_planarity(*a.planarity);
  f.min_degree = a.min_degree;
  f.min_size = a.min_size;
  f.max_size = a.max_size;
  f.connected = a.connected;

  EnumOptions eo;
  eo.jobs = c.jobs;
  eo.max_order = a.order_cap;

  if (a.count_only) {
    SearchReport r;
    r.property = p;
    r.min_order = lo;
    r.max_order = hi;
    r.filter = f;
    const auto t0 = std::chrono::steady_clock::now();
    for (std::size_t n = lo; n <= hi; ++n) {
      EnumFilter fn = f;
      fn.order = n;
      r.scanned += count_graphs(fn, eo);
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (as_json(c)) {
      out << search_report_json(r, false).dump(2) << '\n';
    } else {
      out << r.scanned << '\n';
    }
    return kExitOk;
  }

  auto r = search_minor_minimal(p, lo, hi, f, eo, sieve_options(c.max_visited));
  if (as_json(c)) {
    out << search_report_json(r, true).dump(2) << '\n';
  } else {
    print_found(out, r.found);
    out << "# " << to_string(p) << " orders " << lo << ".." << hi << " (" << describe(f)
        << "): scanned " << r.scanned << ", found " << r.found.size() << '\n';
  }
  return kExitOk;
}

int cmd_verify(const Common& c, bool verbose, std::ostream& out) {
  auto report = verify_catalog({.jobs = c.jobs});
  if (as_json(c)) {
    json j = envelope("verify-catalog");
    json results = json::array();
    for (const auto& r : report.results) {
      results.push_back(
          {{"subject", r.subject}, {"claim", r.claim}, {"passed", r.passed}, {"detail", r.detail}});
    }
    j["results"] = std::move(results);
    j["claims"] = report.results.size();
    j["failures"] = report.failures();
    j["seconds"] = report.seconds;
    out << j.dump(2) << '\n';
  } else {
    for (const auto& r : report.results) {
      if (r.passed && !verbose) continue;
      out << (r.passed ? "ok   " : "FAIL ") << r.subject << ": " << r.claim;
      if (!r.detail.empty()) out << " [" << r.detail << "]";
      out << '\n';
    }
    out << report.results.size() << " claims, " << report.failures() << " failures\n";
  }
  return report.ok() ? kExitOk : kExitFailure;
}

// Reference MMNE/MMNC counts by size, all orders (sizes 12..19).
const std::map<PropertyId, std::vector<std::size_t>> kReferenceRows = {
    {PropertyId::NE, {1, 0, 2, 0, 2, 3, 11, 6}},
    {PropertyId::NC, {1, 0, 0, 1, 6, 14, 32, 25}},
};

int cmd_tables(const Common& c, const std::string& scale, std::ostream& out) {
  if (scale != "desk" && scale != "full") throw UsageError("--scale must be desk or full");
  const bool full = scale == "full";
  EnumOptions eo;
  eo.jobs = c.jobs;
  const auto sieve = sieve_options(c.max_visited);
  bool ok = true;
  json rows = json::array();

  struct Bound {
    PropertyId p;
    std::size_t max_order;
  };
  const Bound complete_sets[] = {{PropertyId::AN, full ? 7u : 6u},  {PropertyId::CAN, full ? 7u : 6u},
                                 {PropertyId::IA, full ? 8u : 7u},  {PropertyId::IE, full ? 9u : 8u},
                                 {PropertyId::IC, full ? 9u : 8u}};
  for (const auto& b : complete_sets) {
    auto r = search_minor_minimal(b.p, 1, b.max_order, default_search_filter(b.p), eo, sieve);
    const std::size_t expected = mm_catalog(b.p).size();
    const bool pass = r.found.size() == expected;
    ok = ok && pass;
    rows.push_back({{"property", to_string(b.p)},
                    {"max_order", b.max_order},
                    {"found", r.found.size()},
                    {"expected", expected},
                    {"passed", pass}});
    if (!as_json(c)) {
      out << "MM" << to_string(b.p) << " order<=" << b.max_order << ": found " << r.found.size()
          << ", expected " << expected << (pass ? "  ok" : "  MISMATCH") << '\n';
    }
  }

  // NE and NC by size. The explicit catalogs are complete through order 9,
  // so the expected row at a bounded order is the catalog restricted to it.
  const std::size_t bound = full ? 9 : 8;
  for (auto p : {PropertyId::NE, PropertyId::NC}) {
    EnumFilter f = default_search_filter(p);
    f.connected = true;
    f.min_degree = 2;
    auto r = search_minor_minimal(p, 5, bound, f, eo, sieve);
    std::map<std::size_t, std::size_t> got, want;
    for (const auto& g : r.found) ++got[g.size()];
    for (const auto& e : mm_catalog(p)) {
      if (e.graph.order() <= bound) ++want[e.graph.size()];
    }
    const bool pass = got == want;
    ok = ok && pass;
    json by_size = json::array();
    std::size_t lo = 12, hi = 12;
    for (auto& [s, n] : want) hi = std::max(hi, s);
    for (auto& [s, n] : got) hi = std::max(hi, s);
    for (std::size_t s = lo; s <= hi; ++s) {
      const std::size_t reference = (s >= 12 && s <= 19) ? kReferenceRows.at(p)[s - 12] : 0;
      by_size.push_back({{"size", s},
                         {"found", got[s]},
                         {"expected", want[s]},
                         {"reference_all_orders", s <= 19 ? json(reference) : json(nullptr)}});
    }
    rows.push_back({{"property", to_string(p)},
                    {"max_order", bound},
                    {"filter", describe(f)},
                    {"scanned", r.scanned},
                    {"by_size", by_size},
                    {"passed", pass}});
    if (!as_json(c)) {
      out << "MM" << to_string(p) << " order<=" << bound << " by size (found/expected/reference):";
      for (std::size_t s = lo; s <= hi; ++s) {
        out << ' ' << s << ':' << got[s] << '/' << want[s];
        if (s <= 19) out << '/' << kReferenceRows.at(p)[s - 12];
      }
      out << (pass ? "  ok" : "  MISMATCH") << '\n';
    }
  }
  if (as_json(c)) {
    json j = envelope("tables");
    j["scale"] = scale;
    j["rows"] = std::move(rows);
    j["passed"] = ok;
    out << j.dump(2) << '\n';
  }
  return ok ? kExitOk : kExitFailure;
}

int cmd_expand(const Common& c, const std::string& file, const std::string& moves,
               std::size_t depth, const std::string& property, std::ostream& out) {
  ExploreOptions o;
  o.jobs = c.jobs;
  o.sieve = sieve_options(c.max_visited);
  o.triangle_to_star = o.star_to_triangle = false;
  std::stringstream ss(moves);
  for (std::string m; std::getline(ss, m, ',');) {
    if (m == "ty") {
      o.triangle_to_star = true;
    } else if (m == "yt") {
      o.star_to_triangle = true;
    } else {
      throw UsageError("--moves takes a comma list of ty and yt");
    }
  }
  const PropertyId p = parse_property(property);
  if (p != PropertyId::NE && p != PropertyId::NC) throw UsageError("--property must be NE or NC");
  if (depth == 0) throw UsageError("--depth must be at least 1");
  auto r = explore_family(read_input_graphs(file), p, depth, o);
  if (as_json(c)) {
    json j = search_report_json(r, true);
    j["schema"] = "minorsieve.expand";
    j["moves"] = moves;
    j["depth"] = depth;
    out << j.dump(2) << '\n';
  } else {
    print_found(out, r.found);
    out << "# family members " << r.scanned << ", minor-minimal " << r.found.size() << '\n';
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minor-minimal graph search for apex-type planarity properties"};
  app.name("minorsieve");
  app.set_version_flag("--version", std::string(MINORSIEVE_VERSION));
  app.require_subcommand(1);

  Common common;
  auto add_common = [&](CLI::App* sub, bool jobs, bool sieve) {
    sub->add_option("--format", common.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    if (jobs) sub->add_option("--jobs,-j", common.jobs, "Worker threads")->check(CLI::PositiveNumber);
    if (sieve) {
      sub->add_option("--max-visited", common.max_visited,
                      std::string("Sieve cap on distinct graphs (env ") + kMaxVisitedEnv + ")");
    }
  };

  std::string file, property, moves = "ty,yt", scale;
  std::size_t depth = 1;
  bool verbose = false;
  SearchArgs sa;

  auto* check_cmd = app.add_subcommand("check", "Decide a property for each input graph");
  check_cmd->add_option("file", file, "graph6 or edge-list file, - for stdin")->required();
  check_cmd->add_option("--property,-p", property, "AN CAN NA NE NC IA IE IC planar apex")
      ->required();
  add_common(check_cmd, false, false);

  auto* minimal_cmd = app.add_subcommand("minimal", "Decide minor-minimality for each input graph");
  minimal_cmd->add_option("file", file, "graph6 or edge-list file, - for stdin")->required();
  minimal_cmd->add_option("--property,-p", property, "AN CAN NA NE NC IA IE IC")->required();
  add_common(minimal_cmd, false, true);

  auto* search_cmd = app.add_subcommand("search", "Enumerate graphs and keep the minor-minimal ones");
  search_cmd->add_option("--order", sa.order, "Single order");
  search_cmd->add_option("--min-order", sa.min_order, "Smallest order");
  search_cmd->add_option("--max-order", sa.max_order, "Largest order");
  search_cmd->add_option("--min-degree", sa.min_degree, "Minimum degree");
  search_cmd->add_option("--min-size", sa.min_size, "Minimum number of edges");
  search_cmd->add_option("--max-size", sa.max_size, "Maximum number of edges");
  search_cmd->add_flag("--connected", sa.connected, "Connected graphs only");
  search_cmd->add_option("--property,-p", sa.property, "Property (default NE)");
  search_cmd->add_option("--planarity", sa.planarity,
                         "any, planar or nonplanar (default follows the property)");
  search_cmd->add_flag("--count-only", sa.count_only, "Only count the filtered graphs");
  search_cmd->add_option("--order-cap", sa.order_cap, "Refuse orders above this (default 10)");
  add_common(search_cmd, true, true);

  auto* verify_cmd = app.add_subcommand("verify-catalog", "Re-check every catalog claim");
  verify_cmd->add_flag("--verbose,-v", verbose, "List passing claims too");
  add_common(verify_cmd, true, false);

  auto* tables_cmd = app.add_subcommand("tables", "Reproduce the minor-minimal count tables");
  tables_cmd->add_option("--scale", scale, "desk or full")->required();
  add_common(tables_cmd, true, true);

  auto* expand_cmd = app.add_subcommand("expand", "Explore delta-wye families of the input graphs");
  expand_cmd->add_option("file", file, "graph6 or edge-list file, - for stdin")->required();
  expand_cmd->add_option("--moves", moves, "Comma list of ty, yt (default both)");
  expand_cmd->add_option("--depth", depth, "Rounds of moves")->required();
  expand_cmd->add_option("--property,-p", property, "NE or NC")->required();
  add_common(expand_cmd, true, true);

  std::vector<std::string> argv_store{"minorsieve"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*check_cmd) return cmd_check(common, file, property, out);
    if (*minimal_cmd) return cmd_minimal(common, file, parse_property(property), out);
    if (*search_cmd) return cmd_search(common, sa, out);
    if (*verify_cmd) return cmd_verify(common, verbose, out);
    if (*tables_cmd) return cmd_tables(common, scale, out);
    if (*expand_cmd) return cmd_expand(common, file, moves, depth, property, out);
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace minorsieve::cli
