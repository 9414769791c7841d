#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "minorsieve/canonical.hpp"
#include "minorsieve/catalog.hpp"
#include "minorsieve/io.hpp"
#include "minorsieve/planarity.hpp"
#include "oracles.hpp"

using namespace minorsieve;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& contents) {
  auto path = std::filesystem::temp_directory_path() / ("minorsieve_cli_test_" + name);
  std::ofstream(path) << contents;
  return path.string();
}

}  // namespace

TEST_CASE("check") {
  auto k6 = temp_file("k6.g6", emit_graph6(complete_graph(6)) + "\n");
  auto r = run({"check", k6, "--property", "NA"});
  CHECK(r.code == 0);
  CHECK(r.out == "1 E~~w true\n");

  r = run({"check", k6, "--property", "planar"});
  CHECK(r.code == 1);
  CHECK(r.out.find("K5 subdivision") != std::string::npos);

  auto mixed = temp_file("mixed.txt", "# comment\n{(1,2),(2,3),(1,3)}\n" +
                                          emit_graph6(build_named("K5")) + "\n");
  r = run({"check", mixed, "-p", "NE", "--format", "json"});
  CHECK(r.code == 1);
  auto j = json::parse(r.out);
  CHECK(j["schema"] == "minorsieve.check");
  CHECK(j["schema_version"] == 1);
  CHECK(j["tool_version"].is_string());
  REQUIRE(j["results"].size() == 2);
  CHECK(j["results"][1]["value"] == false);
  CHECK(j["results"][1]["witness"]["role"] == "refutation");
  CHECK(j["results"][1]["witness"]["edge"].size() == 2);

  CHECK(run({"check", k6, "-p", "XX"}).code == 2);
  CHECK(run({"check", "/nonexistent/file", "-p", "NA"}).code == 2);
  auto bad = temp_file("bad.txt", "{(1,1)}\n");
  r = run({"check", bad, "-p", "NA"});
  CHECK(r.code == 2);
  CHECK(r.err.find("line 1") != std::string::npos);
}

TEST_CASE("minimal and the resource cap") {
  auto f = temp_file("k43.txt", emit_edge_list(complete_bipartite(4, 3)) + "\n");
  CHECK(run({"minimal", f, "-p", "NE"}).code == 0);
  CHECK(run({"minimal", f, "-p", "NA"}).code == 1);
  CHECK(run({"minimal", f, "-p", "NE", "--max-visited", "2"}).code == 2);
  ::setenv("MINORSIEVE_MAX_VISITED", "2", 1);
  CHECK(run({"minimal", f, "-p", "NE"}).code == 2);
  ::setenv("MINORSIEVE_MAX_VISITED", "junk", 1);
  CHECK(run({"minimal", f, "-p", "NE"}).code == 2);
  ::unsetenv("MINORSIEVE_MAX_VISITED");
}

TEST_CASE("search") {
  auto r = run({"search", "--order", "6", "--min-degree", "2", "--connected", "--count-only"});
  CHECK(r.code == 0);
  std::size_t brute = 0;
  for (const auto& g : oracle::all_graphs(6, [](const Graph& h) { return canonical(h); })) {
    brute += is_connected(g) && min_degree(g) >= 2 && !is_planar(g);
  }
  CHECK(r.out == std::to_string(brute) + "\n");

  r = run({"search", "--max-order", "7", "-p", "NE", "--format", "json"});
  CHECK(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["schema"] == "minorsieve.search");
  CHECK(j["found_count"] == 2);
  CHECK(j["filter"]["planarity"] == "nonplanar");
  CHECK(j["found"][0]["graph6"].is_string());

  CHECK(run({"search"}).code == 2);
  CHECK(run({"search", "--order", "11"}).code == 2);
  CHECK(run({"search", "--order", "5", "--planarity", "sideways"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--version"}).code == 0);
}

TEST_CASE("verify-catalog and expand") {
  auto r = run({"verify-catalog"});
  CHECK(r.code == 0);
  CHECK(r.out.find("0 failures") != std::string::npos);

  std::string seeds;
  for (const auto& g : build_two_cut_mmne()) seeds += emit_graph6(g) + "\n";
  auto f = temp_file("seeds.g6", seeds);
  r = run({"expand", f, "--depth", "1", "-p", "NE"});
  CHECK(r.code == 0);
  CHECK(r.out.find("# family members") != std::string::npos);
  CHECK(run({"expand", f, "--depth", "0", "-p", "NE"}).code == 2);
  CHECK(run({"expand", f, "--depth", "1", "-p", "NA"}).code == 2);
  CHECK(run({"expand", f, "--depth", "1", "-p", "NE", "--moves", "xy"}).code == 2);
  CHECK(run({"expand", f, "--depth", "1", "-p", "NE", "--moves", "yt"}).code == 0);
}
