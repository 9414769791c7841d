#include <doctest.h>

#include <set>

#include "minorsieve/canonical.hpp"
#include "minorsieve/enumerate.hpp"
#include "minorsieve/planarity.hpp"
#include "oracles.hpp"

using namespace minorsieve;

namespace {

std::vector<CanonicalForm> keys(const std::vector<Graph>& gs) {
  std::vector<CanonicalForm> out;
  for (const Graph& g : gs) out.push_back(canonical(g));
  return out;
}

}  // namespace

TEST_CASE("order 6 matches the brute-force class count") {
  EnumFilter f;
  f.order = 6;
  CHECK(count_graphs(f) == oracle::brute_iso_classes(6).size());
}

TEST_CASE("graph counts by order") {
  // Orders 0..5 against the brute-force oracle; 7 and 8 are standard values.
  for (std::size_t n = 0; n <= 5; ++n) {
    EnumFilter f;
    f.order = n;
    CHECK(count_graphs(f) == oracle::brute_iso_classes(n).size());
  }
  EnumFilter f;
  f.order = 7;
  CHECK(count_graphs(f) == 1044);
  f.order = 8;
  CHECK(count_graphs(f) == 12346);
  f.connected = true;
  CHECK(count_graphs(f) == 11117);
}

TEST_CASE("only K5 is nonplanar on five vertices") {
  EnumFilter f;
  f.order = 5;
  f.planarity = PlanarityFilter::KeepNonplanar;
  const auto gs = enumerate_all(f);
  REQUIRE(gs.size() == 1);
  CHECK(is_isomorphic(gs[0], complete_graph(5)));
}

TEST_CASE("emitted graphs satisfy the filter and are pairwise non-isomorphic") {
  EnumFilter f;
  f.order = 7;
  f.min_degree = 2;
  f.connected = true;
  f.min_size = 9;
  f.max_size = 14;
  const auto gs = enumerate_all(f);
  CHECK(!gs.empty());
  std::set<CanonicalForm> seen;
  for (const Graph& g : gs) {
    CHECK(f.accepts(g));
    CHECK(seen.insert(canonical(g)).second);
  }
  // Post-filtering the unrestricted enumeration gives the same set.
  EnumFilter all;
  all.order = 7;
  std::vector<Graph> expected;
  for (const Graph& g : enumerate_all(all)) {
    if (f.accepts(g)) expected.push_back(g);
  }
  CHECK(keys(gs) == keys(expected));
}

TEST_CASE("degree prune equals post-filtering") {
  for (std::size_t d = 1; d <= 4; ++d) {
    EnumFilter f;
    f.order = 7;
    f.min_degree = d;
    std::size_t expected = 0;
    EnumFilter all;
    all.order = 7;
    enumerate(all, [&](const Graph& g) { expected += min_degree(g) >= d; });
    CHECK(count_graphs(f) == expected);
  }
}

TEST_CASE("shards partition the output") {
  EnumFilter f;
  f.order = 7;
  const auto whole = keys(enumerate_all(f));
  std::vector<CanonicalForm> merged;
  for (std::size_t s = 0; s < 3; ++s) {
    EnumOptions o;
    o.shard_index = s;
    o.shard_count = 3;
    for (auto& k : keys(enumerate_all(f, o))) merged.push_back(std::move(k));
  }
  std::sort(merged.begin(), merged.end());
  CHECK(std::adjacent_find(merged.begin(), merged.end()) == merged.end());
  CHECK(merged == whole);
}

TEST_CASE("shuffled augmentation order and job count do not change the output") {
  EnumFilter f;
  f.order = 7;
  const auto base = keys(enumerate_all(f));
  EnumOptions shuffled;
  shuffled.shuffle_seed = 12345;
  CHECK(keys(enumerate_all(f, shuffled)) == base);
  EnumOptions threaded;
  threaded.jobs = 4;
  CHECK(keys(enumerate_all(f, threaded)) == base);
}

TEST_CASE("enumeration bounds") {
  EnumFilter f;
  f.order = 11;
  CHECK_THROWS_AS(count_graphs(f), ResourceLimitError);
  f.order = 4;
  f.max_size = 7;
  CHECK_THROWS_AS(count_graphs(f), std::invalid_argument);
}

TEST_CASE("small searches") {
  const auto an = search_minor_minimal(PropertyId::AN, 1, 6, default_search_filter(PropertyId::AN));
  REQUIRE(an.found.size() == 2);
  CHECK(an.scanned > 0);
  const auto ia = search_minor_minimal(PropertyId::IA, 1, 6, default_search_filter(PropertyId::IA));
  REQUIRE(ia.found.size() == 1);
  CHECK(is_isomorphic(ia.found[0], disjoint_union(empty_graph(1), complete_graph(5))));
  CHECK_THROWS_AS(search_minor_minimal(PropertyId::NE, 5, 4, EnumFilter{}), std::invalid_argument);
}
