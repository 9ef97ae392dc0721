#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "topocryst/rings.hpp"

using namespace topocryst;
using R = Rational;

TEST_CASE("girths of the builtin blocks") {
  CHECK(girth(builtin_block("laves")) == 10);
  CHECK(girth(builtin_block("diamond")) == 6);
  CHECK(girth(builtin_block("cubic")) == 4);
  CHECK(girth(builtin_block("honeycomb")) == 6);
}

TEST_CASE("ring counts per vertex class") {
  BuildingBlock laves = builtin_block("laves");
  for (int cls = 0; cls < 4; ++cls)
    CHECK(rings_through_vertex(laves, cls, 10).size() == 15);
  BuildingBlock diamond = builtin_block("diamond");
  for (int cls = 0; cls < 2; ++cls)
    CHECK(rings_through_vertex(diamond, cls, 6).size() == 12);
  CHECK(rings_through_vertex(builtin_block("cubic"), 0, 4).size() == 12);
}

TEST_CASE("enumeration below the girth is empty") {
  BuildingBlock laves = builtin_block("laves");
  CHECK(rings_through_vertex(laves, 0, 3).empty());
  CHECK(rings_through_vertex(laves, 0, 9).empty());
  CHECK(rings_through_vertex(builtin_block("diamond"), 0, 5).empty());
}

TEST_CASE("every enumerated ring satisfies the ring invariants") {
  for (const char* name : {"laves", "diamond", "cubic"}) {
    BuildingBlock b = builtin_block(name);
    int len = girth(b);
    for (const Ring& r : rings_through_vertex(b, 0, len)) {
      CHECK(r.length() == len);
      // closed: cochain sum vanishes
      CyclePath path{r.edges};
      Vec<R> sum = hat_v_exact(b, path);
      for (const R& c : sum) CHECK(c.is_zero());
      // simple: pairwise distinct (class, cell) pairs
      std::set<std::pair<int, std::vector<long long>>> seen;
      for (size_t i = 0; i < r.cells.size(); ++i) {
        int cls = b.graph().dedge(r.edges[i]).origin;
        CHECK(seen.emplace(cls, r.cells[i]).second);
      }
      // non-backtracking, including the wrap-around step
      for (size_t i = 0; i < r.edges.size(); ++i)
        CHECK(r.edges[(i + 1) % r.edges.size()] != b.graph().inverse(r.edges[i]));
    }
  }
}

TEST_CASE("the reference decagon words verify") {
  BuildingBlock laves = builtin_block("laves");
  CHECK(laves_reference_decagons().size() == 15);
  CHECK(verify_listed_rings(laves));
  // pairwise distinct canonical keys
  std::set<std::string> keys;
  for (const auto& word : laves_reference_decagons())
    keys.insert(lift_word(laves, word).canonical_key);
  CHECK(keys.size() == 15);
  // the words are rejected for other blocks
  CHECK_THROWS_AS(verify_listed_rings(builtin_block("diamond")), DomainError);
}

TEST_CASE("laves decagons are congruent: edges sqrt(2), all angles 120") {
  BuildingBlock laves = builtin_block("laves");
  std::vector<Ring> rings = rings_through_vertex(laves, 0, 10);
  REQUIRE(rings.size() == 15);
  for (const Ring& r : rings) {
    RingGeometry geo = ring_geometry(r, laves);
    for (double len : geo.edge_lengths)
      CHECK(len == doctest::Approx(std::sqrt(2.0)).epsilon(1e-13));
    for (double a : geo.angles_sorted)
      CHECK(a == doctest::Approx(120.0).epsilon(1e-13));
  }
}

TEST_CASE("diamond hexagons are chair rings: edges sqrt(3), equal angles") {
  BuildingBlock diamond = builtin_block("diamond");
  std::vector<Ring> rings = rings_through_vertex(diamond, 0, 6);
  REQUIRE(rings.size() == 12);
  const double tetrahedral = std::acos(-1.0 / 3.0) * 180.0 / std::acos(-1.0);
  for (const Ring& r : rings) {
    RingGeometry geo = ring_geometry(r, diamond);
    for (double len : geo.edge_lengths)
      CHECK(len == doctest::Approx(std::sqrt(3.0)).epsilon(1e-13));
    for (double a : geo.angles_sorted)
      CHECK(a == doctest::Approx(tetrahedral).epsilon(1e-13));
  }
}

TEST_CASE("ring counts agree across classes (vertex transitivity)") {
  BuildingBlock laves = builtin_block("laves");
  std::set<size_t> counts;
  for (int cls = 0; cls < 4; ++cls)
    counts.insert(rings_through_vertex(laves, cls, 10).size());
  CHECK(counts.size() == 1);
}

TEST_CASE("girth search error path") {
  // the bouquet block has girth 4; a cap below that reports failure
  CHECK_THROWS_AS(girth(builtin_block("cubic"), 3), DomainError);
  CHECK_THROWS_AS(rings_through_vertex(builtin_block("cubic"), 7, 4), DomainError);
}

TEST_CASE("lift_word rejects malformed words") {
  BuildingBlock laves = builtin_block("laves");
  CHECK_THROWS_AS(lift_word(laves, {"e1", "f3"}), DomainError);  // not closed
  CHECK_THROWS_AS(lift_word(laves, {"e1", "~e1"}), DomainError);  // backtracks
  CHECK_THROWS_AS(lift_word(laves, {"zz"}), DomainError);         // unknown id
}

TEST_CASE("canonical words are valid ring words") {
  BuildingBlock laves = builtin_block("laves");
  for (const Ring& r : rings_through_vertex(laves, 0, 10)) {
    std::vector<std::string> word;
    for (int e : r.canonical_edges) word.push_back(laves.graph().dedge(e).id);
    Ring again = lift_word(laves, word);
    CHECK(again.length() == r.length());
    // canonical traversal is a rotation/reflection: same undirected edges
    auto slot_multiset = [&](const std::vector<int>& es) {
      std::vector<int> slots;
      for (int e : es) slots.push_back(std::min(e, laves.graph().inverse(e)));
      std::sort(slots.begin(), slots.end());
      return slots;
    };
    CHECK(slot_multiset(r.canonical_edges) == slot_multiset(r.edges));
  }
}

TEST_CASE("enumeration is identical under any thread cap") {
  BuildingBlock laves = builtin_block("laves");
  auto keys_with_cap = [&](const char* cap) {
    setenv("TOPOCRYST_THREADS", cap, 1);
    std::vector<std::string> keys;
    for (const Ring& r : rings_through_vertex(laves, 0, 10))
      keys.push_back(r.canonical_key);
    unsetenv("TOPOCRYST_THREADS");
    return keys;
  };
  CHECK(keys_with_cap("1") == keys_with_cap("4"));
}
