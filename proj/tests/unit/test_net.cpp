#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "topocryst/net.hpp"

using namespace topocryst;
using R = Rational;

namespace {

CrystalNet builtin_net(const char* name, int window) {
  BuildingBlock b = builtin_block(name);
  return build_net(b, homology_basis(b.graph()), cube_window(window, 3));
}

int count_lines(const std::string& s) {
  return static_cast<int>(std::count(s.begin(), s.end(), '\n'));
}

}  // namespace

TEST_CASE("laves net in a [-1,1]^3 window") {
  CrystalNet net = builtin_net("laves", 1);
  CHECK(net.vertices().size() == 4u * 27u);  // product of classes and cells
  bool any_interior = false;
  for (size_t i = 0; i < net.vertices().size(); ++i) {
    CHECK(net.degree(static_cast<int>(i)) <= 3);
    if (net.degree(static_cast<int>(i)) == 3) any_interior = true;
  }
  CHECK(any_interior);
  // a vertex whose neighbors all stay in the window has full degree:
  // the center vertex of each class qualifies
  for (int cls = 0; cls < 4; ++cls) {
    int idx = net.vertex_index(cls, {0, 0, 0});
    REQUIRE(idx >= 0);
    CHECK(net.degree(idx) == 3);
  }
}

TEST_CASE("diamond net has interior degree 4") {
  CrystalNet net = builtin_net("diamond", 1);
  CHECK(net.vertices().size() == 2u * 27u);
  for (int cls = 0; cls < 2; ++cls) {
    int idx = net.vertex_index(cls, {0, 0, 0});
    REQUIRE(idx >= 0);
    CHECK(net.degree(idx) == 4);
  }
}

TEST_CASE("bond vectors take only the block's edge values") {
  CrystalNet net = builtin_net("laves", 1);
  const BuildingBlock& b = net.block();
  for (const NetBond& bond : net.bonds()) {
    Vec<R> delta = sub(net.exact_position(bond.to), net.exact_position(bond.from));
    CHECK(delta == b.v_exact(bond.dedge));
  }
}

TEST_CASE("vertex decomposition of the twin") {
  CrystalNet net = builtin_net("laves", 2);
  DecompositionReport report = decompose_vertices(net);
  CHECK(report.pass);
  for (long long c : report.class_counts) CHECK(c == 125);

  // shifting by a non-lattice vector breaks every membership
  CrystalNet shifted = net.translated({R(1, 3), R(0), R(0)});
  DecompositionReport broken = decompose_vertices(shifted);
  CHECK_FALSE(broken.pass);

  // nets from other blocks are rejected
  CrystalNet diamond = builtin_net("diamond", 1);
  CHECK_THROWS_AS(decompose_vertices(diamond), DomainError);
}

TEST_CASE("incidence rules hold on the window and fail when tampered") {
  CrystalNet net = builtin_net("laves", 2);
  CHECK(check_incidence_rules(net));

  // deleting a bond breaks the "if" direction
  std::vector<NetBond> fewer = net.bonds();
  fewer.erase(fewer.begin() + static_cast<long>(fewer.size() / 2));
  CHECK_FALSE(check_incidence_rules(net.with_bonds(fewer)));

  // a spurious class-B to class-D contact at the wrong offset breaks "only if"
  int b0 = net.vertex_index(1, {0, 0, 0});
  int d0 = net.vertex_index(3, {0, 0, 0});
  REQUIRE(b0 >= 0);
  REQUIRE(d0 >= 0);
  std::vector<NetBond> more = net.bonds();
  bool already = false;
  for (const NetBond& bond : more)
    if ((bond.from == b0 && bond.to == d0) || (bond.from == d0 && bond.to == b0))
      already = true;
  REQUIRE_FALSE(already);
  more.push_back({b0, d0, net.bonds().front().dedge});
  CHECK_FALSE(check_incidence_rules(net.with_bonds(more)));
}

TEST_CASE("xyz export has one line per vertex and bond plus header") {
  CrystalNet net = builtin_net("laves", 1);
  std::string xyz = export_net_string(net, NetFormat::xyz);
  CHECK(count_lines(xyz) ==
        1 + static_cast<int>(net.vertices().size() + net.bonds().size()));
  std::string obj = export_net_string(net, NetFormat::obj);
  CHECK(count_lines(obj) ==
        1 + static_cast<int>(net.vertices().size() + net.bonds().size()));
}

TEST_CASE("empty window exports a header-only file") {
  BuildingBlock b = builtin_block("laves");
  std::vector<WindowBounds> window{{1, -1}, {1, -1}, {1, -1}};
  CrystalNet net = build_net(b, homology_basis(b.graph()), window);
  CHECK(net.vertices().empty());
  CHECK(net.bonds().empty());
  CHECK(count_lines(export_net_string(net, NetFormat::xyz)) == 1);
}

TEST_CASE("json export round-trips") {
  CrystalNet net = builtin_net("laves", 1);
  std::string json = export_net_string(net, NetFormat::json);
  CrystalNet back = import_net_json(json);
  CHECK(same_net(net, back));
}

TEST_CASE("identical inputs export byte-identically") {
  CHECK(export_net_string(builtin_net("laves", 1), NetFormat::xyz) ==
        export_net_string(builtin_net("laves", 1), NetFormat::xyz));
  BuildingBlock h = builtin_block("honeycomb");
  auto hex_net = [&] {
    return build_net(h, homology_basis(h.graph()), cube_window(1, 2));
  };
  CHECK(export_net_string(hex_net(), NetFormat::json) ==
        export_net_string(hex_net(), NetFormat::json));
}

TEST_CASE("translation by period vectors maps window vertices into the net") {
  CrystalNet net = builtin_net("laves", 2);
  const Lattice& period = net.period_lattice();
  // shift every vertex by each basis vector; on the overlap of shifted
  // windows the result must again be a net vertex
  for (int c = 0; c < 3; ++c) {
    int hits = 0;
    for (size_t i = 0; i < net.vertices().size(); ++i) {
      const NetVertex& v = net.vertices()[i];
      std::vector<long long> cell = v.cell;
      cell[c] += 1;
      int j = net.vertex_index(v.cls, cell);
      if (j < 0) continue;  // left the window
      ++hits;
      Vec<R> delta =
          sub(net.exact_position(j), net.exact_position(static_cast<int>(i)));
      CHECK(delta == period.rational_basis().column(c));
    }
    CHECK(hits > 0);
  }
}
