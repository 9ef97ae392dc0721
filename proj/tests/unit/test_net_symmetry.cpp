#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>

#include "topocryst/net_symmetry.hpp"

using namespace topocryst;
using R = Rational;

namespace {

CrystalNet builtin_net(const char* name) {
  BuildingBlock b = builtin_block(name);
  return build_net(b, homology_basis(b.graph()), cube_window(1, 3));
}

CrystalNet mirrored_net(const char* name) {
  Mat<R> mirror = Mat<R>::identity(3);
  mirror(0, 0) = R(-1);
  BuildingBlock b = builtin_block(name).transformed(mirror);
  return build_net(b, homology_basis(b.graph()), cube_window(1, 3));
}

}  // namespace

TEST_CASE("net point group orders") {
  CHECK(net_point_group(builtin_net("laves")).order() == 24);
  CHECK(net_point_group(builtin_net("diamond")).order() == 48);
  CHECK(net_point_group(builtin_net("cubic")).order() == 48);
}

TEST_CASE("laves net group is a rotation subgroup of the lattice group") {
  CrystalNet net = builtin_net("laves");
  PointGroup net_pg = net_point_group(net);
  PointGroup lattice_pg = point_group(net.period_lattice());
  for (const Mat<R>& g : net_pg.elements_exact) {
    CHECK(determinant(g, R(0)) == R(1));
    bool in_lattice_group = false;
    for (const Mat<R>& h : lattice_pg.elements_exact)
      if (g == h) in_lattice_group = true;
    CHECK(in_lattice_group);
  }
}

TEST_CASE("net isometries compose within the found set") {
  CrystalNet net = builtin_net("laves");
  std::vector<NetIsometry> isos = net_isometries(net);
  // one isometry mod lattice translations per linear part
  CHECK(isos.size() == 24);
  auto member = [&](const NetIsometry& iso) {
    for (const NetIsometry& x : isos)
      if (same_isometry(x, iso)) return true;
    return false;
  };
  // closure modulo lattice translations
  for (size_t i = 0; i < isos.size(); ++i)
    for (size_t j = 0; j < isos.size(); j += 5)
      CHECK(member(compose(net, isos[i], isos[j])));
}

TEST_CASE("element-order census identifies the octahedral groups") {
  auto census = [](const PointGroup& pg) {
    std::map<int, int> orders;
    const Mat<R> id = Mat<R>::identity(3);
    for (const Mat<R>& g : pg.elements_exact) {
      Mat<R> power = g;
      int order = 1;
      while (!(power == id)) {
        power = power * g;
        ++order;
      }
      ++orders[order];
    }
    return orders;
  };
  // rotation group of the octahedron (isomorphic to S4)
  std::map<int, int> rotation_census{{1, 1}, {2, 9}, {3, 8}, {4, 6}};
  // full octahedral group (S4 x Z2)
  std::map<int, int> full_census{{1, 1}, {2, 19}, {3, 8}, {4, 12}, {6, 8}};
  CHECK(census(net_point_group(builtin_net("laves"))) == rotation_census);
  CHECK(census(net_point_group(builtin_net("diamond"))) == full_census);
  CHECK(census(net_point_group(builtin_net("cubic"))) == full_census);
  CHECK(census(point_group(builtin_lattice("Z3"))) == full_census);
}

TEST_CASE("strong isotropy of the three nets") {
  CHECK(is_strongly_isotropic(builtin_net("laves")));
  CHECK(is_strongly_isotropic(builtin_net("diamond")));
  CHECK_FALSE(is_strongly_isotropic(builtin_net("cubic")));
}

TEST_CASE("chirality of the three nets") {
  CHECK(is_chiral(builtin_net("laves")));
  CHECK_FALSE(is_chiral(builtin_net("diamond")));
  CHECK_FALSE(is_chiral(builtin_net("cubic")));
}

TEST_CASE("chirality is invariant under mirroring the net") {
  CHECK(is_chiral(mirrored_net("laves")) == is_chiral(builtin_net("laves")));
  CHECK(is_chiral(mirrored_net("diamond")) == is_chiral(builtin_net("diamond")));
  CHECK(is_chiral(mirrored_net("cubic")) == is_chiral(builtin_net("cubic")));
}

TEST_CASE("float nets are rejected") {
  BuildingBlock h = builtin_block("honeycomb");
  CrystalNet net = build_net(h, homology_basis(h.graph()), cube_window(1, 2));
  CHECK_THROWS_AS(net_point_group(net), DomainError);
  CHECK_THROWS_AS(is_strongly_isotropic(net), DomainError);
  CHECK_THROWS_AS(is_chiral(net), DomainError);
}
