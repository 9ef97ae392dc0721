#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "topocryst/cochain.hpp"
#include "topocryst/lattice.hpp"

using namespace topocryst;
using R = Rational;

namespace {

Vec<R> rv(long long x, long long y, long long z) { return {R(x), R(y), R(z)}; }

}  // namespace

TEST_CASE("laves builtin matches the published vectors") {
  BuildingBlock b = builtin_block("laves");
  const QuotientGraph& g = b.graph();
  CHECK(b.exact());
  CHECK(b.dim() == 3);
  CHECK(b.v_exact(g.dedge_index("e1")) == rv(-1, -1, 0));
  CHECK(b.v_exact(g.dedge_index("e2")) == rv(0, 1, 1));
  CHECK(b.v_exact(g.dedge_index("e3")) == rv(1, 0, -1));
  CHECK(b.v_exact(g.dedge_index("f1")) == rv(-1, 1, 0));
  CHECK(b.v_exact(g.dedge_index("f2")) == rv(0, 1, -1));
  CHECK(b.v_exact(g.dedge_index("f3")) == rv(-1, 0, -1));
  CHECK(b.v_exact(g.dedge_index("~e1")) == rv(1, 1, 0));
  // all 12 vectors have squared norm 2
  for (int e = 0; e < g.dedge_count(); ++e)
    CHECK(norm_sq(b.v_exact(e)) == R(2));
  CHECK(is_harmonic(b));
}

TEST_CASE("diamond builtin has E_B = -E_A") {
  BuildingBlock b = builtin_block("diamond");
  const QuotientGraph& g = b.graph();
  CHECK(b.v_exact(g.dedge_index("e1")) == rv(-1, 1, 1));
  CHECK(b.v_exact(g.dedge_index("e4")) == rv(1, 1, -1));
  int a = g.vertex_index("A");
  int bb = g.vertex_index("B");
  std::vector<Vec<R>> star_a, star_b_neg;
  for (int e : g.star(a)) star_a.push_back(b.v_exact(e));
  for (int e : g.star(bb)) star_b_neg.push_back(negated(b.v_exact(e)));
  std::sort(star_a.begin(), star_a.end(), lex_less<R>);
  std::sort(star_b_neg.begin(), star_b_neg.end(), lex_less<R>);
  CHECK(star_a == star_b_neg);
  for (int e = 0; e < g.dedge_count(); ++e)
    CHECK(norm_sq(b.v_exact(e)) == R(3));
  CHECK(is_harmonic(b));
}

TEST_CASE("cubic builtin is the standard basis on a bouquet") {
  BuildingBlock b = builtin_block("cubic");
  CHECK(b.graph().vertex_count() == 1);
  CHECK(b.graph().edge_count() == 3);
  CHECK(is_harmonic(b));
  CHECK(b.v_exact(b.graph().dedge_index("e1")) == rv(1, 0, 0));
}

TEST_CASE("honeycomb builtin is float mode and harmonic") {
  BuildingBlock b = builtin_block("honeycomb");
  CHECK_FALSE(b.exact());
  CHECK(b.dim() == 2);
  CHECK(is_harmonic(b));
  CHECK_THROWS_AS(b.v_exact(0), DomainError);
  // unit edge lengths and 120 degrees between any two star vectors
  const QuotientGraph& g = b.graph();
  int a = g.vertex_index("A");
  for (int e : g.star(a)) CHECK(norm_sq(b.v(e)) == doctest::Approx(1.0));
  const auto& star = g.star(a);
  for (size_t i = 0; i < star.size(); ++i)
    for (size_t j = i + 1; j < star.size(); ++j)
      CHECK(dot(b.v(star[i]), b.v(star[j])) == doctest::Approx(-0.5));
}

TEST_CASE("hat_v on the published cycles") {
  BuildingBlock laves = builtin_block("laves");
  const QuotientGraph& g = laves.graph();
  CHECK(hat_v_exact(laves, path_from_ids(g, {"e2", "f1", "~e3"})) == rv(-2, 2, 2));
  CHECK(hat_v_exact(laves, path_from_ids(g, {"e3", "f2", "~e1"})) == rv(2, 2, -2));
  CHECK(hat_v_exact(laves, path_from_ids(g, {"e1", "f3", "~e2"})) == rv(-2, -2, -2));
  // cancellation
  CHECK(hat_v_exact(laves, path_from_ids(g, {"e1", "~e1"})) == rv(0, 0, 0));

  BuildingBlock diamond = builtin_block("diamond");
  const QuotientGraph& gd = diamond.graph();
  CHECK(hat_v_exact(diamond, path_from_ids(gd, {"e2", "~e3"})) == rv(2, 0, 2));

  // non-closed paths are rejected
  CHECK_THROWS_AS(hat_v_exact(laves, path_from_ids(g, {"e1", "f3"})), DomainError);
}

TEST_CASE("hat_v is additive under concatenation and negates under reversal") {
  BuildingBlock b = builtin_block("laves");
  const QuotientGraph& g = b.graph();
  CyclePath c1 = path_from_ids(g, {"e2", "f1", "~e3"});
  CyclePath c2 = path_from_ids(g, {"e3", "f2", "~e1"});
  CyclePath joined;  // both cycles start and end at A
  joined.edges = c1.edges;
  joined.edges.insert(joined.edges.end(), c2.edges.begin(), c2.edges.end());
  CHECK(hat_v_exact(b, joined) ==
        add(hat_v_exact(b, c1), hat_v_exact(b, c2)));
  CyclePath reversed;
  for (auto it = c1.edges.rbegin(); it != c1.edges.rend(); ++it)
    reversed.edges.push_back(g.inverse(*it));
  CHECK(hat_v_exact(b, reversed) == negated(hat_v_exact(b, c1)));
}

TEST_CASE("period lattices of the builtins") {
  BuildingBlock laves = builtin_block("laves");
  Lattice p = period_lattice(laves, homology_basis(laves.graph()));
  CHECK(p.equals(builtin_lattice("L_DT").scaled(R(2))));

  BuildingBlock diamond = builtin_block("diamond");
  Lattice q = period_lattice(diamond, homology_basis(diamond.graph()));
  CHECK(q.equals(builtin_lattice("L_D").scaled(R(2))));
}

TEST_CASE("period lattice is independent of the homology basis") {
  BuildingBlock b = builtin_block("laves");
  const QuotientGraph& g = b.graph();
  Lattice reference = period_lattice(b, homology_basis(g));
  for (int root = 0; root < g.vertex_count(); ++root) {
    Lattice other = period_lattice(b, homology_basis(g, spanning_tree(g, root)));
    CHECK(reference.equals(other));
  }
}

TEST_CASE("honeycomb period lattice is hexagonal") {
  BuildingBlock b = builtin_block("honeycomb");
  Lattice p = period_lattice(b, homology_basis(b.graph()));
  Mat<double> gram = p.gram();
  CHECK(gram(0, 0) == doctest::Approx(3.0));
  CHECK(gram(1, 1) == doctest::Approx(3.0));
  // 60 or 120 degree basis angle: |cos| = 1/2
  double c = gram(0, 1) / std::sqrt(gram(0, 0) * gram(1, 1));
  CHECK(std::fabs(c) == doctest::Approx(0.5));
}

TEST_CASE("degenerate image is rejected") {
  // both loop vectors on one line: rank 1 image in dimension 2
  QuotientGraph g = parse_quotient_graph("vertex x\nedge a x x\nedge b x x\n");
  std::map<std::string, Vec<R>> v;
  v["a"] = {R(1), R(0)};
  v["b"] = {R(2), R(0)};
  BuildingBlock b = BuildingBlock::from_rational(g, v);
  CHECK_THROWS_WITH_AS(period_lattice(b, homology_basis(g)),
                       doctest::Contains("non-periodic"), DomainError);
}

TEST_CASE("is_harmonic detects a broken star sum") {
  BuildingBlock laves = builtin_block("laves");
  std::map<std::string, Vec<R>> v;
  const QuotientGraph& g = laves.graph();
  for (int e : g.primary_edges()) v[g.dedge(e).id] = laves.v_exact(e);
  v["e1"] = rv(-1, -1, 1);  // breaks the cancellation at A
  BuildingBlock broken = BuildingBlock::from_rational(g, v);
  CHECK_FALSE(is_harmonic(broken));
}

TEST_CASE("membership identities on a sample grid") {
  std::vector<std::array<long long, 3>> samples;
  for (long long x = -4; x <= 4; ++x)
    for (long long y = -4; y <= 4; ++y)
      for (long long z = -4; z <= 4; ++z) samples.push_back({x, y, z});
  CHECK(membership_identity_check("L_DT", samples));
  CHECK(membership_identity_check("L_D", samples));
  CHECK(membership_identity_check("L_DT", {{1, 1, 2}}));
  CHECK(membership_identity_check("L_D", {{1, 1, 0}}));
  CHECK(membership_identity_check("L_DT", {{0, 0, 0}}));
}

TEST_CASE("block serialization round-trips exactly") {
  BuildingBlock b = builtin_block("laves");
  std::string text = serialize_block(b);
  BuildingBlock c = parse_building_block(text);
  CHECK(c.exact());
  CHECK(serialize_block(c) == text);
  for (int e = 0; e < b.graph().dedge_count(); ++e)
    CHECK(c.v_exact(c.graph().dedge_index(b.graph().dedge(e).id)) ==
          b.v_exact(e));

  // float blocks survive through 12-significant-digit decimals
  BuildingBlock h = builtin_block("honeycomb");
  BuildingBlock h2 = parse_building_block(serialize_block(h));
  CHECK_FALSE(h2.exact());
  for (int e = 0; e < h.graph().dedge_count(); ++e) {
    const Vec<double>& u = h.v(e);
    const Vec<double>& w = h2.v(h2.graph().dedge_index(h.graph().dedge(e).id));
    for (size_t i = 0; i < u.size(); ++i)
      CHECK(u[i] == doctest::Approx(w[i]).epsilon(1e-11));
  }
}

TEST_CASE("the documented dipole example is the diamond block") {
  // the QG snippet from the README
  BuildingBlock b = parse_building_block(
      "dim 3\n"
      "vertex A\n"
      "vertex B\n"
      "edge e1 A B v= -1 1 1\n"
      "edge e2 A B v= 1 -1 1\n"
      "edge e3 A B v= -1 -1 -1\n"
      "edge e4 A B v= 1 1 -1\n");
  BuildingBlock diamond = builtin_block("diamond");
  for (int e = 0; e < diamond.graph().dedge_count(); ++e)
    CHECK(b.v_exact(b.graph().dedge_index(diamond.graph().dedge(e).id)) ==
          diamond.v_exact(e));
}

TEST_CASE("rational vectors in QG files") {
  BuildingBlock b = parse_building_block(
      "dim 2\nvertex A\nedge a A A v= 1/2 -3/4\nedge b A A v= 0 2\n");
  CHECK(b.exact());
  CHECK(b.v_exact(b.graph().dedge_index("a")) == Vec<R>{R(1, 2), R(-3, 4)});
  CHECK_THROWS_AS(
      parse_building_block("dim 2\nvertex A\nedge a A A v= 1 2\nedge b A A\n"),
      ParseError);
}
