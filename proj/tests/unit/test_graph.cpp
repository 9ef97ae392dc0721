#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "topocryst/cochain.hpp"
#include "topocryst/graph.hpp"

using namespace topocryst;

namespace {

const char* kK4 = R"(# complete graph on A, B, C, D
vertex A
vertex B
vertex C
vertex D
edge e1 A D
edge e2 A B
edge e3 A C
edge f1 B C
edge f2 C D
edge f3 D B
)";

const char* kDipole = R"(vertex A
vertex B
edge e1 A B
edge e2 A B
edge e3 A B
edge e4 A B
)";

// rank over the rationals of the cycle/edge incidence matrix
int cycle_rank(const QuotientGraph& g, const HomologyBasis& basis) {
  Mat<Rational> m(basis.dim(), g.edge_count());
  for (int i = 0; i < basis.dim(); ++i) {
    std::vector<long long> counts = edge_incidence(g, basis.cycles[i]);
    for (int j = 0; j < g.edge_count(); ++j) m(i, j) = Rational(counts[j]);
  }
  return rank(m, Rational(0));
}

}  // namespace

TEST_CASE("parsing the K4 description") {
  QuotientGraph g = parse_quotient_graph(kK4);
  CHECK(g.vertex_count() == 4);
  CHECK(g.dedge_count() == 12);
  CHECK(g.betti_number() == 3);
  // involution invariants
  for (int e = 0; e < g.dedge_count(); ++e) {
    CHECK(g.inverse(g.inverse(e)) == e);
    CHECK(g.inverse(e) != e);
    CHECK(g.dedge(g.inverse(e)).origin == g.dedge(e).terminus);
    CHECK(g.dedge(g.inverse(e)).terminus == g.dedge(e).origin);
  }
}

TEST_CASE("parsing the dipole and a single loop") {
  QuotientGraph dipole = parse_quotient_graph(kDipole);
  CHECK(dipole.vertex_count() == 2);
  CHECK(dipole.dedge_count() == 8);
  CHECK(dipole.betti_number() == 3);

  QuotientGraph loop = parse_quotient_graph("vertex x\nedge l x x\n");
  CHECK(loop.vertex_count() == 1);
  CHECK(loop.dedge_count() == 2);
  CHECK(loop.betti_number() == 1);
  CHECK(loop.star(0).size() == 2);  // the loop and its inverse
}

TEST_CASE("parse errors name the offending line") {
  CHECK_THROWS_WITH_AS(parse_quotient_graph("vertex A\nvertex A\n"),
                       doctest::Contains("line 2"), ParseError);
  CHECK_THROWS_WITH_AS(parse_quotient_graph("vertex A\nedge e A Z\n"),
                       doctest::Contains("unknown vertex 'Z'"), ParseError);
  CHECK_THROWS_WITH_AS(
      parse_quotient_graph("vertex A\nvertex B\nedge e A A\n"),
      doctest::Contains("disconnected"), ParseError);
  CHECK_THROWS_WITH_AS(parse_quotient_graph("vertex A\nedge e A A\nedge e A A\n"),
                       doctest::Contains("duplicate edge id"), ParseError);
  CHECK_THROWS_AS(parse_quotient_graph("vertx A\n"), ParseError);
}

TEST_CASE("betti numbers") {
  CHECK(parse_quotient_graph(kK4).betti_number() == 3);
  CHECK(parse_quotient_graph(kDipole).betti_number() == 3);
  // tree on 5 vertices
  QuotientGraph tree = parse_quotient_graph(
      "vertex a\nvertex b\nvertex c\nvertex d\nvertex e\n"
      "edge t1 a b\nedge t2 b c\nedge t3 b d\nedge t4 d e\n");
  CHECK(tree.betti_number() == 0);
}

TEST_CASE("homology basis of K4 matches the declared cycles") {
  QuotientGraph g = parse_quotient_graph(kK4);
  HomologyBasis basis = homology_basis(g);
  REQUIRE(basis.dim() == 3);
  for (const CyclePath& c : basis.cycles) CHECK(is_closed(g, c));
  // co-tree edges certify independence
  std::set<int> cotree(basis.cotree_edges.begin(), basis.cotree_edges.end());
  CHECK(cotree.size() == 3);
  CHECK(cycle_rank(g, basis) == 3);
  // the BFS tree from A uses e1, e2, e3, so the cycles are the classic ones
  CHECK(basis.cycles[0].edges ==
        path_from_ids(g, {"e2", "f1", "~e3"}).edges);
  CHECK(basis.cycles[1].edges ==
        path_from_ids(g, {"e3", "f2", "~e1"}).edges);
  CHECK(basis.cycles[2].edges ==
        path_from_ids(g, {"e1", "f3", "~e2"}).edges);
}

TEST_CASE("homology basis of the dipole has three 2-cycles") {
  QuotientGraph g = parse_quotient_graph(kDipole);
  HomologyBasis basis = homology_basis(g);
  REQUIRE(basis.dim() == 3);
  for (const CyclePath& c : basis.cycles) {
    CHECK(c.edges.size() == 2);
    CHECK(is_closed(g, c));
  }
  CHECK(cycle_rank(g, basis) == 3);
}

TEST_CASE("single loop graph has the loop as its basis") {
  QuotientGraph g = parse_quotient_graph("vertex x\nedge l x x\n");
  HomologyBasis basis = homology_basis(g);
  REQUIRE(basis.dim() == 1);
  CHECK(basis.cycles[0].edges.size() == 1);
  CHECK(is_closed(g, basis.cycles[0]));
}

TEST_CASE("bases from different spanning trees are unimodularly related") {
  QuotientGraph g = parse_quotient_graph(kK4);
  HomologyBasis b1 = homology_basis(g);
  for (int root = 0; root < g.vertex_count(); ++root) {
    HomologyBasis b2 = homology_basis(g, spanning_tree(g, root));
    // express b2's cycles in b1's cotree coordinates
    // (cotree coefficient = signed count of that cotree edge)
    Mat<Rational> m(b1.dim(), b1.dim());
    for (int i = 0; i < b1.dim(); ++i) {
      std::vector<long long> counts = edge_incidence(g, b2.cycles[i]);
      // map cotree edge of b1 -> its primary slot
      for (int j = 0; j < b1.dim(); ++j) {
        int slot = -1;
        const auto& prim = g.primary_edges();
        for (size_t p = 0; p < prim.size(); ++p)
          if (prim[p] == b1.cotree_edges[j]) slot = static_cast<int>(p);
        REQUIRE(slot >= 0);
        m(j, i) = Rational(counts[slot]);
      }
    }
    Rational det = determinant(m, Rational(0));
    CHECK((det == Rational(1) || det == Rational(-1)));
  }
}

TEST_CASE("parse, serialize, parse is the identity on combinatorial data") {
  QuotientGraph g = parse_quotient_graph(kK4);
  std::string text = g.serialize();
  QuotientGraph h = parse_quotient_graph(text);
  CHECK(h.serialize() == text);
  CHECK(h.vertex_count() == g.vertex_count());
  CHECK(h.dedge_count() == g.dedge_count());
  for (int e = 0; e < g.dedge_count(); ++e) {
    CHECK(h.dedge(e).id == g.dedge(e).id);
    CHECK(h.dedge(e).origin == g.dedge(e).origin);
    CHECK(h.dedge(e).terminus == g.dedge(e).terminus);
  }
}

TEST_CASE("malformed input always raises ParseError, never crashes") {
  const char* bad[] = {
      "edge",
      "vertex",
      "dim x\nvertex A\nedge e A A",
      "dim 0",
      "vertex A\nedge ~e A A",
      "vertex A\nedge e A A v=",
      "vertex A\nedge e A A extra tokens here",
      "garbage line\n",
      "vertex A\nvertex B\nedge e A B\nedge e2 B",
  };
  for (const char* text : bad) CHECK_THROWS_AS(parse_quotient_graph(text), ParseError);
}

TEST_CASE("random multigraphs: cycle rank always equals the betti number") {
  // deterministic LCG; loops and parallel edges on purpose
  unsigned long long s = 12345;
  auto rnd = [&](int n) {
    s = s * 6364136223846793005ull + 1442695040888963407ull;
    return static_cast<int>((s >> 33) % n);
  };
  for (int trial = 0; trial < 25; ++trial) {
    int nv = 2 + rnd(4);
    std::vector<std::string> vertices;
    for (int i = 0; i < nv; ++i) vertices.push_back("v" + std::to_string(i));
    std::vector<QuotientGraph::EdgeSpec> edges;
    // spanning path first so the graph is connected
    for (int i = 0; i + 1 < nv; ++i)
      edges.push_back({"p" + std::to_string(i), vertices[i], vertices[i + 1]});
    int extra = 1 + rnd(5);
    for (int i = 0; i < extra; ++i)
      edges.push_back({"x" + std::to_string(i), vertices[rnd(nv)], vertices[rnd(nv)]});
    QuotientGraph g = QuotientGraph::create(vertices, edges);
    HomologyBasis basis = homology_basis(g);
    CHECK(basis.dim() == g.betti_number());
    CHECK(cycle_rank(g, basis) == g.betti_number());
    for (const CyclePath& c : basis.cycles) CHECK(is_closed(g, c));
  }
}
