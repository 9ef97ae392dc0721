#include "topocryst/rings.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <map>
#include <sstream>
#include <thread>

namespace topocryst {

namespace {

struct CoverVertex {
  int cls;
  std::vector<long long> cell;
  friend bool operator==(const CoverVertex&, const CoverVertex&) = default;
  friend auto operator<=>(const CoverVertex&, const CoverVertex&) = default;
};

struct CoverWalk {
  const QuotientGraph* graph;
  const std::vector<std::vector<long long>>* voltages;

  CoverVertex step(const CoverVertex& v, int e) const {
    CoverVertex w;
    w.cls = graph->dedge(e).terminus;
    w.cell = v.cell;
    const auto& volt = (*voltages)[e];
    for (size_t i = 0; i < w.cell.size(); ++i) w.cell[i] += volt[i];
    return w;
  }
};

struct SerializedWalk {
  std::string key;
  std::vector<int> edges;
};

SerializedWalk serialize_walk(const QuotientGraph& g,
                              const std::vector<CoverVertex>& vs,
                              const std::vector<int>& es, int start,
                              bool forward) {
  const int n = static_cast<int>(vs.size());
  SerializedWalk out;
  std::ostringstream os;
  auto put_vertex = [&](const CoverVertex& v) {
    os << v.cls;
    for (long long c : v.cell) os << "," << c;
    os << ";";
  };
  put_vertex(vs[start]);
  for (int k = 0; k < n; ++k) {
    int e;
    int next;
    if (forward) {
      e = es[(start + k) % n];
      next = (start + k + 1) % n;
    } else {
      e = g.inverse(es[(start - k - 1 + 2 * n) % n]);
      next = (start - k - 1 + 2 * n) % n;
    }
    os << g.dedge(e).id << ">";
    put_vertex(vs[next]);
    out.edges.push_back(e);
  }
  out.key = os.str();
  return out;
}

/// Basepoint- and orientation-free canonical form: rotate the circuit to
/// start at the minimal (class, cell) vertex, serialize both directions,
/// keep the smaller.
SerializedWalk canonical_walk(const QuotientGraph& g,
                              const std::vector<CoverVertex>& vs,
                              const std::vector<int>& es) {
  int start = 0;
  for (size_t i = 1; i < vs.size(); ++i)
    if (vs[i] < vs[start]) start = static_cast<int>(i);
  SerializedWalk fwd = serialize_walk(g, vs, es, start, true);
  SerializedWalk bwd = serialize_walk(g, vs, es, start, false);
  return fwd.key < bwd.key ? fwd : bwd;
}

Ring make_ring(const QuotientGraph& g, const std::vector<CoverVertex>& vs,
               const std::vector<int>& es) {
  Ring r;
  r.start_class = vs.front().cls;
  r.edges = es;
  for (const CoverVertex& v : vs) r.cells.push_back(v.cell);
  SerializedWalk canonical = canonical_walk(g, vs, es);
  r.canonical_key = std::move(canonical.key);
  r.canonical_edges = std::move(canonical.edges);
  return r;
}

int thread_cap() {
  unsigned hw = std::thread::hardware_concurrency();
  int cap = hw == 0 ? 1 : static_cast<int>(std::min(hw, 8u));
  if (const char* env = std::getenv("TOPOCRYST_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 1) cap = std::min<long>(cap, v);
  }
  return cap;
}

struct CoverSearch {
  const BuildingBlock& block;
  CoverWalk walk;
  std::vector<std::vector<long long>> voltages;

  explicit CoverSearch(const BuildingBlock& b) : block(b) {
    HomologyBasis h = homology_basis(b.graph());
    voltages = edge_voltages(b, period_lattice(b, h));
    walk = {&b.graph(), &voltages};
  }

  /// Enumerates simple non-backtracking closed walks of the given length
  /// from (cls, 0), restricted to a fixed first edge when first >= 0.
  void closed_walks(int cls, int length, int first,
                    const std::function<void(const std::vector<CoverVertex>&,
                                             const std::vector<int>&)>& emit) const {
    const QuotientGraph& g = block.graph();
    CoverVertex origin{cls, std::vector<long long>(block.dim(), 0)};
    std::vector<CoverVertex> vs{origin};
    std::vector<int> es;

    std::function<void()> descend = [&]() {
      const int depth = static_cast<int>(es.size());
      const CoverVertex at = vs.back();  // by value: vs reallocates below
      for (int e : g.star(at.cls)) {
        if (depth == 0 && first >= 0 && e != first) continue;
        if (depth > 0 && e == g.inverse(es.back())) continue;
        CoverVertex next = walk.step(at, e);
        if (depth + 1 == length) {
          if (next == origin && e != g.inverse(es.front())) {
            es.push_back(e);
            emit(vs, es);
            es.pop_back();
          }
          continue;
        }
        bool seen = false;
        for (const CoverVertex& v : vs)
          if (v == next) {
            seen = true;
            break;
          }
        if (seen) continue;
        vs.push_back(next);
        es.push_back(e);
        descend();
        es.pop_back();
        vs.pop_back();
      }
    };
    if (length >= 2) descend();
  }

  bool has_closed_walk(int cls, int length) const {
    bool found = false;
    closed_walks(cls, length, -1,
                 [&](const auto&, const auto&) { found = true; });
    return found;
  }
};

}  // namespace

int girth(const BuildingBlock& b, int cap) {
  CoverSearch search(b);
  for (int length = 2; length <= cap; ++length)
    for (int cls = 0; cls < b.graph().vertex_count(); ++cls)
      if (search.has_closed_walk(cls, length)) return length;
  throw DomainError("no closed circuit of length <= " + std::to_string(cap));
}

std::vector<Ring> rings_through_vertex(const BuildingBlock& b, int vertex,
                                       int length) {
  if (vertex < 0 || vertex >= b.graph().vertex_count())
    throw DomainError("vertex index out of range");
  CoverSearch search(b);
  const std::vector<int>& star = b.graph().star(vertex);

  const int workers =
      std::max(1, std::min<int>(thread_cap(), static_cast<int>(star.size())));
  std::vector<std::map<std::string, Ring>> partial(workers);
  auto run = [&](int w) {
    for (size_t i = w; i < star.size(); i += workers) {
      search.closed_walks(vertex, length, star[i],
                          [&](const std::vector<CoverVertex>& vs,
                              const std::vector<int>& es) {
                            Ring r = make_ring(b.graph(), vs, es);
                            partial[w].emplace(r.canonical_key, std::move(r));
                          });
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) threads.emplace_back(run, w);
    for (auto& t : threads) t.join();
  }

  std::map<std::string, Ring> merged;
  for (auto& m : partial)
    for (auto& [key, ring] : m) merged.emplace(key, std::move(ring));
  std::vector<Ring> rings;
  for (auto& [key, ring] : merged) rings.push_back(std::move(ring));
  return rings;
}

const std::vector<std::vector<std::string>>& laves_reference_decagons() {
  static const std::vector<std::vector<std::string>> words = {
      {"e1", "f3", "~e2", "e3", "f2", "~e1", "e2", "~f3", "~f2", "~e3"},
      {"e1", "~f2", "~e3", "e2", "~f3", "~e1", "e3", "f2", "f3", "~e2"},
      {"e2", "~f3", "~e1", "e3", "f2", "f3", "~e2", "e1", "~f2", "~e3"},
      {"e1", "f3", "~e2", "e3", "~f1", "~f3", "~e1", "e2", "f1", "~e3"},
      {"e1", "f3", "f1", "~e3", "e2", "~f3", "~e1", "e3", "~f1", "~e2"},
      {"e2", "~f3", "~e1", "e3", "~f1", "~e2", "e1", "f3", "f1", "~e3"},
      {"e1", "~f2", "~e3", "e2", "f1", "f2", "~e1", "e3", "~f1", "~e2"},
      {"e1", "~f2", "~f1", "~e2", "e3", "f2", "~e1", "e2", "f1", "~e3"},
      {"e2", "f1", "f2", "~e1", "e3", "~f1", "~e2", "e1", "~f2", "~e3"},
      {"e1", "f3", "f1", "f2", "~e1", "e3", "~f1", "~f3", "~f2", "~e3"},
      {"e1", "~f2", "~f1", "~f3", "~e1", "e3", "f2", "f3", "f1", "~e3"},
      {"e1", "f3", "f1", "f2", "~e1", "e2", "~f3", "~f2", "~f1", "~e2"},
      {"e1", "~f2", "~f1", "~f3", "~e1", "e2", "f1", "f2", "f3", "~e2"},
      {"e2", "f1", "f2", "f3", "~e2", "e3", "~f1", "~f3", "~f2", "~e3"},
      {"e2", "~f3", "~f2", "~f1", "~e2", "e3", "f2", "f3", "f1", "~e3"}};
  return words;
}

Ring lift_word(const BuildingBlock& b, const std::vector<std::string>& word) {
  const QuotientGraph& g = b.graph();
  CyclePath path = path_from_ids(g, word);
  if (!is_closed(g, path)) throw DomainError("word is not a closed path");
  CoverSearch search(b);
  CoverVertex at{g.dedge(path.edges.front()).origin,
                 std::vector<long long>(b.dim(), 0)};
  std::vector<CoverVertex> vs{at};
  for (size_t i = 0; i < path.edges.size(); ++i) {
    at = search.walk.step(at, path.edges[i]);
    if (i + 1 < path.edges.size()) vs.push_back(at);
  }
  if (!(at == vs.front())) throw DomainError("word does not lift to a closed circuit");
  for (size_t i = 0; i < vs.size(); ++i)
    for (size_t j = i + 1; j < vs.size(); ++j)
      if (vs[i] == vs[j]) throw DomainError("lifted circuit is not simple");
  for (size_t i = 0; i < path.edges.size(); ++i) {
    int next = path.edges[(i + 1) % path.edges.size()];
    if (next == g.inverse(path.edges[i]))
      throw DomainError("lifted circuit backtracks");
  }
  return make_ring(g, vs, path.edges);
}

bool verify_listed_rings(const BuildingBlock& b) {
  const BuildingBlock laves = builtin_block("laves");
  if (!b.exact() || b.graph().vertex_count() != 4 || b.graph().edge_count() != 6)
    throw DomainError("reference decagons are defined for the laves block");
  for (int e = 0; e < b.graph().dedge_count(); ++e) {
    int le = laves.graph().dedge_index(b.graph().dedge(e).id);
    if (le < 0 || !(b.v_exact(e) == laves.v_exact(le)))
      throw DomainError("reference decagons are defined for the laves block");
  }

  std::map<std::string, Ring> listed;
  for (const auto& word : laves_reference_decagons()) {
    CyclePath path = path_from_ids(b.graph(), word);
    Vec<Rational> sum = hat_v_exact(b, path);
    for (const Rational& c : sum)
      if (!c.is_zero()) return false;  // must be homologous to zero
    Ring r = lift_word(b, word);
    if (r.length() != 10) return false;
    listed.emplace(r.canonical_key, std::move(r));
  }
  if (listed.size() != 15) return false;  // pairwise distinct

  int start = b.graph().vertex_index("A");
  std::vector<Ring> enumerated = rings_through_vertex(b, start, 10);
  if (enumerated.size() != listed.size()) return false;
  for (const Ring& r : enumerated)
    if (!listed.count(r.canonical_key)) return false;
  return true;
}

RingGeometry ring_geometry(const Ring& r, const BuildingBlock& b) {
  RingGeometry geo;
  std::vector<Vec<double>> pos0 = class_positions(b);

  Vec<double> at = pos0[r.start_class];
  geo.positions.push_back(at);
  for (size_t i = 0; i + 1 < r.edges.size(); ++i) {
    at = add(at, b.v(r.edges[i]));
    geo.positions.push_back(at);
  }
  const int n = r.length();
  for (int i = 0; i < n; ++i)
    geo.edge_lengths.push_back(std::sqrt(norm_sq(b.v(r.edges[i]))));
  const double rad2deg = 180.0 / std::acos(-1.0);
  for (int i = 0; i < n; ++i) {
    // angle at the vertex between arriving edge i-1 and leaving edge i
    Vec<double> back = negated(b.v(r.edges[(i - 1 + n) % n]));
    Vec<double> ahead = b.v(r.edges[i]);
    double c = dot(back, ahead) /
               (std::sqrt(norm_sq(back)) * std::sqrt(norm_sq(ahead)));
    c = std::max(-1.0, std::min(1.0, c));
    geo.angles_sorted.push_back(std::acos(c) * rad2deg);
  }
  std::sort(geo.angles_sorted.begin(), geo.angles_sorted.end());
  return geo;
}

}  // namespace topocryst
