#include "topocryst/cochain.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>

namespace topocryst {

namespace {

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

}  // namespace

BuildingBlock BuildingBlock::from_rational(
    const QuotientGraph& g, const std::map<std::string, Vec<Rational>>& vectors) {
  BuildingBlock b;
  b.graph_ = g;
  b.exact_ = true;
  if (vectors.empty()) throw DomainError("block has no vectors");
  b.dim_ = static_cast<int>(vectors.begin()->second.size());
  b.vr_.assign(g.dedge_count(), {});
  for (int e : g.primary_edges()) {
    auto it = vectors.find(g.dedge(e).id);
    if (it == vectors.end())
      throw DomainError("missing vector for edge '" + g.dedge(e).id + "'");
    if (static_cast<int>(it->second.size()) != b.dim_)
      throw DomainError("vector dimension mismatch on edge '" + g.dedge(e).id +
                        "'");
    b.vr_[e] = it->second;
    b.vr_[g.inverse(e)] = negated(it->second);
  }
  if (static_cast<int>(vectors.size()) != g.edge_count())
    throw DomainError("vector given for unknown edge");
  b.vf_.resize(b.vr_.size());
  for (size_t i = 0; i < b.vr_.size(); ++i) b.vf_[i] = to_double(b.vr_[i]);
  return b;
}

BuildingBlock BuildingBlock::from_float(
    const QuotientGraph& g, const std::map<std::string, Vec<double>>& vectors) {
  BuildingBlock b;
  b.graph_ = g;
  b.exact_ = false;
  if (vectors.empty()) throw DomainError("block has no vectors");
  b.dim_ = static_cast<int>(vectors.begin()->second.size());
  b.vf_.assign(g.dedge_count(), {});
  for (int e : g.primary_edges()) {
    auto it = vectors.find(g.dedge(e).id);
    if (it == vectors.end())
      throw DomainError("missing vector for edge '" + g.dedge(e).id + "'");
    if (static_cast<int>(it->second.size()) != b.dim_)
      throw DomainError("vector dimension mismatch on edge '" + g.dedge(e).id +
                        "'");
    b.vf_[e] = it->second;
    b.vf_[g.inverse(e)] = negated(it->second);
  }
  if (static_cast<int>(vectors.size()) != g.edge_count())
    throw DomainError("vector given for unknown edge");
  return b;
}

const Vec<Rational>& BuildingBlock::v_exact(int dedge) const {
  if (!exact_) throw DomainError("block is not exact");
  return vr_[dedge];
}

BuildingBlock BuildingBlock::transformed(const Mat<Rational>& m) const {
  if (!exact_) throw DomainError("block is not exact");
  std::map<std::string, Vec<Rational>> vectors;
  for (int e : graph_.primary_edges())
    vectors[graph_.dedge(e).id] = m * vr_[e];
  return from_rational(graph_, vectors);
}

BuildingBlock BuildingBlock::transformed_float(const Mat<double>& m) const {
  std::map<std::string, Vec<double>> vectors;
  for (int e : graph_.primary_edges()) vectors[graph_.dedge(e).id] = m * vf_[e];
  return from_float(graph_, vectors);
}

BuildingBlock BuildingBlock::scaled_float(double s) const {
  std::map<std::string, Vec<double>> vectors;
  for (int e : graph_.primary_edges())
    vectors[graph_.dedge(e).id] = scaled(vf_[e], s);
  return from_float(graph_, vectors);
}

BuildingBlock builtin_block(std::string_view name) {
  using R = Rational;
  if (name == "laves") {
    QuotientGraph g = QuotientGraph::create({"A", "B", "C", "D"},
                                            {{"e1", "A", "D"},
                                             {"e2", "A", "B"},
                                             {"e3", "A", "C"},
                                             {"f1", "B", "C"},
                                             {"f2", "C", "D"},
                                             {"f3", "D", "B"}});
    std::map<std::string, Vec<R>> v;
    v["e1"] = {R(-1), R(-1), R(0)};
    v["e2"] = {R(0), R(1), R(1)};
    v["e3"] = {R(1), R(0), R(-1)};
    v["f1"] = {R(-1), R(1), R(0)};
    v["f2"] = {R(0), R(1), R(-1)};
    v["f3"] = {R(-1), R(0), R(-1)};
    return BuildingBlock::from_rational(g, v);
  }
  if (name == "diamond") {
    QuotientGraph g = QuotientGraph::create(
        {"A", "B"},
        {{"e1", "A", "B"}, {"e2", "A", "B"}, {"e3", "A", "B"}, {"e4", "A", "B"}});
    std::map<std::string, Vec<R>> v;
    v["e1"] = {R(-1), R(1), R(1)};
    v["e2"] = {R(1), R(-1), R(1)};
    v["e3"] = {R(-1), R(-1), R(-1)};
    v["e4"] = {R(1), R(1), R(-1)};
    return BuildingBlock::from_rational(g, v);
  }
  if (name == "honeycomb") {
    QuotientGraph g = QuotientGraph::create(
        {"A", "B"}, {{"e1", "A", "B"}, {"e2", "A", "B"}, {"e3", "A", "B"}});
    const double s = std::sqrt(3.0) / 2.0;
    std::map<std::string, Vec<double>> v;
    v["e1"] = {1.0, 0.0};
    v["e2"] = {-0.5, s};
    v["e3"] = {-0.5, -s};
    return BuildingBlock::from_float(g, v);
  }
  if (name == "cubic") {
    QuotientGraph g = QuotientGraph::create(
        {"A"}, {{"e1", "A", "A"}, {"e2", "A", "A"}, {"e3", "A", "A"}});
    std::map<std::string, Vec<R>> v;
    v["e1"] = {R(1), R(0), R(0)};
    v["e2"] = {R(0), R(1), R(0)};
    v["e3"] = {R(0), R(0), R(1)};
    return BuildingBlock::from_rational(g, v);
  }
  throw DomainError("unknown builtin block '" + std::string(name) + "'");
}

Vec<Rational> hat_v_exact(const BuildingBlock& b, const CyclePath& c) {
  if (!is_closed(b.graph(), c)) throw DomainError("path is not closed");
  Vec<Rational> sum(b.dim(), Rational(0));
  for (int e : c.edges) sum = add(sum, b.v_exact(e));
  return sum;
}

Vec<double> hat_v(const BuildingBlock& b, const CyclePath& c) {
  if (!is_closed(b.graph(), c)) throw DomainError("path is not closed");
  Vec<double> sum(b.dim(), 0.0);
  for (int e : c.edges) sum = add(sum, b.v(e));
  return sum;
}

bool is_harmonic(const BuildingBlock& b, double tol) {
  const QuotientGraph& g = b.graph();
  for (int x = 0; x < g.vertex_count(); ++x) {
    if (b.exact()) {
      Vec<Rational> sum(b.dim(), Rational(0));
      for (int e : g.star(x)) sum = add(sum, b.v_exact(e));
      for (const Rational& c : sum)
        if (!c.is_zero()) return false;
    } else {
      Vec<double> sum(b.dim(), 0.0);
      for (int e : g.star(x)) sum = add(sum, b.v(e));
      for (double c : sum)
        if (std::fabs(c) > tol) return false;
    }
  }
  return true;
}

Lattice period_lattice(const BuildingBlock& b, const HomologyBasis& h) {
  const int d = b.dim();
  if (h.dim() != d)
    throw DomainError("homology rank " + std::to_string(h.dim()) +
                      " does not match block dimension " + std::to_string(d));
  if (b.exact()) {
    Mat<Rational> basis(d, d);
    for (int c = 0; c < d; ++c) {
      Vec<Rational> img = hat_v_exact(b, h.cycles[c]);
      for (int r = 0; r < d; ++r) basis(r, c) = img[r];
    }
    if (determinant(basis, Rational(0)).is_zero())
      throw DomainError("non-periodic realization");
    return Lattice::from_rational(basis);
  }
  Mat<double> basis(d, d);
  for (int c = 0; c < d; ++c) {
    Vec<double> img = hat_v(b, h.cycles[c]);
    for (int r = 0; r < d; ++r) basis(r, c) = img[r];
  }
  if (std::fabs(determinant(basis, 0.0)) < 1e-12)
    throw DomainError("non-periodic realization");
  return Lattice::from_float(basis);
}

bool membership_identity_check(
    std::string_view name, const std::vector<std::array<long long, 3>>& samples) {
  const bool dt = name == "L_DT";
  if (!dt && name != "L_D")
    throw DomainError("unknown lattice identity '" + std::string(name) + "'");
  Lattice l = builtin_lattice(name);
  for (const auto& s : samples) {
    bool parity;
    if (dt)
      parity = (s[0] + s[1]) % 2 == 0 && (s[1] + s[2]) % 2 == 0 &&
               (s[2] + s[0]) % 2 == 0;
    else
      parity = (s[0] + s[1] + s[2]) % 2 == 0;
    Vec<Rational> x{Rational(s[0]), Rational(s[1]), Rational(s[2])};
    if (l.contains(x) != parity) return false;
  }
  return true;
}

std::string serialize_block(const BuildingBlock& b) {
  const QuotientGraph& g = b.graph();
  std::ostringstream os;
  os << "dim " << b.dim() << "\n";
  for (int v = 0; v < g.vertex_count(); ++v)
    os << "vertex " << g.vertex_id(v) << "\n";
  for (int e : g.primary_edges()) {
    const DirectedEdge& d = g.dedge(e);
    os << "edge " << d.id << " " << g.vertex_id(d.origin) << " "
       << g.vertex_id(d.terminus) << " v=";
    for (int i = 0; i < b.dim(); ++i) {
      os << " ";
      if (b.exact())
        os << b.v_exact(e)[i].str();
      else
        os << format_double(b.v(e)[i]);
    }
    os << "\n";
  }
  return os.str();
}

BuildingBlock parse_building_block(std::string_view text) {
  QgFile file = parse_qg_file(text);
  const QuotientGraph& g = file.graph;
  if (file.edge_vectors.empty())
    throw ParseError(0, "no 'v=' annotations: not a building block");
  for (int e : g.primary_edges())
    if (!file.edge_vectors.count(g.dedge(e).id))
      throw ParseError(0, "edge '" + g.dedge(e).id + "' has no vector");

  int dim = file.declared_dim;
  bool exact = true;
  for (const auto& [id, vals] : file.edge_vectors) {
    if (dim < 0) dim = static_cast<int>(vals.size());
    if (static_cast<int>(vals.size()) != dim)
      throw ParseError(0, "vector on edge '" + id + "' has " +
                              std::to_string(vals.size()) +
                              " components, expected " + std::to_string(dim));
    for (const auto& t : vals)
      if (t.find_first_of(".eE") != std::string::npos &&
          t.find('/') == std::string::npos)
        exact = false;
  }

  if (exact) {
    std::map<std::string, Vec<Rational>> vectors;
    for (const auto& [id, vals] : file.edge_vectors) {
      Vec<Rational> v;
      for (const auto& t : vals) {
        try {
          v.push_back(Rational::parse(t));
        } catch (const std::exception& e) {
          throw ParseError(0, "bad component '" + t + "' on edge '" + id +
                                  "': " + e.what());
        }
      }
      vectors[id] = std::move(v);
    }
    return BuildingBlock::from_rational(g, vectors);
  }
  std::map<std::string, Vec<double>> vectors;
  for (const auto& [id, vals] : file.edge_vectors) {
    Vec<double> v;
    for (const auto& t : vals) {
      try {
        if (t.find('/') != std::string::npos) {
          v.push_back(Rational::parse(t).to_double());
        } else {
          size_t used = 0;
          v.push_back(std::stod(t, &used));
          if (used != t.size()) throw std::invalid_argument("trailing characters");
        }
      } catch (const std::exception&) {
        throw ParseError(0, "bad component '" + t + "' on edge '" + id + "'");
      }
    }
    vectors[id] = std::move(v);
  }
  return BuildingBlock::from_float(g, vectors);
}

namespace {

// Fills positions by walking parent edges until every vertex is reached.
template <class V>
void fill_tree_positions(const QuotientGraph& g, const SpanningTree& tree,
                         std::vector<V>& pos,
                         const std::function<V(const V&, int)>& step) {
  std::vector<bool> have(g.vertex_count(), false);
  have[tree.root] = true;
  bool progress = true;
  while (progress) {
    progress = false;
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (have[v] || tree.parent_edge[v] < 0) continue;
      int e = tree.parent_edge[v];
      int p = g.dedge(e).origin;
      if (!have[p]) continue;
      pos[v] = step(pos[p], e);
      have[v] = true;
      progress = true;
    }
  }
}

}  // namespace

std::vector<Vec<double>> class_positions(const BuildingBlock& b) {
  const QuotientGraph& g = b.graph();
  SpanningTree tree = spanning_tree(g);
  std::vector<Vec<double>> pos(g.vertex_count(), Vec<double>(b.dim(), 0.0));
  fill_tree_positions<Vec<double>>(
      g, tree, pos,
      [&](const Vec<double>& p, int e) { return add(p, b.v(e)); });
  return pos;
}

std::vector<Vec<Rational>> class_positions_exact(const BuildingBlock& b) {
  const QuotientGraph& g = b.graph();
  SpanningTree tree = spanning_tree(g);
  std::vector<Vec<Rational>> pos(g.vertex_count(),
                                 Vec<Rational>(b.dim(), Rational(0)));
  fill_tree_positions<Vec<Rational>>(
      g, tree, pos,
      [&](const Vec<Rational>& p, int e) { return add(p, b.v_exact(e)); });
  return pos;
}

std::vector<std::vector<long long>> edge_voltages(const BuildingBlock& b,
                                                  const Lattice& period) {
  const QuotientGraph& g = b.graph();
  const int d = b.dim();
  std::vector<std::vector<long long>> w(g.dedge_count(),
                                        std::vector<long long>(d, 0));
  if (b.exact()) {
    std::vector<Vec<Rational>> pos = class_positions_exact(b);
    auto inv = inverse(period.rational_basis(), Rational(0));
    for (int e = 0; e < g.dedge_count(); ++e) {
      Vec<Rational> delta = add(
          sub(pos[g.dedge(e).origin], pos[g.dedge(e).terminus]), b.v_exact(e));
      Vec<Rational> k = *inv * delta;
      for (int i = 0; i < d; ++i) {
        if (!k[i].is_integer())
          throw DomainError("edge voltage is not integral (degenerate block)");
        w[e][i] = k[i].num();
      }
    }
    return w;
  }
  std::vector<Vec<double>> pos = class_positions(b);
  auto inv = inverse(period.basis(), 0.0);
  if (!inv) throw DomainError("period lattice is singular");
  for (int e = 0; e < g.dedge_count(); ++e) {
    Vec<double> delta =
        add(sub(pos[g.dedge(e).origin], pos[g.dedge(e).terminus]), b.v(e));
    Vec<double> k = *inv * delta;
    for (int i = 0; i < d; ++i) {
      double r = std::round(k[i]);
      if (std::fabs(k[i] - r) > 1e-6)
        throw DomainError("edge voltage is not integral (degenerate block)");
      w[e][i] = static_cast<long long>(r);
    }
  }
  return w;
}

}  // namespace topocryst
