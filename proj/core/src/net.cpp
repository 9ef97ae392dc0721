#include "topocryst/net.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>
#include <tuple>

#include <json.hpp>

namespace topocryst {

namespace {

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

// Round a double through its 12-significant-digit text form so JSON numbers
// print deterministically.
double rounded12(double x) { return std::stod(format_double(x)); }

}  // namespace

std::vector<WindowBounds> cube_window(int n, int dim) {
  return std::vector<WindowBounds>(static_cast<size_t>(dim), WindowBounds{-n, n});
}

CrystalNet build_net(const BuildingBlock& b, const HomologyBasis& h,
                     const std::vector<WindowBounds>& window) {
  const QuotientGraph& g = b.graph();
  const int d = b.dim();
  if (static_cast<int>(window.size()) != d)
    throw DomainError("window must give one cell range per lattice axis");

  CrystalNet net;
  net.block_ = b;
  net.basis_ = h;
  net.lattice_ = period_lattice(b, h);
  net.window_ = window;
  net.voltages_ = edge_voltages(b, net.lattice_);
  net.class_pos_ = class_positions(b);
  if (b.exact()) net.class_pos_exact_ = class_positions_exact(b);

  // direct product of classes and in-window cells, sorted by (class, cell)
  bool empty = false;
  for (const auto& wdw : window)
    if (wdw.empty()) empty = true;
  if (!empty) {
    std::vector<long long> cell(d);
    for (int cls = 0; cls < g.vertex_count(); ++cls) {
      std::function<void(int)> fill = [&](int axis) {
        if (axis == d) {
          NetVertex v;
          v.cls = cls;
          v.cell = cell;
          v.pos = net.class_pos_[cls];
          for (int i = 0; i < d; ++i)
            for (int r = 0; r < d; ++r)
              v.pos[r] += net.lattice_.basis()(r, i) * static_cast<double>(cell[i]);
          net.vertices_.push_back(std::move(v));
          return;
        }
        for (long long c = window[axis].lo; c <= window[axis].hi; ++c) {
          cell[axis] = c;
          fill(axis + 1);
        }
      };
      fill(0);
    }
  }
  std::sort(net.vertices_.begin(), net.vertices_.end(),
            [](const NetVertex& a, const NetVertex& b) {
              if (a.cls != b.cls) return a.cls < b.cls;
              return a.cell < b.cell;
            });

  net.vertex_degree_.assign(net.vertices_.size(), 0);
  for (size_t i = 0; i < net.vertices_.size(); ++i) {
    const NetVertex& v = net.vertices_[i];
    for (int e : g.star(v.cls)) {
      std::vector<long long> target = v.cell;
      const auto& w = net.voltages_[e];
      for (int a = 0; a < d; ++a) target[a] += w[a];
      int j = net.vertex_index(g.dedge(e).terminus, target);
      if (j < 0) continue;
      ++net.vertex_degree_[i];
      if (g.dedge(e).primary)
        net.bonds_.push_back({static_cast<int>(i), j, e});
    }
  }
  std::sort(net.bonds_.begin(), net.bonds_.end(),
            [](const NetBond& a, const NetBond& b) {
              return std::tie(a.from, a.to, a.dedge) <
                     std::tie(b.from, b.to, b.dedge);
            });
  return net;
}

int CrystalNet::vertex_index(int cls, const std::vector<long long>& cell) const {
  NetVertex probe;
  probe.cls = cls;
  probe.cell = cell;
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), probe,
                             [](const NetVertex& a, const NetVertex& b) {
                               if (a.cls != b.cls) return a.cls < b.cls;
                               return a.cell < b.cell;
                             });
  if (it == vertices_.end() || it->cls != cls || it->cell != cell) return -1;
  return static_cast<int>(it - vertices_.begin());
}

Vec<Rational> CrystalNet::exact_position(int vertex) const {
  const NetVertex& v = vertices_[vertex];
  Vec<Rational> pos = exact_class_position(v.cls);
  const Mat<Rational>& p = lattice_.rational_basis();
  for (int i = 0; i < block_.dim(); ++i)
    for (int r = 0; r < block_.dim(); ++r)
      pos[r] += p(r, i) * Rational(v.cell[i]);
  return pos;
}

Vec<Rational> CrystalNet::exact_class_position(int cls) const {
  if (!block_.exact()) throw DomainError("net block is not exact");
  return class_pos_exact_[cls];
}

CrystalNet CrystalNet::translated(const Vec<Rational>& offset) const {
  CrystalNet net = *this;
  for (auto& pos : net.class_pos_exact_) pos = add(pos, offset);
  Vec<double> off = to_double(offset);
  for (auto& pos : net.class_pos_) pos = add(pos, off);
  for (auto& v : net.vertices_) v.pos = add(v.pos, off);
  return net;
}

CrystalNet CrystalNet::with_bonds(std::vector<NetBond> bonds) const {
  CrystalNet net = *this;
  std::sort(bonds.begin(), bonds.end(), [](const NetBond& a, const NetBond& b) {
    return std::tie(a.from, a.to, a.dedge) < std::tie(b.from, b.to, b.dedge);
  });
  net.bonds_ = std::move(bonds);
  net.vertex_degree_.assign(net.vertices_.size(), 0);
  for (const NetBond& b : net.bonds_) {
    ++net.vertex_degree_[b.from];
    if (b.to != b.from) ++net.vertex_degree_[b.to];
  }
  return net;
}

int CrystalNet::degree(int vertex) const { return vertex_degree_[vertex]; }

DecompositionReport decompose_vertices(const CrystalNet& net) {
  const BuildingBlock laves = builtin_block("laves");
  const BuildingBlock& b = net.block();
  if (!b.exact() || b.graph().vertex_count() != 4 ||
      b.graph().edge_count() != 6)
    throw DomainError("vertex decomposition requires a net built from the laves block");
  for (int e = 0; e < b.graph().dedge_count(); ++e) {
    int le = laves.graph().dedge_index(b.graph().dedge(e).id);
    if (le < 0 || !(b.v_exact(e) == laves.v_exact(le)))
      throw DomainError("vertex decomposition requires a net built from the laves block");
  }

  const Lattice two_ldt = builtin_lattice("L_DT").scaled(Rational(2));
  using R = Rational;
  const std::vector<Vec<R>> shifts = {
      {R(0), R(0), R(0)},   // A
      {R(0), R(1), R(1)},   // B = p1 + 2 L_DT
      {R(1), R(0), R(-1)},  // C = p2 + 2 L_DT
      {R(-1), R(-1), R(0)}  // D = p3 + 2 L_DT
  };

  DecompositionReport report;
  report.pass = true;
  for (size_t i = 0; i < net.vertices().size(); ++i) {
    const NetVertex& v = net.vertices()[i];
    report.class_counts[v.cls] += 1;
    Vec<R> pos = net.exact_position(static_cast<int>(i));
    if (!two_ldt.contains(sub(pos, shifts[v.cls]))) {
      report.pass = false;
      if (report.detail.empty())
        report.detail = "vertex of class '" +
                        b.graph().vertex_id(v.cls) +
                        "' is not on its coset of 2 L_DT";
    }
  }
  return report;
}

bool check_incidence_rules(const CrystalNet& net) {
  decompose_vertices(net);  // validates the source block
  using R = Rational;
  const std::vector<Vec<R>> p = {
      {R(0), R(0), R(0)}, {R(0), R(1), R(1)}, {R(1), R(0), R(-1)}, {R(-1), R(-1), R(0)}};
  // expected offsets alpha[hi] - alpha[lo] for class pairs keyed (lo, hi);
  // the (3, 1) contact at (-2,-2,-2) reads as (1, 3) at (2, 2, 2)
  const std::map<std::pair<int, int>, Vec<R>> pair_offset = {
      {{1, 2}, {R(-2), R(2), R(2)}},
      {{2, 3}, {R(2), R(2), R(-2)}},
      {{1, 3}, {R(2), R(2), R(2)}}};

  std::vector<std::pair<int, int>> bonds;
  for (const NetBond& bond : net.bonds())
    bonds.emplace_back(std::min(bond.from, bond.to), std::max(bond.from, bond.to));
  std::sort(bonds.begin(), bonds.end());

  auto bonded = [&](int i, int j) {
    auto key = std::make_pair(std::min(i, j), std::max(i, j));
    return std::binary_search(bonds.begin(), bonds.end(), key);
  };

  const int n = static_cast<int>(net.vertices().size());
  std::vector<Vec<R>> alpha(n);
  for (int i = 0; i < n; ++i)
    alpha[i] = sub(net.exact_position(i), p[net.vertices()[i].cls]);

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int ci = net.vertices()[i].cls, cj = net.vertices()[j].cls;
      if (ci == cj) {
        if (bonded(i, j)) return false;  // no same-class contacts
        continue;
      }
      int a = i, bdx = j;
      if (ci > cj) {
        std::swap(a, bdx);
        std::swap(ci, cj);
      }
      bool expected;
      if (ci == 0) {
        expected = alpha[a] == alpha[bdx];
      } else {
        auto it = pair_offset.find({ci, cj});
        expected = it != pair_offset.end() &&
                   alpha[bdx] == add(alpha[a], it->second);
      }
      if (expected != bonded(i, j)) return false;
    }
  return true;
}

namespace {

void export_xyz(const CrystalNet& net, std::ostream& os) {
  os << "# vertices " << net.vertices().size() << " bonds " << net.bonds().size()
     << " dim " << net.block().dim() << "\n";
  const QuotientGraph& g = net.block().graph();
  for (const NetVertex& v : net.vertices()) {
    os << g.vertex_id(v.cls);
    for (long long c : v.cell) os << " " << c;
    for (double x : v.pos) os << " " << format_double(x);
    os << "\n";
  }
  for (const NetBond& b : net.bonds()) os << "bond " << b.from << " " << b.to << "\n";
}

void export_obj(const CrystalNet& net, std::ostream& os) {
  os << "# crystal net, " << net.vertices().size() << " vertices, "
     << net.bonds().size() << " bonds\n";
  for (const NetVertex& v : net.vertices()) {
    os << "v";
    for (double x : v.pos) os << " " << format_double(x);
    for (size_t i = v.pos.size(); i < 3; ++i) os << " 0";
    os << "\n";
  }
  for (const NetBond& b : net.bonds())
    os << "l " << b.from + 1 << " " << b.to + 1 << "\n";
}

nlohmann::json net_to_json(const CrystalNet& net) {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["block"] = serialize_block(net.block());
  nlohmann::json window = nlohmann::json::array();
  for (const WindowBounds& w : net.window())
    window.push_back({{"lo", w.lo}, {"hi", w.hi}});
  j["window"] = window;
  nlohmann::json lattice = nlohmann::json::array();
  for (int c = 0; c < net.period_lattice().dim(); ++c) {
    nlohmann::json col = nlohmann::json::array();
    for (int r = 0; r < net.period_lattice().dim(); ++r)
      col.push_back(rounded12(net.period_lattice().basis()(r, c)));
    lattice.push_back(col);
  }
  j["period_lattice"] = lattice;
  const QuotientGraph& g = net.block().graph();
  nlohmann::json vertices = nlohmann::json::array();
  for (const NetVertex& v : net.vertices()) {
    nlohmann::json jv;
    jv["class"] = g.vertex_id(v.cls);
    jv["cell"] = v.cell;
    nlohmann::json pos = nlohmann::json::array();
    for (double x : v.pos) pos.push_back(rounded12(x));
    jv["position"] = pos;
    vertices.push_back(jv);
  }
  j["vertices"] = vertices;
  nlohmann::json bonds = nlohmann::json::array();
  for (const NetBond& b : net.bonds())
    bonds.push_back({{"from", b.from},
                     {"to", b.to},
                     {"edge", g.dedge(b.dedge).id}});
  j["bonds"] = bonds;
  return j;
}

}  // namespace

void export_net(const CrystalNet& net, NetFormat format, std::ostream& os) {
  switch (format) {
    case NetFormat::xyz:
      export_xyz(net, os);
      break;
    case NetFormat::obj:
      export_obj(net, os);
      break;
    case NetFormat::json:
      os << net_to_json(net).dump(2) << "\n";
      break;
  }
}

std::string export_net_string(const CrystalNet& net, NetFormat format) {
  std::ostringstream os;
  export_net(net, format, os);
  return os.str();
}

CrystalNet import_net_json(std::string_view text) {
  nlohmann::json j = nlohmann::json::parse(text);
  BuildingBlock block = parse_building_block(j.at("block").get<std::string>());
  std::vector<WindowBounds> window;
  for (const auto& w : j.at("window"))
    window.push_back({w.at("lo").get<long long>(), w.at("hi").get<long long>()});
  CrystalNet net = build_net(block, homology_basis(block.graph()), window);

  const auto& jv = j.at("vertices");
  if (jv.size() != net.vertices().size())
    throw ParseError(0, "net JSON vertex table does not match rebuilt net");
  const QuotientGraph& g = net.block().graph();
  for (size_t i = 0; i < jv.size(); ++i) {
    const NetVertex& v = net.vertices()[i];
    if (jv[i].at("class").get<std::string>() != g.vertex_id(v.cls) ||
        jv[i].at("cell").get<std::vector<long long>>() != v.cell)
      throw ParseError(0, "net JSON vertex table does not match rebuilt net");
  }
  const auto& jb = j.at("bonds");
  if (jb.size() != net.bonds().size())
    throw ParseError(0, "net JSON bond table does not match rebuilt net");
  for (size_t i = 0; i < jb.size(); ++i) {
    const NetBond& b = net.bonds()[i];
    if (jb[i].at("from").get<int>() != b.from ||
        jb[i].at("to").get<int>() != b.to ||
        jb[i].at("edge").get<std::string>() != g.dedge(b.dedge).id)
      throw ParseError(0, "net JSON bond table does not match rebuilt net");
  }
  return net;
}

bool same_net(const CrystalNet& a, const CrystalNet& b) {
  if (a.vertices().size() != b.vertices().size()) return false;
  if (a.bonds().size() != b.bonds().size()) return false;
  for (size_t i = 0; i < a.vertices().size(); ++i) {
    const NetVertex& u = a.vertices()[i];
    const NetVertex& v = b.vertices()[i];
    if (u.cls != v.cls || u.cell != v.cell) return false;
    for (size_t r = 0; r < u.pos.size(); ++r)
      if (std::fabs(u.pos[r] - v.pos[r]) > 1e-9) return false;
  }
  for (size_t i = 0; i < a.bonds().size(); ++i) {
    const NetBond& u = a.bonds()[i];
    const NetBond& v = b.bonds()[i];
    if (u.from != v.from || u.to != v.to || u.dedge != v.dedge) return false;
  }
  return true;
}

}  // namespace topocryst
