#include "topocryst/net_symmetry.hpp"

#include <algorithm>
#include <functional>
#include <optional>

namespace topocryst {

namespace {

struct QuotientData {
  const CrystalNet* net;
  const QuotientGraph* graph;
  int dim;
  Mat<Rational> period;
  Mat<Rational> period_inv;
  std::vector<Vec<Rational>> class_pos;
  // per class: sorted multiset of (edge vector, terminus class)
  std::vector<std::vector<std::pair<Vec<Rational>, int>>> star_data;

  explicit QuotientData(const CrystalNet& n) : net(&n), graph(&n.block().graph()) {
    const BuildingBlock& b = n.block();
    if (!b.exact())
      throw DomainError("net symmetry analysis requires an exact-vector net");
    dim = b.dim();
    period = n.period_lattice().rational_basis();
    period_inv = *inverse(period, Rational(0));
    for (int c = 0; c < graph->vertex_count(); ++c)
      class_pos.push_back(n.exact_class_position(c));
    star_data.resize(graph->vertex_count());
    for (int c = 0; c < graph->vertex_count(); ++c) {
      for (int e : graph->star(c))
        star_data[c].emplace_back(b.v_exact(e), graph->dedge(e).terminus);
      sort_star(star_data[c]);
    }
  }

  static void sort_star(std::vector<std::pair<Vec<Rational>, int>>& star) {
    std::sort(star.begin(), star.end(),
              [](const auto& a, const auto& b) {
                if (a.first != b.first) return lex_less(a.first, b.first);
                return a.second < b.second;
              });
  }

  bool lattice_coords_integral(const Vec<Rational>& x,
                               std::vector<long long>* k = nullptr) const {
    Vec<Rational> c = period_inv * x;
    for (const Rational& q : c)
      if (!q.is_integer()) return false;
    if (k) {
      k->clear();
      for (const Rational& q : c) k->push_back(q.num());
    }
    return true;
  }

  /// Class whose representative position is congruent to q mod the period
  /// lattice, or -1.
  int class_of_position(const Vec<Rational>& q) const {
    for (int c = 0; c < graph->vertex_count(); ++c)
      if (lattice_coords_integral(sub(q, class_pos[c]))) return c;
    return -1;
  }

  Vec<Rational> reduce_mod_lattice(const Vec<Rational>& t) const {
    Vec<Rational> c = period_inv * t;
    Vec<Rational> frac(dim, Rational(0));
    for (int i = 0; i < dim; ++i) {
      long long fl = c[i].num() >= 0 ? c[i].num() / c[i].den()
                                     : -((-c[i].num() + c[i].den() - 1) / c[i].den());
      frac[i] = c[i] - Rational(fl);
    }
    return period * frac;
  }

  /// Tries to extend the orthogonal map g to a net isometry whose class
  /// permutation sends anchor_from to anchor_to.
  std::optional<NetIsometry> extend(const Mat<Rational>& g, int anchor_from,
                                    int anchor_to) const {
    const int nc = graph->vertex_count();
    Vec<Rational> t = sub(class_pos[anchor_to], g * class_pos[anchor_from]);
    std::vector<int> sigma(nc, -1);
    std::vector<bool> hit(nc, false);
    for (int c = 0; c < nc; ++c) {
      int img = class_of_position(add(g * class_pos[c], t));
      if (img < 0 || hit[img]) return std::nullopt;
      sigma[c] = img;
      hit[img] = true;
    }
    if (sigma[anchor_from] != anchor_to) return std::nullopt;
    // bonds: the mapped star of c must equal the star of sigma(c), with
    // terminus classes following sigma
    for (int c = 0; c < nc; ++c) {
      std::vector<std::pair<Vec<Rational>, int>> mapped;
      for (int e : graph->star(c))
        mapped.emplace_back(g * net->block().v_exact(e),
                            sigma[graph->dedge(e).terminus]);
      sort_star(mapped);
      if (mapped != star_data[sigma[c]]) return std::nullopt;
    }
    NetIsometry iso;
    iso.linear = g;
    iso.translation = reduce_mod_lattice(t);
    iso.class_permutation = std::move(sigma);
    return iso;
  }
};

}  // namespace

bool same_isometry(const NetIsometry& a, const NetIsometry& b) {
  return a.linear == b.linear && a.translation == b.translation &&
         a.class_permutation == b.class_permutation;
}

std::vector<NetIsometry> net_isometries(const CrystalNet& net) {
  QuotientData data(net);
  PointGroup lattice_group = point_group(net.period_lattice());
  std::vector<NetIsometry> isometries;
  for (const Mat<Rational>& g : lattice_group.elements_exact)
    for (int anchor = 0; anchor < data.graph->vertex_count(); ++anchor)
      if (auto iso = data.extend(g, 0, anchor)) isometries.push_back(*iso);
  return isometries;
}

NetIsometry compose(const CrystalNet& net, const NetIsometry& a,
                    const NetIsometry& b) {
  QuotientData data(net);
  NetIsometry c;
  c.linear = a.linear * b.linear;
  c.translation = data.reduce_mod_lattice(add(a.linear * b.translation, a.translation));
  c.class_permutation.resize(b.class_permutation.size());
  for (size_t i = 0; i < b.class_permutation.size(); ++i)
    c.class_permutation[i] = a.class_permutation[b.class_permutation[i]];
  return c;
}

PointGroup net_point_group(const CrystalNet& net) {
  std::vector<NetIsometry> isometries = net_isometries(net);
  std::vector<Mat<Rational>> linear;
  for (const NetIsometry& iso : isometries) linear.push_back(iso.linear);
  std::sort(linear.begin(), linear.end(), [](const Mat<Rational>& a,
                                             const Mat<Rational>& b) {
    for (int i = 0; i < a.rows(); ++i)
      for (int j = 0; j < a.cols(); ++j) {
        if (a(i, j) < b(i, j)) return true;
        if (b(i, j) < a(i, j)) return false;
      }
    return false;
  });
  linear.erase(std::unique(linear.begin(), linear.end()), linear.end());

  PointGroup pg;
  pg.exact = true;
  const Mat<Rational>& basis = net.period_lattice().rational_basis();
  Mat<Rational> basis_inv = *inverse(basis, Rational(0));
  for (const Mat<Rational>& g : linear) {
    pg.elements_exact.push_back(g);
    pg.elements.push_back(to_double(g));
    pg.coefficient.push_back(basis_inv * g * basis);
  }
  return pg;
}

bool is_strongly_isotropic(const CrystalNet& net) {
  QuotientData data(net);
  const QuotientGraph& g = *data.graph;
  PointGroup lattice_group = point_group(net.period_lattice());

  for (int x = 0; x < g.vertex_count(); ++x) {
    for (int y = 0; y < g.vertex_count(); ++y) {
      const std::vector<int>& sx = g.star(x);
      std::vector<int> image = g.star(y);
      if (sx.size() != image.size()) return false;
      std::sort(image.begin(), image.end());
      do {
        // need a net isometry with sigma(x) = y carrying edge sx[i] to
        // an edge with vector v(image[i])
        bool carried = false;
        for (const Mat<Rational>& cand : lattice_group.elements_exact) {
          bool vectors_match = true;
          for (size_t i = 0; i < sx.size() && vectors_match; ++i)
            if (!(cand * net.block().v_exact(sx[i]) ==
                  net.block().v_exact(image[i])))
              vectors_match = false;
          if (!vectors_match) continue;
          if (data.extend(cand, x, y)) {
            carried = true;
            break;
          }
        }
        if (!carried) return false;
      } while (std::next_permutation(image.begin(), image.end()));
    }
  }
  return true;
}

bool is_chiral(const CrystalNet& net) {
  for (const NetIsometry& iso : net_isometries(net))
    if (determinant(iso.linear, Rational(0)) < Rational(0)) return false;
  return true;
}

}  // namespace topocryst
