#include "topocryst/lattice_analysis.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <type_traits>

namespace topocryst {

namespace {

constexpr double kFloatEps = 1e-9;
const double kPi = std::acos(-1.0);

double gram_scale(const Mat<double>& g) {
  double m = 0;
  for (int i = 0; i < g.rows(); ++i)
    for (int j = 0; j < g.cols(); ++j) m = std::max(m, std::fabs(g(i, j)));
  return 1.0 + m;
}

/// Fincke-Pohst style enumeration of all nonzero integer vectors k with
/// k^T G k <= bound + slack, where G = L D L^T. Candidate ranges are taken
/// from double arithmetic with a +-1 margin; the acceptance test per level is
/// done in S, so the enumeration is complete and (for S = Rational) exact.
template <class S>
void enumerate_ellipsoid(
    const Mat<S>& l, const Vec<S>& d, const S& bound, const S& slack,
    const std::function<void(const std::vector<long long>&, const S&)>& emit) {
  const int n = static_cast<int>(d.size());
  std::vector<long long> k(n, 0);
  const S limit = bound + slack;

  std::function<void(int, const S&)> descend = [&](int i, const S& partial) {
    if (i < 0) {
      bool zero = true;
      for (long long v : k)
        if (v != 0) zero = false;
      if (!zero) emit(k, partial);
      return;
    }
    S c(0);
    for (int j = i + 1; j < n; ++j) c += l(j, i) * S(k[j]);
    S rem = limit - partial;
    if (rem < S(0)) return;
    double radius =
        std::sqrt(std::max(0.0, scalar::to_double(rem) / scalar::to_double(d[i])));
    double center = -scalar::to_double(c);
    long long lo = static_cast<long long>(std::floor(center - radius)) - 1;
    long long hi = static_cast<long long>(std::ceil(center + radius)) + 1;
    for (long long v = lo; v <= hi; ++v) {
      S y = S(v) + c;
      S term = d[i] * y * y;
      if (partial + term <= limit) {
        k[i] = v;
        descend(i - 1, partial + term);
      }
    }
    k[i] = 0;
  };
  descend(n - 1, S(0));
}

template <class S>
struct EnumerationResult {
  std::vector<std::vector<long long>> coefficients;
  std::vector<S> norms_sq;
};

template <class S>
EnumerationResult<S> vectors_within(const Mat<S>& gram, const S& bound,
                                    const S& slack, const S& pd_tol) {
  auto factored = ldlt(gram, pd_tol);
  if (!factored) throw DomainError("Gram matrix is not positive definite");
  EnumerationResult<S> result;
  enumerate_ellipsoid<S>(factored->first, factored->second, bound, slack,
                         [&](const std::vector<long long>& k, const S& q) {
                           result.coefficients.push_back(k);
                           result.norms_sq.push_back(q);
                         });
  return result;
}

template <class S>
Vec<S> embed(const Mat<S>& basis, const std::vector<long long>& k) {
  Vec<S> x(basis.rows(), S(0));
  for (int c = 0; c < basis.cols(); ++c) {
    if (k[c] == 0) continue;
    for (int r = 0; r < basis.rows(); ++r) x[r] += basis(r, c) * S(k[c]);
  }
  return x;
}

template <class S>
struct ShortestRaw {
  S alpha_sq;
  std::vector<std::vector<long long>> coefficients;
};

template <class S>
ShortestRaw<S> shortest_raw(const Mat<S>& gram, const S& slack, const S& pd_tol) {
  S bound = gram(0, 0);
  for (int i = 1; i < gram.rows(); ++i) bound = std::min(bound, gram(i, i));
  EnumerationResult<S> all = vectors_within(gram, bound, slack, pd_tol);
  if (all.coefficients.empty())
    throw DomainError("shortest-vector enumeration found nothing (bad basis?)");
  S qmin = all.norms_sq.front();
  for (const S& q : all.norms_sq) qmin = std::min(qmin, q);
  ShortestRaw<S> out;
  out.alpha_sq = qmin;
  for (size_t i = 0; i < all.coefficients.size(); ++i)
    if (all.norms_sq[i] <= qmin + slack)
      out.coefficients.push_back(all.coefficients[i]);
  return out;
}

bool coeff_less(const std::vector<long long>& a, const std::vector<long long>& b) {
  return a < b;
}

// Integer column-elimination span test: do the columns generate all of Z^d?
bool integer_span_is_full(std::vector<std::vector<long long>> cols, int d,
                          int* rank_out) {
  int r = 0;
  const int n = static_cast<int>(cols.size());
  for (int row = 0; row < d; ++row) {
    // gcd-eliminate entries of this row across columns >= r
    while (true) {
      int best = -1;
      for (int c = r; c < n; ++c) {
        if (cols[c][row] == 0) continue;
        if (best < 0 || std::llabs(cols[c][row]) < std::llabs(cols[best][row]))
          best = c;
      }
      if (best < 0) break;
      std::swap(cols[best], cols[r]);
      bool reduced_all = true;
      for (int c = r + 1; c < n; ++c) {
        if (cols[c][row] == 0) continue;
        long long q = cols[c][row] / cols[r][row];
        for (int i = 0; i < d; ++i) cols[c][i] -= q * cols[r][i];
        if (cols[c][row] != 0) reduced_all = false;
      }
      if (reduced_all) break;
    }
    if (r < n && cols[r][row] != 0) {
      if (std::llabs(cols[r][row]) != 1) {
        if (rank_out) *rank_out = -1;
        return false;  // proper sublattice
      }
      ++r;
    }
  }
  if (rank_out) *rank_out = r;
  return r == d;
}

// -- point group (coefficient-side search) ----------------------------------

template <class S>
std::vector<Mat<Rational>> automorphism_search(const Mat<S>& gram, const S& slack,
                                               const S& pd_tol) {
  const int d = gram.rows();
  // candidate images of basis vector i: lattice vectors on its norm shell
  std::vector<std::vector<std::vector<long long>>> shells(d);
  for (int i = 0; i < d; ++i) {
    EnumerationResult<S> res = vectors_within(gram, gram(i, i), slack, pd_tol);
    for (size_t j = 0; j < res.coefficients.size(); ++j)
      if (scalar::within(res.norms_sq[j] - gram(i, i), slack))
        shells[i].push_back(res.coefficients[j]);
    std::sort(shells[i].begin(), shells[i].end(), coeff_less);
  }

  auto gram_ip = [&](const std::vector<long long>& a,
                     const std::vector<long long>& b) {
    S s(0);
    for (int i = 0; i < d; ++i) {
      if (a[i] == 0) continue;
      for (int j = 0; j < d; ++j) {
        if (b[j] == 0) continue;
        s += S(a[i]) * gram(i, j) * S(b[j]);
      }
    }
    return s;
  };

  std::vector<Mat<Rational>> found;
  std::vector<std::vector<long long>> chosen(d);
  std::function<void(int)> place = [&](int i) {
    if (i == d) {
      Mat<Rational> u(d, d);
      for (int c = 0; c < d; ++c)
        for (int r = 0; r < d; ++r) u(r, c) = Rational(chosen[c][r]);
      found.push_back(std::move(u));
      return;
    }
    for (const auto& cand : shells[i]) {
      bool ok = true;
      for (int j = 0; j < i && ok; ++j)
        if (!scalar::within(gram_ip(cand, chosen[j]) - gram(i, j), slack))
          ok = false;
      if (!ok) continue;
      chosen[i] = cand;
      place(i + 1);
    }
  };
  place(0);
  return found;
}

std::vector<long long> apply_integer(const Mat<Rational>& u,
                                     const std::vector<long long>& k) {
  std::vector<long long> out(k.size(), 0);
  for (size_t r = 0; r < k.size(); ++r) {
    Rational s(0);
    for (size_t c = 0; c < k.size(); ++c)
      s += u(static_cast<int>(r), static_cast<int>(c)) * Rational(k[c]);
    out[r] = s.num();  // integral by construction
  }
  return out;
}

bool mat_close(const Mat<double>& a, const Mat<double>& b, double tol) {
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (std::fabs(a(i, j) - b(i, j)) > tol) return false;
  return true;
}

bool mat_lex_less(const Mat<double>& a, const Mat<double>& b) {
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (a(i, j) < b(i, j)) return true;
      if (b(i, j) < a(i, j)) return false;
    }
  return false;
}

// Symmetric commutant dimension in coefficient space: solutions N of
//   N U = U N for all U in the group,  G N symmetric.
// Dimension 1 (scalars only) is equivalent to irreducibility of the action.
template <class S>
int symmetric_commutant_dim(const Mat<S>& gram,
                            const std::vector<Mat<Rational>>& coeff_elements,
                            const S& tol) {
  const int d = gram.rows();
  const int unknowns = d * d;
  std::vector<Vec<S>> rows;
  auto idx = [d](int r, int c) { return r * d + c; };
  for (const Mat<Rational>& u_rat : coeff_elements) {
    Mat<S> u(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        if constexpr (std::is_same_v<S, Rational>)
          u(i, j) = u_rat(i, j);
        else
          u(i, j) = u_rat(i, j).to_double();
      }
    // (N U - U N)(r, c) = 0
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) {
        Vec<S> row(unknowns, S(0));
        for (int k = 0; k < d; ++k) {
          row[idx(r, k)] += u(k, c);
          row[idx(k, c)] -= u(r, k);
        }
        rows.push_back(std::move(row));
      }
  }
  // (G N)(r, c) - (G N)(c, r) = 0
  for (int r = 0; r < d; ++r)
    for (int c = r + 1; c < d; ++c) {
      Vec<S> row(unknowns, S(0));
      for (int k = 0; k < d; ++k) {
        row[idx(k, c)] += gram(r, k);
        row[idx(k, r)] -= gram(c, k);
      }
      rows.push_back(std::move(row));
    }
  Mat<S> system(static_cast<int>(rows.size()), unknowns);
  for (size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < unknowns; ++j) system(static_cast<int>(i), j) = rows[i][j];
  return unknowns - rank(system, tol);
}

std::vector<Vec<double>> reference_kset_3d(int count) {
  std::vector<Vec<double>> k;
  if (count == 6) {
    for (int i = 0; i < 3; ++i)
      for (int s : {1, -1}) {
        Vec<double> v(3, 0.0);
        v[i] = s;
        k.push_back(v);
      }
  } else if (count == 8) {
    for (int sx : {1, -1})
      for (int sy : {1, -1})
        for (int sz : {1, -1}) k.push_back({double(sx), double(sy), double(sz)});
  } else if (count == 12) {
    for (int zero = 0; zero < 3; ++zero)
      for (int s1 : {1, -1})
        for (int s2 : {1, -1}) {
          Vec<double> v(3, 0.0);
          v[(zero + 1) % 3] = s1;
          v[(zero + 2) % 3] = s2;
          k.push_back(v);
        }
  }
  return k;
}

std::vector<Vec<double>> reference_kset_2d(int count) {
  std::vector<Vec<double>> k;
  if (count == 4) {
    k = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  } else if (count == 6) {
    for (int i = 0; i < 6; ++i) {
      double a = kPi / 3.0 * i;
      k.push_back({std::cos(a), std::sin(a)});
    }
  }
  return k;
}

}  // namespace

ShortestVectorSet shortest_vectors(const Lattice& l) {
  ShortestVectorSet out;
  out.exact = l.exact();
  if (l.exact()) {
    Mat<Rational> gram = l.rational_gram();
    ShortestRaw<Rational> raw = shortest_raw<Rational>(gram, Rational(0), Rational(0));
    out.alpha_sq_exact = raw.alpha_sq;
    out.alpha_sq = raw.alpha_sq.to_double();
    std::sort(raw.coefficients.begin(), raw.coefficients.end(), coeff_less);
    for (const auto& k : raw.coefficients) {
      out.coefficients.push_back(k);
      Vec<Rational> x = embed(l.rational_basis(), k);
      out.vectors.push_back(to_double(x));
      out.vectors_exact.push_back(std::move(x));
    }
  } else {
    Mat<double> gram = l.gram();
    double slack = kFloatEps * gram_scale(gram);
    ShortestRaw<double> raw = shortest_raw<double>(gram, slack, 1e-14);
    out.alpha_sq = raw.alpha_sq;
    std::sort(raw.coefficients.begin(), raw.coefficients.end(), coeff_less);
    for (const auto& k : raw.coefficients) {
      out.coefficients.push_back(k);
      out.vectors.push_back(embed(l.basis(), k));
    }
  }
  out.alpha = std::sqrt(out.alpha_sq);
  // sort by embedded vector for a canonical order
  std::vector<size_t> perm(out.vectors.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](size_t a, size_t b) {
    return lex_less(out.vectors[a], out.vectors[b]);
  });
  ShortestVectorSet sorted = out;
  for (size_t i = 0; i < perm.size(); ++i) {
    sorted.vectors[i] = out.vectors[perm[i]];
    sorted.coefficients[i] = out.coefficients[perm[i]];
    if (out.exact) sorted.vectors_exact[i] = out.vectors_exact[perm[i]];
  }
  if (sorted.count() % 2 != 0)
    throw DomainError("shortest-vector set not closed under negation (bug)");
  if (l.dim() == 3 && sorted.count() > 12)
    throw DomainError("more than 12 shortest vectors in dimension 3 (bug)");
  return sorted;
}

PointGroup point_group(const Lattice& l) {
  PointGroup pg;
  pg.exact = l.exact();
  if (l.exact()) {
    pg.coefficient =
        automorphism_search<Rational>(l.rational_gram(), Rational(0), Rational(0));
    auto inv = inverse(l.rational_basis(), Rational(0));
    for (const auto& u : pg.coefficient) {
      Mat<Rational> g = l.rational_basis() * u * *inv;
      pg.elements.push_back(to_double(g));
      pg.elements_exact.push_back(std::move(g));
    }
  } else {
    Mat<double> gram = l.gram();
    double slack = kFloatEps * gram_scale(gram);
    auto inv = inverse(l.basis(), 0.0);
    std::vector<Mat<Rational>> kept;
    for (const auto& u : automorphism_search<double>(gram, slack, 1e-14)) {
      Mat<double> g = l.basis() * to_double(u) * *inv;
      // keep only candidates that are orthogonal at float tolerance
      if (!mat_close(transpose(g) * g, Mat<double>::identity(l.dim()), 1e-9))
        continue;
      pg.elements.push_back(std::move(g));
      kept.push_back(u);
    }
    pg.coefficient = std::move(kept);
  }
  // canonical order by element entries
  std::vector<size_t> perm(pg.elements.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](size_t a, size_t b) {
    return mat_lex_less(pg.elements[a], pg.elements[b]);
  });
  PointGroup sorted;
  sorted.exact = pg.exact;
  for (size_t i : perm) {
    sorted.elements.push_back(pg.elements[i]);
    sorted.coefficient.push_back(pg.coefficient[i]);
    if (pg.exact) sorted.elements_exact.push_back(pg.elements_exact[i]);
  }
  return sorted;
}

bool same_point_group(const PointGroup& a, const PointGroup& b, double tol) {
  if (a.order() != b.order()) return false;
  std::vector<bool> used(b.elements.size(), false);
  for (const auto& ga : a.elements) {
    bool matched = false;
    for (size_t j = 0; j < b.elements.size(); ++j) {
      if (used[j]) continue;
      if (mat_close(ga, b.elements[j], tol)) {
        used[j] = true;
        matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

Lattice dual_lattice(const Lattice& l) { return l.dual(); }

std::string to_string(OsFailure f) {
  switch (f) {
    case OsFailure::generates:
      return "generates";
    case OsFailure::transitive:
      return "transitive";
    case OsFailure::irreducible:
      return "irreducible";
  }
  return "?";
}

std::string to_string(LatticeClass3 c) {
  switch (c) {
    case LatticeClass3::cubic:
      return "cubic";
    case LatticeClass3::bcc:
      return "bcc";
    case LatticeClass3::fcc:
      return "fcc";
    case LatticeClass3::not_os:
      return "not_os";
  }
  return "?";
}

std::string to_string(LatticeClass2 c) {
  switch (c) {
    case LatticeClass2::square:
      return "square";
    case LatticeClass2::triangular:
      return "triangular";
    case LatticeClass2::not_os:
      return "not_os";
  }
  return "?";
}

OSVerdict is_orthogonally_symmetric(const Lattice& l) {
  OSVerdict verdict;
  ShortestVectorSet k = shortest_vectors(l);

  int span_rank = 0;
  if (!integer_span_is_full(k.coefficients, l.dim(), &span_rank)) {
    verdict.is_os = false;
    verdict.failed_condition = OsFailure::generates;
    verdict.witness =
        span_rank < 0
            ? "shortest vectors generate a proper finite-index sublattice"
            : "shortest vectors span only rank " + std::to_string(span_rank);
    return verdict;
  }

  PointGroup g = point_group(l);
  std::vector<std::vector<long long>> orbit;
  for (const auto& u : g.coefficient)
    orbit.push_back(apply_integer(u, k.coefficients.front()));
  std::sort(orbit.begin(), orbit.end());
  orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
  std::vector<std::vector<long long>> target = k.coefficients;
  std::sort(target.begin(), target.end());
  if (orbit != target) {
    verdict.is_os = false;
    verdict.failed_condition = OsFailure::transitive;
    verdict.witness = "point-group orbit of one shortest vector has size " +
                      std::to_string(orbit.size()) + " of " +
                      std::to_string(target.size());
    return verdict;
  }

  int dim;
  if (l.exact())
    dim = symmetric_commutant_dim<Rational>(l.rational_gram(), g.coefficient,
                                            Rational(0));
  else
    dim = symmetric_commutant_dim<double>(l.gram(), g.coefficient,
                                          kFloatEps * gram_scale(l.gram()));
  if (dim != 1) {
    verdict.is_os = false;
    verdict.failed_condition = OsFailure::irreducible;
    verdict.witness =
        "symmetric commutant has dimension " + std::to_string(dim);
    return verdict;
  }

  verdict.is_os = true;
  return verdict;
}

bool similar_vector_sets(const std::vector<Vec<double>>& a_in,
                         const std::vector<Vec<double>>& b_in, double tol) {
  if (a_in.size() != b_in.size() || a_in.empty()) return false;
  const int d = static_cast<int>(a_in.front().size());
  if (static_cast<int>(b_in.front().size()) != d) return false;

  auto normalized = [](const std::vector<Vec<double>>& v) {
    double amin = std::sqrt(norm_sq(v.front()));
    for (const auto& x : v) amin = std::min(amin, std::sqrt(norm_sq(x)));
    std::vector<Vec<double>> out;
    for (const auto& x : v) out.push_back(scaled(x, 1.0 / amin));
    return out;
  };
  std::vector<Vec<double>> a = normalized(a_in);
  std::vector<Vec<double>> b = normalized(b_in);

  // cheap invariant filter: sorted multiset of pairwise inner products
  auto ip_multiset = [](const std::vector<Vec<double>>& v) {
    std::vector<double> ips;
    for (size_t i = 0; i < v.size(); ++i)
      for (size_t j = i + 1; j < v.size(); ++j) ips.push_back(dot(v[i], v[j]));
    std::sort(ips.begin(), ips.end());
    return ips;
  };
  std::vector<double> ia = ip_multiset(a);
  std::vector<double> ib = ip_multiset(b);
  for (size_t i = 0; i < ia.size(); ++i)
    if (std::fabs(ia[i] - ib[i]) > 10 * tol) return false;

  // anchor a full-rank frame in a
  std::vector<int> frame;
  {
    std::vector<Vec<double>> rows;
    for (size_t i = 0; i < a.size() && static_cast<int>(frame.size()) < d; ++i) {
      rows.push_back(a[i]);
      Mat<double> m(static_cast<int>(rows.size()), d);
      for (size_t r = 0; r < rows.size(); ++r)
        for (int c = 0; c < d; ++c) m(static_cast<int>(r), c) = rows[r][c];
      if (rank(m, 1e-9) == static_cast<int>(rows.size()))
        frame.push_back(static_cast<int>(i));
      else
        rows.pop_back();
    }
  }
  if (static_cast<int>(frame.size()) < d) return false;

  Mat<double> fa(d, d);
  for (int c = 0; c < d; ++c)
    for (int r = 0; r < d; ++r) fa(r, c) = a[frame[c]][r];
  auto fa_inv = inverse(fa, 1e-12);
  if (!fa_inv) return false;

  // try every target tuple in b whose pairwise inner products match
  std::vector<int> pick(d, -1);
  std::function<bool(int)> attempt = [&](int i) -> bool {
    if (i == d) {
      Mat<double> fb(d, d);
      for (int c = 0; c < d; ++c)
        for (int r = 0; r < d; ++r) fb(r, c) = b[pick[c]][r];
      Mat<double> g = fb * *fa_inv;
      if (!mat_close(transpose(g) * g, Mat<double>::identity(d), 50 * tol))
        return false;
      std::vector<bool> used(b.size(), false);
      for (const auto& x : a) {
        Vec<double> gx = g * x;
        bool found = false;
        for (size_t j = 0; j < b.size(); ++j) {
          if (used[j]) continue;
          if (vec_within(gx, b[j], 50 * tol)) {
            used[j] = true;
            found = true;
            break;
          }
        }
        if (!found) return false;
      }
      return true;
    }
    for (size_t cand = 0; cand < b.size(); ++cand) {
      bool ok = std::fabs(dot(b[cand], b[cand]) - dot(a[frame[i]], a[frame[i]])) <=
                10 * tol;
      for (int j = 0; j < i && ok; ++j)
        if (std::fabs(dot(b[cand], b[pick[j]]) - dot(a[frame[i]], a[frame[j]])) >
            10 * tol)
          ok = false;
      if (!ok) continue;
      pick[i] = static_cast<int>(cand);
      if (attempt(i + 1)) return true;
    }
    return false;
  };
  return attempt(0);
}

LatticeClass3 classify_3d(const Lattice& l) {
  if (l.dim() != 3) throw DomainError("classify_3d requires a 3-dimensional lattice");
  if (!is_orthogonally_symmetric(l).is_os) return LatticeClass3::not_os;
  ShortestVectorSet k = shortest_vectors(l);
  LatticeClass3 cls;
  switch (k.count()) {
    case 6:
      cls = LatticeClass3::cubic;
      break;
    case 8:
      cls = LatticeClass3::bcc;
      break;
    case 12:
      cls = LatticeClass3::fcc;
      break;
    default:
      return LatticeClass3::not_os;
  }
  if (!similar_vector_sets(k.vectors, reference_kset_3d(k.count())))
    return LatticeClass3::not_os;
  return cls;
}

LatticeClass2 classify_2d(const Lattice& l) {
  if (l.dim() != 2) throw DomainError("classify_2d requires a 2-dimensional lattice");
  if (!is_orthogonally_symmetric(l).is_os) return LatticeClass2::not_os;
  ShortestVectorSet k = shortest_vectors(l);
  LatticeClass2 cls;
  switch (k.count()) {
    case 4:
      cls = LatticeClass2::square;
      break;
    case 6:
      cls = LatticeClass2::triangular;
      break;
    default:
      return LatticeClass2::not_os;
  }
  if (!similar_vector_sets(k.vectors, reference_kset_2d(k.count())))
    return LatticeClass2::not_os;
  return cls;
}

TightFrameResult tight_frame_check(const ShortestVectorSet& k, int dim) {
  if (k.vectors.empty()) throw DomainError("empty shortest-vector set");
  TightFrameResult out;
  out.exact = k.exact;
  if (k.exact) {
    Rational c = *k.alpha_sq_exact * Rational(k.count()) / Rational(dim);
    Mat<Rational> s(dim, dim);
    for (const auto& a : k.vectors_exact)
      for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) s(i, j) += a[i] * a[j];
    Rational residual(0);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) {
        Rational e = s(i, j) - (i == j ? c : Rational(0));
        residual = std::max(residual, abs(e));
      }
    out.c_exact = c;
    out.residual_exact = residual;
    out.c = c.to_double();
    out.residual = residual.to_double();
  } else {
    double c = k.alpha_sq * k.count() / dim;
    Mat<double> s(dim, dim);
    for (const auto& a : k.vectors)
      for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) s(i, j) += a[i] * a[j];
    double residual = 0;
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        residual = std::max(residual, std::fabs(s(i, j) - (i == j ? c : 0.0)));
    out.c = c;
    out.residual = residual;
  }
  return out;
}

bool angle_bound_check(const ShortestVectorSet& k) {
  const size_t n = k.vectors.size();
  if (k.exact) {
    const Rational a4 = *k.alpha_sq_exact * *k.alpha_sq_exact;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j) {
        if (k.vectors_exact[i] == negated(k.vectors_exact[j])) continue;
        Rational ip = dot(k.vectors_exact[i], k.vectors_exact[j]);
        if (Rational(4) * ip * ip > a4) return false;
      }
    return true;
  }
  const double a4 = k.alpha_sq * k.alpha_sq;
  const double slack = kFloatEps * (1 + a4);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      if (vec_within(k.vectors[i], negated(k.vectors[j]),
                     kFloatEps * (1 + k.alpha)))
        continue;
      double ip = dot(k.vectors[i], k.vectors[j]);
      if (4 * ip * ip > a4 + slack) return false;
    }
  return true;
}

Lattice root_lattice(char family, int d) {
  if (family == 'D') {
    if (d < 3) throw DomainError("root lattice D_d requires d >= 3");
    Mat<Rational> basis(d, d);
    for (int c = 0; c + 1 < d; ++c) {
      basis(c, c) = Rational(1);
      basis(c + 1, c) = Rational(-1);
    }
    basis(d - 2, d - 1) = Rational(1);
    basis(d - 1, d - 1) = Rational(1);
    return Lattice::from_rational(basis);
  }
  if (family == 'A') {
    if (d < 1) throw DomainError("root lattice A_d requires d >= 1");
    // Gram of the simple roots e_i - e_{i+1} in the hyperplane, re-expressed
    // in d coordinates through its Cholesky factor.
    Mat<double> gram(d, d);
    for (int i = 0; i < d; ++i) {
      gram(i, i) = 2.0;
      if (i + 1 < d) {
        gram(i, i + 1) = -1.0;
        gram(i + 1, i) = -1.0;
      }
    }
    auto f = ldlt(gram, 1e-12);
    Mat<double> basis(d, d);
    for (int c = 0; c < d; ++c)
      for (int r = 0; r < d; ++r)
        basis(r, c) = f->first(c, r) * std::sqrt(f->second[r]);
    return Lattice::from_float(basis);
  }
  throw DomainError(std::string("unknown root lattice family '") + family + "'");
}

bool orthogonally_equivalent(const Lattice& a, const Lattice& b, double tol) {
  if (a.dim() != b.dim()) return false;
  if (std::fabs(a.covolume() - b.covolume()) >
      tol * (1 + std::fabs(a.covolume())))
    return false;
  ShortestVectorSet ka = shortest_vectors(a);
  ShortestVectorSet kb = shortest_vectors(b);
  if (ka.count() != kb.count()) return false;
  if (std::fabs(ka.alpha - kb.alpha) > tol * (1 + ka.alpha)) return false;
  int ra = 0, rb = 0;
  if (!integer_span_is_full(ka.coefficients, a.dim(), &ra) ||
      !integer_span_is_full(kb.coefficients, b.dim(), &rb))
    throw DomainError(
        "orthogonal equivalence test requires the shortest vectors to "
        "generate both lattices");
  return similar_vector_sets(ka.vectors, kb.vectors, tol);
}

}  // namespace topocryst
