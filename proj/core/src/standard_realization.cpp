#include "topocryst/standard_realization.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#include "topocryst/errors.hpp"

namespace topocryst {

double energy(const BuildingBlock& b) {
  double e = 0;
  for (int rep : b.graph().primary_edges()) e += norm_sq(b.v(rep));
  return e;
}

Rational energy_exact(const BuildingBlock& b) {
  Rational e(0);
  for (int rep : b.graph().primary_edges()) e += norm_sq(b.v_exact(rep));
  return e;
}

RealizationProblem::RealizationProblem(const QuotientGraph& g) : graph_(g) {
  dim_ = g.betti_number();
  if (dim_ < 1)
    throw DomainError("graph has first Betti number 0: nothing to realize");
  rep_edges_ = g.primary_edges();
  reps_ = static_cast<int>(rep_edges_.size());

  incidence_ = Mat<double>(g.vertex_count(), reps_);
  for (int c = 0; c < reps_; ++c) {
    const DirectedEdge& e = g.dedge(rep_edges_[c]);
    if (e.origin == e.terminus) continue;
    incidence_(e.origin, c) += 1;
    incidence_(e.terminus, c) -= 1;
  }

  HomologyBasis basis = homology_basis(g);
  cycle_incidence_ = Mat<double>(dim_, reps_);
  for (int i = 0; i < dim_; ++i) {
    std::vector<long long> counts = edge_incidence(g, basis.cycles[i]);
    for (int c = 0; c < reps_; ++c)
      cycle_incidence_(i, c) = static_cast<double>(counts[c]);
  }

  // Laplacian B B^T is singular with the constant null vector; ground the
  // last vertex and invert the rest.
  Mat<double> lap = incidence_ * transpose(incidence_);
  const int n = g.vertex_count() - 1;
  if (n > 0) {
    Mat<double> reduced(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) reduced(i, j) = lap(i, j);
    auto inv = inverse(reduced, 1e-14);
    if (!inv) throw DomainError("grounded Laplacian is singular");
    laplacian_reduced_inv_ = *inv;
  } else {
    laplacian_reduced_inv_ = Mat<double>(0, 0);
  }
}

double RealizationProblem::energy_of(const Mat<double>& w) const {
  double e = 0;
  for (int i = 0; i < w.rows(); ++i)
    for (int j = 0; j < w.cols(); ++j) e += w(i, j) * w(i, j);
  return e;
}

Mat<double> RealizationProblem::period_matrix(const Mat<double>& w) const {
  return w * transpose(cycle_incidence_);
}

double RealizationProblem::covolume(const Mat<double>& w) const {
  return std::fabs(determinant(period_matrix(w), 0.0));
}

double RealizationProblem::objective(const Mat<double>& w) const {
  double c = covolume(w);
  if (c <= 0) throw DomainError("degenerate period lattice");
  return energy_of(w) / std::pow(c, 2.0 / dim_);
}

Mat<double> RealizationProblem::gradient(const Mat<double>& w) const {
  Mat<double> p = period_matrix(w);
  auto p_inv = inverse(p, 1e-14);
  if (!p_inv) throw DomainError("degenerate period lattice");
  double c = std::fabs(determinant(p, 0.0));
  double scale = std::pow(c, -2.0 / dim_);
  double e = energy_of(w);
  Mat<double> grad = 2.0 * scale * w;
  Mat<double> dcov = transpose(*p_inv) * cycle_incidence_;  // (1/C) dC/dw
  double k = -2.0 / dim_ * e * scale;
  return grad + k * dcov;
}

Mat<double> RealizationProblem::project_harmonic(const Mat<double>& w) const {
  const int n = graph_.vertex_count() - 1;
  if (n == 0) return w;  // single vertex: every cochain is harmonic
  Mat<double> defect = w * transpose(incidence_);  // d x |V|
  Mat<double> rhs(n, dim_);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < dim_; ++k) rhs(i, k) = defect(k, i);
  Mat<double> y = laplacian_reduced_inv_ * rhs;  // n x d
  Mat<double> m(dim_, graph_.vertex_count());
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < dim_; ++k) m(k, i) = y(i, k);
  return w - m * incidence_;
}

Mat<double> RealizationProblem::normalize_covolume(const Mat<double>& w) const {
  double c = covolume(w);
  if (c <= 1e-300) throw DomainError("degenerate period lattice");
  return std::pow(c, -1.0 / dim_) * w;
}

Mat<double> RealizationProblem::random_feasible_point(unsigned seed) const {
  // xorshift-style generator: identical streams on every platform
  unsigned long long state = 0x9e3779b97f4a7c15ull ^ (seed + 1);
  auto next_unit = [&]() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return 2.0 * (static_cast<double>(state >> 11) * 0x1.0p-53) - 1.0;
  };
  for (int attempt = 0; attempt < 64; ++attempt) {
    Mat<double> w(dim_, reps_);
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < reps_; ++j) w(i, j) = next_unit();
    w = project_harmonic(w);
    if (covolume(w) > 1e-8) return normalize_covolume(w);
  }
  throw DomainError("could not draw a nondegenerate harmonic start point");
}

double RealizationProblem::harmonic_residual(const Mat<double>& w) const {
  Mat<double> defect = w * transpose(incidence_);
  double r = 0;
  for (int i = 0; i < defect.rows(); ++i)
    for (int j = 0; j < defect.cols(); ++j) r = std::max(r, std::fabs(defect(i, j)));
  return r;
}

double RealizationProblem::frame_residual(const Mat<double>& w) const {
  Mat<double> s(dim_, dim_);
  for (int c = 0; c < reps_; ++c)
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j) s(i, j) += w(i, c) * w(j, c);
  double target = energy_of(w) / dim_;
  double r = 0;
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      r = std::max(r, std::fabs(s(i, j) - (i == j ? target : 0.0)));
  return r;
}

BuildingBlock RealizationProblem::to_block(const Mat<double>& w) const {
  std::map<std::string, Vec<double>> vectors;
  for (int c = 0; c < reps_; ++c) {
    Vec<double> v(dim_);
    for (int i = 0; i < dim_; ++i) v[i] = w(i, c);
    vectors[graph_.dedge(rep_edges_[c]).id] = v;
  }
  return BuildingBlock::from_float(graph_, vectors);
}

RealizationState standard_realization(const QuotientGraph& g,
                                      const RealizationOptions& options) {
  RealizationProblem problem(g);
  Mat<double> w = problem.random_feasible_point(options.seed);
  double step = 0.02;
  int iter = 0;

  // Constant-step projected gradient with residual-based backoff. Line
  // searches on the objective stall once improvements drop below double
  // resolution, while the frame residual itself contracts all the way down.
  for (; iter < options.max_iter; ++iter) {
    double fr = problem.frame_residual(w);
    if (fr <= options.tol && problem.harmonic_residual(w) <= options.tol) break;
    Mat<double> grad = problem.project_harmonic(problem.gradient(w));
    Mat<double> trial =
        problem.normalize_covolume(problem.project_harmonic(w - step * grad));
    double trial_obj = problem.objective(trial);
    if (!std::isfinite(trial_obj)) {
      step *= 0.5;
      continue;
    }
    double trial_fr = problem.frame_residual(trial);
    if (trial_fr > 4 * fr + 1e-12) {  // diverging: retry smaller
      step *= 0.5;
      if (step < 1e-18) break;
      continue;
    }
    w = trial;
    if (trial_fr < fr) step = std::min(step * 1.02, 0.25);
  }

  RealizationState state;
  state.harmonic_residual = problem.harmonic_residual(w);
  state.frame_residual = problem.frame_residual(w);
  state.iterations = iter;
  if (state.frame_residual > options.tol || state.harmonic_residual > options.tol)
    throw ConvergenceError(
        "standard realization did not converge (frame residual " +
            std::to_string(state.frame_residual) + ", harmonic residual " +
            std::to_string(state.harmonic_residual) + ")",
        state.harmonic_residual, state.frame_residual);
  state.block = problem.to_block(w);
  state.objective = problem.objective(w);
  return state;
}

// -- block similarity ---------------------------------------------------------

namespace {

/// Enumerates isomorphisms of directed-edge structures: a vertex bijection
/// plus a directed-edge bijection commuting with origin/terminus/involution.
/// The callback receives the dedge map and may return true to stop.
bool for_each_isomorphism(
    const QuotientGraph& a, const QuotientGraph& b,
    const std::function<bool(const std::vector<int>&)>& visit) {
  if (a.vertex_count() != b.vertex_count() || a.dedge_count() != b.dedge_count())
    return false;
  const int nv = a.vertex_count();
  std::vector<int> vmap(nv, -1);
  std::vector<bool> vused(nv, false);
  std::vector<int> emap(a.dedge_count(), -1);
  std::vector<bool> eused(b.dedge_count(), false);

  std::function<bool(int)> assign_edges;
  std::function<bool(int)> assign_vertices = [&](int v) -> bool {
    if (v == nv) return assign_edges(0);
    for (int w = 0; w < nv; ++w) {
      if (vused[w] || a.star(v).size() != b.star(w).size()) continue;
      vmap[v] = w;
      vused[w] = true;
      if (assign_vertices(v + 1)) return true;
      vused[w] = false;
    }
    vmap[v] = -1;
    return false;
  };

  const std::vector<int>& primaries = a.primary_edges();
  assign_edges = [&](int idx) -> bool {
    if (idx == static_cast<int>(primaries.size())) return visit(emap);
    int e = primaries[idx];
    const DirectedEdge& de = a.dedge(e);
    for (int f = 0; f < b.dedge_count(); ++f) {
      if (eused[f]) continue;
      const DirectedEdge& df = b.dedge(f);
      if (df.origin != vmap[de.origin] || df.terminus != vmap[de.terminus])
        continue;
      emap[e] = f;
      emap[a.inverse(e)] = b.inverse(f);
      eused[f] = true;
      eused[b.inverse(f)] = true;
      if (assign_edges(idx + 1)) return true;
      eused[f] = false;
      eused[b.inverse(f)] = false;
    }
    emap[e] = -1;
    emap[a.inverse(e)] = -1;
    return false;
  };

  return assign_vertices(0);
}

}  // namespace

bool similar_blocks(const BuildingBlock& a, const BuildingBlock& b, double tol) {
  if (a.dim() != b.dim()) return false;
  if (a.graph().vertex_count() != b.graph().vertex_count() ||
      a.graph().edge_count() != b.graph().edge_count())
    return false;
  const int d = a.dim();

  double ea = energy(a), eb = energy(b);
  if (ea <= 0 || eb <= 0) return false;
  BuildingBlock na = a.scaled_float(1.0 / std::sqrt(ea));
  BuildingBlock nb = b.scaled_float(1.0 / std::sqrt(eb));

  // invariant filter: sorted pairwise inner products of all edge vectors
  auto ip_multiset = [](const BuildingBlock& blk) {
    std::vector<double> ips;
    const int n = blk.graph().dedge_count();
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        ips.push_back(dot(blk.v(i), blk.v(j)));
    std::sort(ips.begin(), ips.end());
    return ips;
  };
  std::vector<double> ia = ip_multiset(na), ib = ip_multiset(nb);
  for (size_t i = 0; i < ia.size(); ++i)
    if (std::fabs(ia[i] - ib[i]) > 20 * tol) return false;

  // anchor frame: d linearly independent vectors of block a
  std::vector<int> frame;
  {
    std::vector<Vec<double>> rows;
    for (int e = 0; e < na.graph().dedge_count() &&
                    static_cast<int>(frame.size()) < d;
         ++e) {
      rows.push_back(na.v(e));
      Mat<double> m(static_cast<int>(rows.size()), d);
      for (size_t r = 0; r < rows.size(); ++r)
        for (int c = 0; c < d; ++c) m(static_cast<int>(r), c) = rows[r][c];
      if (rank(m, 1e-9) == static_cast<int>(rows.size()))
        frame.push_back(e);
      else
        rows.pop_back();
    }
  }
  if (static_cast<int>(frame.size()) < d) return false;
  Mat<double> fa(d, d);
  for (int c = 0; c < d; ++c)
    for (int r = 0; r < d; ++r) fa(r, c) = na.v(frame[c])[r];
  auto fa_inv = inverse(fa, 1e-12);
  if (!fa_inv) return false;

  return for_each_isomorphism(
      na.graph(), nb.graph(), [&](const std::vector<int>& emap) {
        Mat<double> fb(d, d);
        for (int c = 0; c < d; ++c)
          for (int r = 0; r < d; ++r) fb(r, c) = nb.v(emap[frame[c]])[r];
        Mat<double> q = fb * *fa_inv;
        Mat<double> qtq = transpose(q) * q;
        for (int i = 0; i < d; ++i)
          for (int j = 0; j < d; ++j)
            if (std::fabs(qtq(i, j) - (i == j ? 1.0 : 0.0)) > 50 * tol)
              return false;
        for (int e = 0; e < na.graph().dedge_count(); ++e) {
          Vec<double> mapped = q * na.v(e);
          if (!vec_within(mapped, nb.v(emap[e]), 50 * tol)) return false;
        }
        return true;
      });
}

}  // namespace topocryst
