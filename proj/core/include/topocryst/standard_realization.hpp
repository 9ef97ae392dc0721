#pragma once

#include "topocryst/cochain.hpp"
#include "topocryst/graph.hpp"
#include "topocryst/linalg.hpp"

namespace topocryst {

/// Energy of a block: sum of squared edge-vector norms over undirected edges.
double energy(const BuildingBlock& b);
Rational energy_exact(const BuildingBlock& b);

/// Optimization problem behind standard_realization, exposed so the
/// objective, its gradient, and the feasibility projections can be probed
/// directly. Columns of the state matrix are the vectors on the primary
/// edges; the feasible set is harmonic cochains whose period lattice has
/// unit covolume.
class RealizationProblem {
 public:
  explicit RealizationProblem(const QuotientGraph& g);

  int dim() const { return dim_; }
  int edge_reps() const { return reps_; }
  const QuotientGraph& graph() const { return graph_; }

  double energy_of(const Mat<double>& w) const;
  Mat<double> period_matrix(const Mat<double>& w) const;
  double covolume(const Mat<double>& w) const;

  /// Energy at unit covolume: E(w) / covolume(w)^(2/d).
  double objective(const Mat<double>& w) const;
  Mat<double> gradient(const Mat<double>& w) const;

  Mat<double> project_harmonic(const Mat<double>& w) const;
  Mat<double> normalize_covolume(const Mat<double>& w) const;

  /// Deterministic pseudo-random feasible point.
  Mat<double> random_feasible_point(unsigned seed) const;

  double harmonic_residual(const Mat<double>& w) const;
  double frame_residual(const Mat<double>& w) const;

  BuildingBlock to_block(const Mat<double>& w) const;

 private:
  QuotientGraph graph_;
  int dim_ = 0;
  int reps_ = 0;
  std::vector<int> rep_edges_;
  Mat<double> incidence_;        // |V| x m signed incidence (loops drop out)
  Mat<double> cycle_incidence_;  // d x m
  Mat<double> laplacian_reduced_inv_;
};

struct RealizationOptions {
  double tol = 1e-10;
  int max_iter = 100000;
  unsigned seed = 0;
};

struct RealizationState {
  BuildingBlock block;       // float mode, unit covolume
  double objective = 0;      // energy per unit covolume
  double harmonic_residual = 0;
  double frame_residual = 0;
  int iterations = 0;
};

/// Minimizes the energy over harmonic cochains at unit covolume by projected
/// gradient descent with step halving. The result satisfies vanishing vertex
/// sums and the tight-frame edge condition within tol; throws
/// ConvergenceError (carrying the last residuals) otherwise.
RealizationState standard_realization(const QuotientGraph& g,
                                      const RealizationOptions& options = {});

/// True iff, after scaling both blocks to unit total energy, some orthogonal
/// map combined with a quotient-graph isomorphism carries the vectors of one
/// block onto the other within tol.
bool similar_blocks(const BuildingBlock& a, const BuildingBlock& b, double tol);

}  // namespace topocryst
