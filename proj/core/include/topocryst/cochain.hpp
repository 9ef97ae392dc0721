#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "topocryst/graph.hpp"
#include "topocryst/lattice.hpp"
#include "topocryst/linalg.hpp"

namespace topocryst {

/// Vector-valued 1-cochain on a quotient graph: a d-vector per directed edge
/// with v(~e) = -v(e). Exact blocks store rational vectors (and a derived
/// double copy); float blocks only doubles.
class BuildingBlock {
 public:
  BuildingBlock() = default;

  /// Vectors given per primary edge id; inverses are filled by negation.
  static BuildingBlock from_rational(
      const QuotientGraph& g,
      const std::map<std::string, Vec<Rational>>& vectors);
  static BuildingBlock from_float(
      const QuotientGraph& g, const std::map<std::string, Vec<double>>& vectors);

  const QuotientGraph& graph() const { return graph_; }
  int dim() const { return dim_; }
  bool exact() const { return exact_; }

  const Vec<Rational>& v_exact(int dedge) const;
  const Vec<double>& v(int dedge) const { return vf_[dedge]; }

  /// Block with every vector mapped through m (m must be d x d).
  BuildingBlock transformed(const Mat<Rational>& m) const;
  BuildingBlock transformed_float(const Mat<double>& m) const;
  BuildingBlock scaled_float(double s) const;

 private:
  QuotientGraph graph_;
  int dim_ = 0;
  bool exact_ = false;
  std::vector<Vec<Rational>> vr_;
  std::vector<Vec<double>> vf_;
};

/// The four builtin blocks: "laves" (K4, the diamond twin seed), "diamond"
/// (dipole-4), "honeycomb" (theta graph, float mode), "cubic" (bouquet of
/// three loops).
BuildingBlock builtin_block(std::string_view name);

/// Sum of v over a closed path: the homology homomorphism evaluated on [c].
Vec<Rational> hat_v_exact(const BuildingBlock& b, const CyclePath& c);
Vec<double> hat_v(const BuildingBlock& b, const CyclePath& c);

/// True iff the star vectors sum to zero at every vertex.
bool is_harmonic(const BuildingBlock& b, double tol = 1e-9);

/// Lattice spanned by the images of the basis cycles. Throws DomainError
/// ("non-periodic realization") when the image has rank < d.
Lattice period_lattice(const BuildingBlock& b, const HomologyBasis& h);

/// Checks, for each integer sample, that membership decided by solving
/// against the builtin basis agrees with the coordinate parity identity.
/// name is "L_DT" (pairwise coordinate sums even) or "L_D" (total sum even).
bool membership_identity_check(std::string_view name,
                               const std::vector<std::array<long long, 3>>& samples);

std::string serialize_block(const BuildingBlock& b);
BuildingBlock parse_building_block(std::string_view text);

/// Reference position per quotient vertex: the sum of edge vectors along the
/// deterministic spanning tree from the root class.
std::vector<Vec<double>> class_positions(const BuildingBlock& b);
std::vector<Vec<Rational>> class_positions_exact(const BuildingBlock& b);

/// Cell offset per directed edge: traversing e from (x, cell) reaches
/// (t(e), cell + voltage(e)) in the cover, with cells in period-lattice
/// coordinates. Zero on tree edges, a signed unit vector on cotree edges of
/// the deterministic tree.
std::vector<std::vector<long long>> edge_voltages(const BuildingBlock& b,
                                                  const Lattice& period);

}  // namespace topocryst
