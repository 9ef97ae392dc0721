#pragma once

#include <string>
#include <string_view>

#include "topocryst/errors.hpp"
#include "topocryst/linalg.hpp"

namespace topocryst {

/// Full-rank lattice given by a nonsingular basis matrix (columns are the
/// Z-basis vectors). Exact lattices carry a rational basis; float lattices
/// only a double one. A double basis is always available for reporting.
class Lattice {
 public:
  Lattice() = default;

  static Lattice from_rational(const Mat<Rational>& basis);
  static Lattice from_float(const Mat<double>& basis);

  int dim() const { return fbasis_.rows(); }
  bool exact() const { return exact_; }

  const Mat<Rational>& rational_basis() const;
  const Mat<double>& basis() const { return fbasis_; }

  Mat<Rational> rational_gram() const;
  Mat<double> gram() const;

  double covolume() const;  // |det basis|

  /// Exact membership test: x = B k with k integral. Exact lattices only.
  bool contains(const Vec<Rational>& x) const;

  /// Equality as subgroups of R^d, decided by mutual membership of basis
  /// vectors. Exact lattices only.
  bool equals(const Lattice& other) const;

  Lattice dual() const;  // basis = inverse transpose
  Lattice scaled(const Rational& s) const;
  Lattice scaled_float(double s) const;

  /// One basis vector per line, entries as rationals (exact) or 12
  /// significant digit decimals (float).
  std::string serialize() const;
  static Lattice parse(std::string_view text);

 private:
  bool exact_ = false;
  Mat<Rational> rbasis_;
  Mat<double> fbasis_;
};

/// Builtin lattices: "Z2", "Z3", "L_D" (face-centered cubic), "L_DT"
/// (body-centered cubic), "hex2" (regular triangular, float).
Lattice builtin_lattice(std::string_view name);

}  // namespace topocryst
