#pragma once

#include <optional>
#include <string>
#include <vector>

#include "topocryst/lattice.hpp"
#include "topocryst/linalg.hpp"

namespace topocryst {

/// All lattice vectors of minimal nonzero norm, with both the embedded
/// vectors and their integer coordinates in the input basis. Vectors are
/// sorted canonically and closed under negation.
struct ShortestVectorSet {
  bool exact = false;
  double alpha = 0;     // minimal norm
  double alpha_sq = 0;  // its square
  std::optional<Rational> alpha_sq_exact;
  std::vector<Vec<double>> vectors;
  std::vector<Vec<Rational>> vectors_exact;        // parallel to vectors (exact case)
  std::vector<std::vector<long long>> coefficients;  // parallel to vectors
  int count() const { return static_cast<int>(vectors.size()); }
};

ShortestVectorSet shortest_vectors(const Lattice& l);

/// Finite group of orthogonal maps preserving the lattice. coefficient[i] is
/// the integer matrix of elements[i] in the lattice basis.
struct PointGroup {
  bool exact = false;
  std::vector<Mat<double>> elements;
  std::vector<Mat<Rational>> elements_exact;  // parallel (exact case)
  std::vector<Mat<Rational>> coefficient;     // integer entries, both cases
  int order() const { return static_cast<int>(elements.size()); }
};

PointGroup point_group(const Lattice& l);

/// Equality of two point groups as sets of orthogonal matrices.
bool same_point_group(const PointGroup& a, const PointGroup& b, double tol = 1e-9);

Lattice dual_lattice(const Lattice& l);

enum class OsFailure { generates, transitive, irreducible };

struct OSVerdict {
  bool is_os = false;
  std::optional<OsFailure> failed_condition;
  std::string witness;
};

std::string to_string(OsFailure f);

/// Orthogonal symmetry: the shortest vectors generate the lattice, the point
/// group is transitive on them, and the action is irreducible (decided via
/// the symmetric commutant).
OSVerdict is_orthogonally_symmetric(const Lattice& l);

enum class LatticeClass3 { cubic, bcc, fcc, not_os };
enum class LatticeClass2 { square, triangular, not_os };

std::string to_string(LatticeClass3 c);
std::string to_string(LatticeClass2 c);

/// Decides which of the three orthogonally symmetric similarity classes a
/// 3-dimensional lattice belongs to, confirming by matching the normalized
/// shortest-vector set against the class representative.
LatticeClass3 classify_3d(const Lattice& l);
LatticeClass2 classify_2d(const Lattice& l);

struct TightFrameResult {
  double c = 0;
  double residual = 0;
  bool exact = false;
  std::optional<Rational> c_exact;
  std::optional<Rational> residual_exact;  // max |entry| of S - cI
};

/// Frame operator check: S = sum a a^T over the set, c = alpha^2 |K| / d.
TightFrameResult tight_frame_check(const ShortestVectorSet& k, int dim);

/// True iff every non-antipodal pair of shortest vectors subtends an angle
/// in [60, 120] degrees.
bool angle_bound_check(const ShortestVectorSet& k);

/// Root lattices: family 'A' (d >= 1, float basis from the hyperplane
/// re-expression) or 'D' (d >= 3, exact integer basis).
Lattice root_lattice(char family, int d);

/// True iff some orthogonal map carries one lattice onto the other.
bool orthogonally_equivalent(const Lattice& a, const Lattice& b,
                             double tol = 1e-9);

/// True iff the two equal-size vector sets match under some orthogonal map
/// after both are scaled to unit minimal norm.
bool similar_vector_sets(const std::vector<Vec<double>>& a,
                         const std::vector<Vec<double>>& b, double tol = 1e-9);

}  // namespace topocryst
