#pragma once

#include <vector>

#include "topocryst/lattice_analysis.hpp"
#include "topocryst/net.hpp"

namespace topocryst {

/// Net-preserving congruence x -> linear x + translation, recorded together
/// with the induced permutation of quotient-vertex classes. Translations are
/// reduced modulo the period lattice (coefficients in [0, 1)).
struct NetIsometry {
  Mat<Rational> linear;
  Vec<Rational> translation;
  std::vector<int> class_permutation;
};

bool same_isometry(const NetIsometry& a, const NetIsometry& b);

/// All net isometries up to period-lattice translations, found by filtering
/// the point group of the period lattice against the quotient data. Exact
/// nets only.
std::vector<NetIsometry> net_isometries(const CrystalNet& net);

/// Composition reduced modulo the period lattice.
NetIsometry compose(const CrystalNet& net, const NetIsometry& a,
                    const NetIsometry& b);

/// Group of linear parts of net isometries.
PointGroup net_point_group(const CrystalNet& net);

/// True iff every ordered star of one vertex class can be carried onto every
/// ordered star of every other class by a net isometry.
bool is_strongly_isotropic(const CrystalNet& net);

/// True iff no net isometry reverses orientation.
bool is_chiral(const CrystalNet& net);

}  // namespace topocryst
