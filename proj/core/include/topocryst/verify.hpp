#pragma once

#include <string>
#include <vector>

namespace topocryst {

struct CriterionResult {
  int index = 0;
  std::string name;
  bool pass = false;
  std::string detail;  // filled on failure (and for a few informative passes)
};

/// Runs the full verification suite over the builtin structures: period
/// lattices, the shortest-vector table, point groups, duality, ring counts
/// and reference decagons, the orthogonal-symmetry classifier, tight frames,
/// angle bounds, isotropy and chirality predicates, plane dihedral angles,
/// the vertex decomposition, the optimizer, and the independent brute-force
/// oracles. Deterministic: fixed seeds throughout.
std::vector<CriterionResult> run_acceptance_suite();

}  // namespace topocryst
