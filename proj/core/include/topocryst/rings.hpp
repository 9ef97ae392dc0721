#pragma once

#include <string>
#include <vector>

#include "topocryst/cochain.hpp"
#include "topocryst/graph.hpp"

namespace topocryst {

/// Simple closed non-backtracking circuit in the cover, anchored at a vertex
/// of cell 0. cells[i] is the cell of the walk's i-th vertex (cells[0] = 0);
/// the canonical key identifies the circuit independently of traversal
/// direction and starting point.
struct Ring {
  int start_class = 0;
  std::vector<int> edges;                       // directed quotient edges
  std::vector<std::vector<long long>> cells;    // per visited vertex
  std::string canonical_key;
  std::vector<int> canonical_edges;             // edges in canonical traversal
  int length() const { return static_cast<int>(edges.size()); }
};

/// Minimal length of a simple closed lifted walk, by iterative deepening of
/// a non-backtracking search from one representative per vertex class.
/// Throws DomainError when nothing is found up to the cap.
int girth(const BuildingBlock& b, int cap = 20);

/// All distinct unoriented simple lifted circuits of the given length
/// through (vertex, cell 0), deduplicated by canonical key and sorted.
std::vector<Ring> rings_through_vertex(const BuildingBlock& b, int vertex,
                                       int length);

/// Edge-id words (with '~' marking inverses) of the 15 reference decagons of
/// the laves net, anchored at vertex A.
const std::vector<std::vector<std::string>>& laves_reference_decagons();

/// Verifies, for the builtin laves block, that the 15 reference words sum to
/// zero under the cochain, lift to simple closed decagons, and exactly
/// exhaust the enumeration through their start vertex.
bool verify_listed_rings(const BuildingBlock& b);

/// Positions, edge lengths, and the sorted multiset of consecutive-edge
/// angles (degrees) of a lifted ring.
struct RingGeometry {
  std::vector<Vec<double>> positions;
  std::vector<double> edge_lengths;
  std::vector<double> angles_sorted;
};

RingGeometry ring_geometry(const Ring& r, const BuildingBlock& b);

/// Ring built by lifting an explicit edge-id word from (start of word, cell
/// 0). Throws DomainError if the lift is not a simple closed circuit.
Ring lift_word(const BuildingBlock& b, const std::vector<std::string>& word);

}  // namespace topocryst
