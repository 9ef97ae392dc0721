#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "topocryst/cochain.hpp"
#include "topocryst/graph.hpp"
#include "topocryst/lattice.hpp"

namespace topocryst {

/// Inclusive integer range of cell coordinates along one lattice axis.
struct WindowBounds {
  long long lo = 0;
  long long hi = 0;
  bool empty() const { return lo > hi; }
  long long size() const { return empty() ? 0 : hi - lo + 1; }
};

struct NetVertex {
  int cls = 0;                       // quotient vertex index
  std::vector<long long> cell;       // cell coordinate (period-lattice basis)
  Vec<double> pos;                   // derived: pos0(cls) + P * cell
};

struct NetBond {
  int from = 0;                      // vertex index
  int to = 0;                        // vertex index
  int dedge = 0;                     // generating primary directed edge
};

/// Finite window of the periodic net unfolded from a building block. Vertex
/// identity is the exact pair (class, cell); positions are derived data.
/// Vertices are sorted by (class, cell) and bonds by (from, to, edge), so
/// identical inputs build byte-identical exports.
class CrystalNet {
 public:
  CrystalNet() = default;

  const BuildingBlock& block() const { return block_; }
  const HomologyBasis& basis() const { return basis_; }
  const Lattice& period_lattice() const { return lattice_; }
  const std::vector<WindowBounds>& window() const { return window_; }
  const std::vector<NetVertex>& vertices() const { return vertices_; }
  const std::vector<NetBond>& bonds() const { return bonds_; }

  int vertex_index(int cls, const std::vector<long long>& cell) const;

  /// Exact position of a vertex; exact blocks only.
  Vec<Rational> exact_position(int vertex) const;
  /// Exact reference position of a quotient class (cell 0); exact blocks only.
  Vec<Rational> exact_class_position(int cls) const;

  /// Cell offset added when traversing a directed edge in the cover.
  const std::vector<long long>& voltage(int dedge) const { return voltages_[dedge]; }

  /// Copy of the net with all positions shifted by the given vector.
  CrystalNet translated(const Vec<Rational>& offset) const;

  /// Copy of the net with a replacement bond list (degrees recomputed).
  CrystalNet with_bonds(std::vector<NetBond> bonds) const;

  int degree(int vertex) const;

  friend CrystalNet build_net(const BuildingBlock& b, const HomologyBasis& h,
                              const std::vector<WindowBounds>& window);

 private:
  BuildingBlock block_;
  HomologyBasis basis_;
  Lattice lattice_;
  std::vector<WindowBounds> window_;
  std::vector<NetVertex> vertices_;
  std::vector<NetBond> bonds_;
  std::vector<std::vector<long long>> voltages_;
  std::vector<Vec<Rational>> class_pos_exact_;
  std::vector<Vec<double>> class_pos_;
  std::vector<int> vertex_degree_;
};

/// Unfolds the block over all (class, cell) pairs with cell in the window;
/// all bonds with both endpoints in the window are included.
CrystalNet build_net(const BuildingBlock& b, const HomologyBasis& h,
                     const std::vector<WindowBounds>& window);

/// Cube window [-n, n]^d.
std::vector<WindowBounds> cube_window(int n, int dim);

/// Remark-style vertex decomposition report for a net built from the laves
/// block: class A sits on 2 L_DT and classes B, C, D on its translates by
/// p1 = (0,1,1), p2 = (1,0,-1), p3 = (-1,-1,0).
struct DecompositionReport {
  bool pass = false;
  std::array<long long, 4> class_counts{0, 0, 0, 0};
  std::string detail;
};

DecompositionReport decompose_vertices(const CrystalNet& net);

/// Checks the four if-and-only-if incidence conditions of the diamond twin
/// (V0-Vi contact at equal offsets, V1-V2 at (-2,2,2), V2-V3 at (2,2,-2),
/// V3-V1 at (-2,-2,-2)) against the actual bond list, in both directions.
bool check_incidence_rules(const CrystalNet& net);

enum class NetFormat { xyz, obj, json };

void export_net(const CrystalNet& net, NetFormat format, std::ostream& os);
std::string export_net_string(const CrystalNet& net, NetFormat format);

/// Rebuilds a net from a JSON export and verifies the stored vertex and bond
/// tables against the rebuilt ones.
CrystalNet import_net_json(std::string_view text);

bool same_net(const CrystalNet& a, const CrystalNet& b);

}  // namespace topocryst
