#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "topocryst/errors.hpp"

namespace topocryst {

/// Half-edge record. Every undirected edge contributes two directed edges
/// that are each other's inverse; a loop contributes two distinct directed
/// edges at the same vertex.
struct DirectedEdge {
  std::string id;
  int origin = -1;
  int terminus = -1;
  int inverse = -1;
  bool primary = false;  // declared orientation (id without the '~' prefix)
};

/// Finite connected multigraph with an explicit fixed-point-free edge
/// involution. Loops and parallel edges are allowed. Vertices and directed
/// edges are indexed in lexicographic id order; all values are immutable
/// after construction.
class QuotientGraph {
 public:
  struct EdgeSpec {
    std::string id;
    std::string from;
    std::string to;
  };

  QuotientGraph() = default;

  /// Builds a graph from declared vertices and undirected edges; the inverse
  /// directed edge of "e" is synthesized with id "~e". Throws DomainError on
  /// duplicate ids, dangling endpoints, or a disconnected graph.
  static QuotientGraph create(const std::vector<std::string>& vertices,
                              const std::vector<EdgeSpec>& edges);

  int vertex_count() const { return static_cast<int>(vertex_ids_.size()); }
  int dedge_count() const { return static_cast<int>(dedges_.size()); }
  int edge_count() const { return dedge_count() / 2; }

  const std::string& vertex_id(int v) const { return vertex_ids_[v]; }
  int vertex_index(std::string_view id) const;

  const DirectedEdge& dedge(int e) const { return dedges_[e]; }
  int dedge_index(std::string_view id) const;
  int inverse(int e) const { return dedges_[e].inverse; }

  /// E_x: directed edges with origin x, in index order.
  const std::vector<int>& star(int v) const { return stars_[v]; }

  /// Primary directed edges (one representative per undirected edge).
  const std::vector<int>& primary_edges() const { return primary_; }

  int betti_number() const { return edge_count() - vertex_count() + 1; }

  std::string serialize() const;

 private:
  std::vector<std::string> vertex_ids_;
  std::vector<DirectedEdge> dedges_;
  std::vector<std::vector<int>> stars_;
  std::vector<int> primary_;
  std::map<std::string, int, std::less<>> vertex_index_;
  std::map<std::string, int, std::less<>> dedge_index_;
};

/// Edge path; consecutive when t(e_i) = o(e_{i+1}), closed when it also
/// returns to its starting vertex.
struct CyclePath {
  std::vector<int> edges;
};

bool is_consecutive(const QuotientGraph& g, const CyclePath& p);
bool is_closed(const QuotientGraph& g, const CyclePath& p);

/// Parses a path from edge ids ("e1", "~f2", ...).
CyclePath path_from_ids(const QuotientGraph& g,
                        const std::vector<std::string>& ids);

/// BFS spanning tree. parent_edge[v] is the directed edge from bfs-parent to
/// v (-1 at the root); cotree lists the primary directed edges outside the
/// tree in index order.
struct SpanningTree {
  int root = 0;
  std::vector<int> parent_edge;
  std::vector<int> cotree;
};

/// Deterministic BFS tree from the lexicographically smallest vertex id
/// (or from an explicit root).
SpanningTree spanning_tree(const QuotientGraph& g);
SpanningTree spanning_tree(const QuotientGraph& g, int root);

/// d closed paths whose classes form a Z-basis of the first homology group;
/// cycle i is tree-path + cotree edge i + tree-path.
struct HomologyBasis {
  std::vector<CyclePath> cycles;
  std::vector<int> cotree_edges;
  int dim() const { return static_cast<int>(cycles.size()); }
};

HomologyBasis homology_basis(const QuotientGraph& g);
HomologyBasis homology_basis(const QuotientGraph& g, const SpanningTree& tree);

/// Signed count of each primary edge in the path (net traversal count).
std::vector<long long> edge_incidence(const QuotientGraph& g,
                                      const CyclePath& p);

// -- QG file format ----------------------------------------------------------
//
// Line oriented, UTF-8, '#' starts a comment:
//   dim <d>                       (optional header)
//   vertex <id>
//   edge <id> <from> <to> [v= q1 ... qd]
//
// One line per undirected edge; q_i are integers, rationals "p/q", or
// decimals. The inverse directed edge is implicit.

/// Parse result before any interpretation of the vector annotations.
struct QgFile {
  QuotientGraph graph;
  int declared_dim = -1;
  // vector literals per primary edge id; missing key = no annotation
  std::map<std::string, std::vector<std::string>> edge_vectors;
};

QgFile parse_qg_file(std::string_view text);

/// Parses the combinatorial part of a QG description (vector annotations are
/// validated for token shape but otherwise ignored).
QuotientGraph parse_quotient_graph(std::string_view text);

}  // namespace topocryst
