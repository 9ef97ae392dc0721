#include "topocryst/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace topocryst {

QuotientGraph QuotientGraph::create(const std::vector<std::string>& vertices,
                                    const std::vector<EdgeSpec>& edges) {
  QuotientGraph g;
  g.vertex_ids_ = vertices;
  std::sort(g.vertex_ids_.begin(), g.vertex_ids_.end());
  for (size_t i = 0; i < g.vertex_ids_.size(); ++i) {
    if (i > 0 && g.vertex_ids_[i] == g.vertex_ids_[i - 1])
      throw DomainError("duplicate vertex id '" + g.vertex_ids_[i] + "'");
    g.vertex_index_.emplace(g.vertex_ids_[i], static_cast<int>(i));
  }
  if (g.vertex_ids_.empty()) throw DomainError("graph has no vertices");

  for (const auto& spec : edges) {
    if (spec.id.empty() || spec.id.front() == '~')
      throw DomainError("bad edge id '" + spec.id + "' ('~' prefix is reserved)");
    int from = g.vertex_index(spec.from);
    int to = g.vertex_index(spec.to);
    if (from < 0)
      throw DomainError("edge '" + spec.id + "' references unknown vertex '" +
                        spec.from + "'");
    if (to < 0)
      throw DomainError("edge '" + spec.id + "' references unknown vertex '" +
                        spec.to + "'");
    g.dedges_.push_back({spec.id, from, to, -1, true});
    g.dedges_.push_back({"~" + spec.id, to, from, -1, false});
  }

  std::sort(g.dedges_.begin(), g.dedges_.end(),
            [](const DirectedEdge& a, const DirectedEdge& b) { return a.id < b.id; });
  for (size_t i = 0; i < g.dedges_.size(); ++i) {
    if (i > 0 && g.dedges_[i].id == g.dedges_[i - 1].id)
      throw DomainError("duplicate edge id '" + g.dedges_[i].id + "'");
    g.dedge_index_.emplace(g.dedges_[i].id, static_cast<int>(i));
  }
  for (size_t i = 0; i < g.dedges_.size(); ++i) {
    DirectedEdge& e = g.dedges_[i];
    const std::string partner = e.primary ? "~" + e.id : e.id.substr(1);
    e.inverse = g.dedge_index(partner);
    if (e.primary) g.primary_.push_back(static_cast<int>(i));
  }

  g.stars_.assign(g.vertex_count(), {});
  for (size_t i = 0; i < g.dedges_.size(); ++i)
    g.stars_[g.dedges_[i].origin].push_back(static_cast<int>(i));

  // connectivity
  std::vector<bool> seen(g.vertex_count(), false);
  std::queue<int> queue;
  queue.push(0);
  seen[0] = true;
  int reached = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop();
    for (int e : g.stars_[v]) {
      int w = g.dedges_[e].terminus;
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        queue.push(w);
      }
    }
  }
  if (reached != g.vertex_count()) {
    for (int v = 0; v < g.vertex_count(); ++v)
      if (!seen[v])
        throw DomainError("graph is disconnected: vertex '" + g.vertex_ids_[v] +
                          "' is unreachable");
  }
  return g;
}

int QuotientGraph::vertex_index(std::string_view id) const {
  auto it = vertex_index_.find(id);
  return it == vertex_index_.end() ? -1 : it->second;
}

int QuotientGraph::dedge_index(std::string_view id) const {
  auto it = dedge_index_.find(id);
  return it == dedge_index_.end() ? -1 : it->second;
}

std::string QuotientGraph::serialize() const {
  std::ostringstream os;
  for (const auto& v : vertex_ids_) os << "vertex " << v << "\n";
  for (int e : primary_) {
    const DirectedEdge& d = dedges_[e];
    os << "edge " << d.id << " " << vertex_ids_[d.origin] << " "
       << vertex_ids_[d.terminus] << "\n";
  }
  return os.str();
}

bool is_consecutive(const QuotientGraph& g, const CyclePath& p) {
  if (p.edges.empty()) return false;
  for (size_t i = 0; i + 1 < p.edges.size(); ++i)
    if (g.dedge(p.edges[i]).terminus != g.dedge(p.edges[i + 1]).origin)
      return false;
  return true;
}

bool is_closed(const QuotientGraph& g, const CyclePath& p) {
  return is_consecutive(g, p) &&
         g.dedge(p.edges.back()).terminus == g.dedge(p.edges.front()).origin;
}

CyclePath path_from_ids(const QuotientGraph& g,
                        const std::vector<std::string>& ids) {
  CyclePath p;
  for (const auto& id : ids) {
    int e = g.dedge_index(id);
    if (e < 0) throw DomainError("unknown edge id '" + id + "'");
    p.edges.push_back(e);
  }
  return p;
}

SpanningTree spanning_tree(const QuotientGraph& g) {
  return spanning_tree(g, 0);  // vertex 0 = lexicographically smallest id
}

SpanningTree spanning_tree(const QuotientGraph& g, int root) {
  SpanningTree t;
  t.root = root;
  t.parent_edge.assign(g.vertex_count(), -1);
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<bool> in_tree(g.dedge_count(), false);
  seen[root] = true;
  std::queue<int> queue;
  queue.push(root);
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop();
    for (int e : g.star(v)) {
      int w = g.dedge(e).terminus;
      if (seen[w]) continue;
      seen[w] = true;
      t.parent_edge[w] = e;
      in_tree[e] = true;
      in_tree[g.inverse(e)] = true;
      queue.push(w);
    }
  }
  for (int e : g.primary_edges())
    if (!in_tree[e]) t.cotree.push_back(e);
  return t;
}

namespace {

// Directed tree path root -> v.
std::vector<int> root_path(const QuotientGraph& g, const SpanningTree& t, int v) {
  std::vector<int> edges;
  while (v != t.root) {
    int e = t.parent_edge[v];
    edges.push_back(e);
    v = g.dedge(e).origin;
  }
  std::reverse(edges.begin(), edges.end());
  return edges;
}

}  // namespace

HomologyBasis homology_basis(const QuotientGraph& g) {
  return homology_basis(g, spanning_tree(g));
}

HomologyBasis homology_basis(const QuotientGraph& g, const SpanningTree& tree) {
  HomologyBasis basis;
  for (int f : tree.cotree) {
    CyclePath c;
    for (int e : root_path(g, tree, g.dedge(f).origin)) c.edges.push_back(e);
    c.edges.push_back(f);
    std::vector<int> back = root_path(g, tree, g.dedge(f).terminus);
    std::reverse(back.begin(), back.end());
    for (int e : back) c.edges.push_back(g.inverse(e));
    basis.cycles.push_back(std::move(c));
    basis.cotree_edges.push_back(f);
  }
  return basis;
}

std::vector<long long> edge_incidence(const QuotientGraph& g,
                                      const CyclePath& p) {
  std::vector<long long> counts(g.primary_edges().size(), 0);
  // primary edges are a prefix-ordered list; map dedge -> primary slot
  std::vector<int> slot(g.dedge_count(), -1);
  for (size_t i = 0; i < g.primary_edges().size(); ++i) {
    slot[g.primary_edges()[i]] = static_cast<int>(i);
    slot[g.inverse(g.primary_edges()[i])] = static_cast<int>(i);
  }
  for (int e : p.edges)
    counts[slot[e]] += g.dedge(e).primary ? 1 : -1;
  return counts;
}

// -- parser -------------------------------------------------------------------

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream is(line);
  std::string tok;
  while (is >> tok) {
    if (tok.front() == '#') break;
    tokens.push_back(tok);
  }
  return tokens;
}

}  // namespace

QgFile parse_qg_file(std::string_view text) {
  std::vector<std::string> vertices;
  std::vector<QuotientGraph::EdgeSpec> edges;
  std::map<std::string, std::vector<std::string>> vectors;
  std::map<std::string, int> decl_line;  // for post-hoc connectivity reporting
  int declared_dim = -1;

  std::istringstream input{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(input, line)) {
    ++lineno;
    std::vector<std::string> tok = tokenize(line);
    if (tok.empty()) continue;
    const std::string& kind = tok[0];
    if (kind == "dim") {
      if (tok.size() != 2)
        throw ParseError(lineno, "expected 'dim <d>'");
      try {
        declared_dim = std::stoi(tok[1]);
      } catch (const std::exception&) {
        throw ParseError(lineno, "bad dimension '" + tok[1] + "'");
      }
      if (declared_dim < 1) throw ParseError(lineno, "dimension must be >= 1");
    } else if (kind == "vertex") {
      if (tok.size() != 2) throw ParseError(lineno, "expected 'vertex <id>'");
      if (decl_line.count("v:" + tok[1]))
        throw ParseError(lineno, "duplicate vertex id '" + tok[1] + "'");
      decl_line["v:" + tok[1]] = lineno;
      vertices.push_back(tok[1]);
    } else if (kind == "edge") {
      if (tok.size() < 4)
        throw ParseError(lineno, "expected 'edge <id> <from> <to> [v= ...]'");
      const std::string& id = tok[1];
      if (id.front() == '~')
        throw ParseError(lineno, "edge id '" + id + "' ('~' prefix is reserved)");
      if (decl_line.count("e:" + id))
        throw ParseError(lineno, "duplicate edge id '" + id + "'");
      decl_line["e:" + id] = lineno;
      edges.push_back({id, tok[2], tok[3]});
      if (tok.size() > 4) {
        if (tok[4] != "v=")
          throw ParseError(lineno, "unexpected token '" + tok[4] +
                                       "' (expected 'v=')");
        std::vector<std::string> vals(tok.begin() + 5, tok.end());
        if (vals.empty())
          throw ParseError(lineno, "'v=' with no components");
        vectors[id] = std::move(vals);
      }
    } else {
      throw ParseError(lineno, "unknown directive '" + kind + "'");
    }
  }

  // Re-validate with line attribution.
  for (const auto& e : edges) {
    int at = decl_line["e:" + e.id];
    if (!decl_line.count("v:" + e.from))
      throw ParseError(at, "edge '" + e.id + "' references unknown vertex '" +
                               e.from + "'");
    if (!decl_line.count("v:" + e.to))
      throw ParseError(at, "edge '" + e.id + "' references unknown vertex '" +
                               e.to + "'");
  }

  QgFile file;
  try {
    file.graph = QuotientGraph::create(vertices, edges);
  } catch (const DomainError& err) {
    // Attribute connectivity failures to the unreachable vertex declaration.
    std::string what = err.what();
    int at = 0;
    auto pos = what.find("vertex '");
    if (pos != std::string::npos) {
      auto end = what.find('\'', pos + 8);
      if (end != std::string::npos) {
        auto it = decl_line.find("v:" + what.substr(pos + 8, end - pos - 8));
        if (it != decl_line.end()) at = it->second;
      }
    }
    throw ParseError(at, what);
  }
  file.declared_dim = declared_dim;
  for (const auto& [id, vals] : vectors) {
    if (declared_dim > 0 && static_cast<int>(vals.size()) != declared_dim)
      throw ParseError(decl_line["e:" + id],
                       "vector on edge '" + id + "' has " +
                           std::to_string(vals.size()) + " components, dim is " +
                           std::to_string(declared_dim));
    file.edge_vectors[id] = vals;
  }
  return file;
}

QuotientGraph parse_quotient_graph(std::string_view text) {
  return parse_qg_file(text).graph;
}

}  // namespace topocryst
