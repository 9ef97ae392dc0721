// topocryst: periodic crystal nets from quotient graphs, lattice analyses,
// ring enumeration, net symmetry, and the standard-realization optimizer.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "topocryst/cochain.hpp"
#include "topocryst/lattice_analysis.hpp"
#include "topocryst/net.hpp"
#include "topocryst/net_symmetry.hpp"
#include "topocryst/rings.hpp"
#include "topocryst/standard_realization.hpp"
#include "topocryst/verify.hpp"

namespace {

using topocryst::BuildingBlock;
using topocryst::Lattice;
using json = nlohmann::json;

constexpr int kSchemaVersion = 1;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw topocryst::DomainError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& out_path, const std::string& content) {
  if (out_path.empty() || out_path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw topocryst::DomainError("cannot write '" + out_path + "'");
  out << content;
}

double rounded12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return std::stod(buf);
}

bool is_builtin(const std::string& spec) { return spec.rfind("builtin:", 0) == 0; }

BuildingBlock load_block(const std::string& spec) {
  if (is_builtin(spec)) return topocryst::builtin_block(spec.substr(8));
  return topocryst::parse_building_block(read_file(spec));
}

topocryst::QuotientGraph load_graph(const std::string& spec) {
  if (is_builtin(spec)) return topocryst::builtin_block(spec.substr(8)).graph();
  return topocryst::parse_quotient_graph(read_file(spec));
}

Lattice load_lattice(const std::string& spec) {
  if (is_builtin(spec)) {
    std::string name = spec.substr(8);
    if ((name[0] == 'A' || name[0] == 'D') && name.size() > 1 &&
        std::isdigit(static_cast<unsigned char>(name[1]))) {
      return topocryst::root_lattice(name[0], std::stoi(name.substr(1)));
    }
    return topocryst::builtin_lattice(name);
  }
  return Lattice::parse(read_file(spec));
}

json basis_to_json(const Lattice& l) {
  json out = json::array();
  for (int c = 0; c < l.dim(); ++c) {
    json col = json::array();
    for (int r = 0; r < l.dim(); ++r) {
      if (l.exact())
        col.push_back(l.rational_basis()(r, c).str());
      else
        col.push_back(rounded12(l.basis()(r, c)));
    }
    out.push_back(col);
  }
  return out;
}

int run_lattice(const std::string& input, const std::string& out_path) {
  Lattice l = load_lattice(input);
  topocryst::ShortestVectorSet k = topocryst::shortest_vectors(l);
  topocryst::PointGroup g = topocryst::point_group(l);
  topocryst::OSVerdict os = topocryst::is_orthogonally_symmetric(l);
  topocryst::TightFrameResult frame = topocryst::tight_frame_check(k, l.dim());

  json report;
  report["schema_version"] = kSchemaVersion;
  report["command"] = "lattice";
  report["input"] = input;
  report["dim"] = l.dim();
  report["exact"] = l.exact();
  report["basis"] = basis_to_json(l);
  report["alpha"] = rounded12(k.alpha);
  if (k.exact)
    report["alpha_sq"] = k.alpha_sq_exact->str();
  else
    report["alpha_sq"] = rounded12(k.alpha_sq);
  json vectors = json::array();
  for (int i = 0; i < k.count(); ++i) {
    json v = json::array();
    for (int r = 0; r < l.dim(); ++r) {
      if (k.exact)
        v.push_back(k.vectors_exact[i][r].str());
      else
        v.push_back(rounded12(k.vectors[i][r]));
    }
    vectors.push_back(v);
  }
  report["shortest_vectors"] = vectors;
  report["shortest_count"] = k.count();
  report["point_group_order"] = g.order();
  report["orthogonally_symmetric"] = os.is_os;
  report["os_failed_condition"] =
      os.failed_condition ? json(topocryst::to_string(*os.failed_condition))
                          : json(nullptr);
  report["os_witness"] = os.witness;
  if (l.dim() == 3)
    report["class"] = topocryst::to_string(topocryst::classify_3d(l));
  else if (l.dim() == 2)
    report["class"] = topocryst::to_string(topocryst::classify_2d(l));
  else
    report["class"] = nullptr;
  report["dual_basis"] = basis_to_json(topocryst::dual_lattice(l));
  if (frame.exact) {
    report["tight_frame_c"] = frame.c_exact->str();
    report["tight_frame_residual"] = frame.residual_exact->str();
  } else {
    report["tight_frame_c"] = rounded12(frame.c);
    report["tight_frame_residual"] = rounded12(frame.residual);
  }
  report["angle_bound_ok"] = topocryst::angle_bound_check(k);

  write_output(out_path, report.dump(2) + "\n");
  return 0;
}

int run_build(const std::string& input, int window, const std::string& format,
              const std::string& out_path) {
  BuildingBlock b = load_block(input);
  topocryst::CrystalNet net =
      topocryst::build_net(b, topocryst::homology_basis(b.graph()),
                           topocryst::cube_window(window, b.dim()));
  topocryst::NetFormat f;
  if (format == "xyz")
    f = topocryst::NetFormat::xyz;
  else if (format == "obj")
    f = topocryst::NetFormat::obj;
  else if (format == "json")
    f = topocryst::NetFormat::json;
  else
    throw topocryst::DomainError("unknown format '" + format + "'");
  write_output(out_path, topocryst::export_net_string(net, f));
  return 0;
}

int run_rings(const std::string& input, int length, const std::string& vertex,
              const std::string& out_path) {
  BuildingBlock b = load_block(input);
  int g = topocryst::girth(b);
  int wanted = length > 0 ? length : g;

  json per_vertex;
  for (int cls = 0; cls < b.graph().vertex_count(); ++cls) {
    const std::string& id = b.graph().vertex_id(cls);
    if (!vertex.empty() && vertex != id) continue;
    std::vector<topocryst::Ring> rings =
        topocryst::rings_through_vertex(b, cls, wanted);
    json words = json::array();
    for (const topocryst::Ring& r : rings) {
      json word = json::array();
      for (int e : r.canonical_edges) word.push_back(b.graph().dedge(e).id);
      words.push_back(word);
    }
    per_vertex[id] = {{"count", rings.size()}, {"rings", words}};
  }
  if (!vertex.empty() && per_vertex.empty())
    throw topocryst::DomainError("unknown vertex '" + vertex + "'");

  json report;
  report["schema_version"] = kSchemaVersion;
  report["command"] = "rings";
  report["input"] = input;
  report["girth"] = g;
  report["length"] = wanted;
  report["vertices"] = per_vertex;
  write_output(out_path, report.dump(2) + "\n");
  return 0;
}

int run_symmetry(const std::string& input, const std::string& out_path) {
  BuildingBlock b = load_block(input);
  topocryst::CrystalNet net =
      topocryst::build_net(b, topocryst::homology_basis(b.graph()),
                           topocryst::cube_window(1, b.dim()));
  topocryst::PointGroup pg = topocryst::net_point_group(net);
  int proper = 0, improper = 0;
  for (const auto& m : pg.elements_exact) {
    if (topocryst::determinant(m, topocryst::Rational(0)) ==
        topocryst::Rational(1))
      ++proper;
    else
      ++improper;
  }
  json report;
  report["schema_version"] = kSchemaVersion;
  report["command"] = "symmetry";
  report["input"] = input;
  report["point_group_order"] = pg.order();
  report["determinants"] = {{"proper", proper}, {"improper", improper}};
  report["strongly_isotropic"] = topocryst::is_strongly_isotropic(net);
  report["chiral"] = topocryst::is_chiral(net);
  write_output(out_path, report.dump(2) + "\n");
  return 0;
}

int run_standardize(const std::string& input, double tol, unsigned seed,
                    int max_iter, const std::string& out_path) {
  topocryst::QuotientGraph g = load_graph(input);
  topocryst::RealizationOptions options;
  options.tol = tol;
  options.seed = seed;
  options.max_iter = max_iter;
  topocryst::RealizationState state = topocryst::standard_realization(g, options);
  std::ostringstream out;
  out << "# standard realization, unit covolume\n";
  out << "# energy " << rounded12(state.objective) << "\n";
  out << "# harmonic_residual " << state.harmonic_residual << "\n";
  out << "# frame_residual " << state.frame_residual << "\n";
  out << "# iterations " << state.iterations << " seed " << seed << "\n";
  out << topocryst::serialize_block(state.block);
  write_output(out_path, out.str());
  return 0;
}

int run_verify() {
  auto results = topocryst::run_acceptance_suite();
  int failures = 0;
  for (const auto& r : results) {
    std::printf("%s  %2d  %s%s%s\n", r.pass ? "PASS" : "FAIL", r.index,
                r.name.c_str(), r.detail.empty() ? "" : " -- ",
                r.detail.c_str());
    if (!r.pass) ++failures;
  }
  std::printf("%d/%zu checks passed\n",
              static_cast<int>(results.size()) - failures, results.size());
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"periodic crystal nets from quotient graphs"};
  app.require_subcommand(1);

  std::string graph_spec, out_path, format = "xyz", vertex, lattice_input;
  int window = 1, length = 0, max_iter = 100000;
  double tol = 1e-10;
  unsigned seed = 0;

  CLI::App* build = app.add_subcommand("build", "unfold a net window and export it");
  build->add_option("--graph", graph_spec, "QG file or builtin:<name>")->required();
  build->add_option("--window", window, "cube window half-width in cells");
  build->add_option("--format", format, "xyz, obj, or json");
  build->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* lattice = app.add_subcommand("lattice", "analyze a lattice basis");
  lattice->add_option("input", lattice_input,
                      "basis file or builtin:{Z2,Z3,L_D,L_DT,hex2,A<d>,D<d>}")
      ->required();
  lattice->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* rings = app.add_subcommand("rings", "girth and minimal rings");
  rings->add_option("--graph", graph_spec, "QG file or builtin:<name>")->required();
  rings->add_option("--length", length, "ring length (default: the girth)");
  rings->add_option("--vertex", vertex, "restrict to one vertex class");
  rings->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* symmetry = app.add_subcommand("symmetry", "net point group, isotropy, chirality");
  symmetry->add_option("--graph", graph_spec, "QG file or builtin:<name>")->required();
  symmetry->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* standardize =
      app.add_subcommand("standardize", "energy-minimizing realization of a graph");
  standardize->add_option("--graph", graph_spec, "QG file or builtin:<name>")->required();
  standardize->add_option("--tol", tol, "residual tolerance");
  standardize->add_option("--seed", seed, "initialization seed");
  standardize->add_option("--max-iter", max_iter, "iteration cap");
  standardize->add_option("--out", out_path, "output file (default stdout)");

  app.add_subcommand("verify-paper",
                     "run the built-in verification suite and print a table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the message
    return 2;
  }

  try {
    if (app.got_subcommand("build"))
      return run_build(graph_spec, window, format, out_path);
    if (app.got_subcommand("lattice")) return run_lattice(lattice_input, out_path);
    if (app.got_subcommand("rings"))
      return run_rings(graph_spec, length, vertex, out_path);
    if (app.got_subcommand("symmetry")) return run_symmetry(graph_spec, out_path);
    if (app.got_subcommand("standardize"))
      return run_standardize(graph_spec, tol, seed, max_iter, out_path);
    if (app.got_subcommand("verify-paper")) return run_verify();
  } catch (const topocryst::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
