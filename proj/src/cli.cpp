#include "stablenorm/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "stablenorm/circuits.hpp"
#include "stablenorm/error.hpp"
#include "stablenorm/io.hpp"
#include "stablenorm/oracle.hpp"
#include "stablenorm/stable_norm.hpp"

namespace stablenorm::cli {

using nlohmann::ordered_json;

namespace {

struct Context {
  WeightedMultigraph graph;
  HomologyBasis basis;
};

Context open_graph(const std::string& path) {
  auto graph = io::load_graph(path);
  auto basis = homology_basis(graph);
  return Context{std::move(graph), std::move(basis)};
}

int cmd_ball(const std::string& path, const std::string& plot_path, bool check_bound, std::size_t max_circuits,
             std::ostream& out, std::ostream& err) {
  auto ctx = open_graph(path);
  auto circuits = enumerate_circuits(ctx.graph, EnumerationOptions{max_circuits});
  auto ball = stable_ball(ctx.graph, ctx.basis, circuits);
  out << io::ball_to_json(ball).dump(2) << "\n";
  if (!plot_path.empty()) {
    std::ofstream csv(plot_path);
    if (!csv) throw Error(ErrorKind::Parse, "cannot write " + plot_path);
    csv << io::export_plot(ctx.graph, ball);
  }
  if (check_bound) {
    auto bound = vertex_count_bound(ball.betti);
    if (ball.size() > bound) {
      err << "vertex count " << ball.size() << " exceeds 2(2^b - 1) = " << bound << "\n";
      return kExitVerificationFailed;
    }
    err << "vertex count " << ball.size() << " <= 2(2^b - 1) = " << bound << "\n";
  }
  return kExitOk;
}

int cmd_norm(const std::string& path, const std::string& cls, std::ostream& out) {
  auto ctx = open_graph(path);
  auto coords = io::parse_class(cls);
  auto rep = chain_from_coords(ctx.basis, coords);
  ordered_json doc;
  doc["class"] = io::rationals_to_json(coords);
  doc["norm"] = to_string(chain_norm(ctx.graph, rep));
  doc["representative"] = io::rationals_to_json(rep.coefficients);
  out << doc.dump(2) << "\n";
  return kExitOk;
}

int cmd_decompose(const std::string& path, const std::string& cls, std::ostream& out) {
  auto ctx = open_graph(path);
  auto coords = io::parse_class(cls);
  auto d = decompose_class(ctx.graph, ctx.basis, coords);
  auto norm = stable_norm(ctx.graph, ctx.basis, coords);
  ordered_json doc;
  doc["class"] = io::rationals_to_json(coords);
  doc["norm"] = to_string(norm);
  doc["circuits"] = ordered_json::array();
  for (std::size_t i = 0; i < d.circuits.size(); ++i) {
    ordered_json c;
    c["circuit"] = format_steps(d.circuits[i].steps);
    c["length"] = to_string(d.circuits[i].length);
    c["multiplicity"] = d.multiplicities[i];
    doc["circuits"].push_back(std::move(c));
  }
  doc["sum_of_lengths"] = to_string(d.total_length());
  doc["norm_identity_holds"] = d.total_length() == norm;
  doc["class_identity_holds"] = d.total_chain(ctx.graph.edge_count()) == chain_from_coords(ctx.basis, coords);
  out << doc.dump(2) << "\n";
  return kExitOk;
}

int cmd_circuits(const std::string& path, std::size_t max_circuits, std::ostream& out) {
  auto ctx = open_graph(path);
  auto set = enumerate_circuits(ctx.graph, EnumerationOptions{max_circuits});
  for (std::size_t i = 0; i < set.oriented.size(); ++i) {
    const auto& c = set.oriented[i];
    out << i << "  " << to_string(c.length) << "  " << format_steps(c.steps) << "\n";
  }
  return kExitOk;
}

int cmd_verify(const std::string& path, std::size_t oracle_cap, std::ostream& out, std::ostream& err) {
  auto ctx = open_graph(path);
  auto circuits = enumerate_circuits(ctx.graph);
  auto ball = stable_ball(ctx.graph, ctx.basis, circuits);
  auto report = verify_vertices(ball);
  bool pass = report.all_certified;

  ordered_json doc;
  doc["betti"] = ball.betti;
  doc["vertex_count"] = ball.size();
  doc["vertex_bound"] = vertex_count_bound(ball.betti);
  doc["bound_holds"] = ball.size() <= vertex_count_bound(ball.betti);
  pass = pass && ball.size() <= vertex_count_bound(ball.betti);
  doc["vertices"] = ordered_json::array();
  for (const auto& check : report.vertices) {
    ordered_json v;
    v["circuit"] = format_steps(ball.source_circuits[check.index].steps);
    v["extreme"] = check.extreme;
    doc["vertices"].push_back(std::move(v));
    if (!check.extreme) err << "not extreme: " << format_steps(ball.source_circuits[check.index].steps) << "\n";
  }

  if (ball.betti == 0) {
    doc["oracle"] = "skipped: b = 0";
  } else {
    oracle::Options options;
    options.max_edges = oracle_cap;
    auto reference = oracle::ball_by_intersection(ctx.graph, ctx.basis, options);
    std::vector<RationalVector> ours = ball.vertices_basis;
    std::sort(ours.begin(), ours.end());
    bool same = ours == reference.points;
    ordered_json o;
    o["vertex_count"] = reference.size();
    o["match"] = same;
    if (!same) err << "oracle vertex set differs from the circuit construction\n";

    // Infimum LP against direct evaluation on each basis direction and their sum.
    bool norms_match = true;
    std::vector<RationalVector> probes;
    for (std::size_t j = 0; j < ball.betti; ++j) {
      RationalVector e(ball.betti);
      e[j] = 1;
      probes.push_back(e);
    }
    probes.emplace_back(ball.betti, Rational(1));
    for (const auto& y : probes) {
      auto inf = oracle::norm_by_infimum(ctx.graph, ctx.basis, y, options);
      norms_match = norms_match && inf.norm == stable_norm(ctx.graph, ctx.basis, y);
    }
    o["infimum_norm_match"] = norms_match;
    if (!norms_match) err << "infimum norm differs from the direct evaluation\n";
    doc["oracle"] = std::move(o);
    pass = pass && same && norms_match;
  }
  doc["pass"] = pass;
  out << doc.dump(2) << "\n";
  return pass ? kExitOk : kExitVerificationFailed;
}

int cmd_gen(const std::string& name, std::uint64_t seed, std::ostream& out) {
  out << io::serialize_graph(io::gen_corpus(name, seed));
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact stable-norm unit balls of weighted multigraphs", "stablenorm"};
  app.require_subcommand(1);

  std::string graph_path;
  std::string plot_path;
  std::string cls;
  std::string name;
  bool check_bound = false;
  std::size_t max_circuits = EnumerationOptions{}.max_oriented;
  std::size_t oracle_cap = oracle::Options{}.max_edges;
  std::uint64_t seed = 0;

  auto* ball = app.add_subcommand("ball", "Vertices of the stable-norm unit ball as JSON");
  ball->add_option("graph", graph_path, "Graph JSON file")->required();
  ball->add_option("--plot", plot_path, "Write vertices and 1-skeleton as CSV (b <= 3)");
  ball->add_flag("--check-bound", check_bound, "Fail if the vertex count exceeds 2(2^b - 1)");
  ball->add_option("--max-circuits", max_circuits, "Abort once this many oriented circuits are found");

  auto* norm = app.add_subcommand("norm", "Stable norm of a class given in basis coordinates");
  norm->add_option("graph", graph_path, "Graph JSON file")->required();
  norm->add_option("--class", cls, "Comma-separated rational coordinates")->required();

  auto* decompose = app.add_subcommand("decompose", "Split an integral class into simple circuits");
  decompose->add_option("graph", graph_path, "Graph JSON file")->required();
  decompose->add_option("--class", cls, "Comma-separated integer coordinates")->required();

  auto* circuits = app.add_subcommand("circuits", "List simple oriented circuits");
  circuits->add_option("graph", graph_path, "Graph JSON file")->required();
  circuits->add_option("--max-circuits", max_circuits, "Abort once this many oriented circuits are found");

  auto* verify = app.add_subcommand("verify", "Certify vertices and compare with the brute-force oracle");
  verify->add_option("graph", graph_path, "Graph JSON file")->required();
  verify->add_option("--oracle-cap", oracle_cap, "Largest edge count the oracle accepts");

  auto* gen = app.add_subcommand("gen", "Emit a corpus graph as JSON");
  gen->add_option("name", name, "bouquet-<k> | theta | K4 | K33 | random | random-<v>-<e>")->required();
  gen->add_option("--seed", seed, "Seed for random graphs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitInputError;
  }

  try {
    if (ball->parsed()) return cmd_ball(graph_path, plot_path, check_bound, max_circuits, out, err);
    if (norm->parsed()) return cmd_norm(graph_path, cls, out);
    if (decompose->parsed()) return cmd_decompose(graph_path, cls, out);
    if (circuits->parsed()) return cmd_circuits(graph_path, max_circuits, out);
    if (verify->parsed()) return cmd_verify(graph_path, oracle_cap, out, err);
    if (gen->parsed()) return cmd_gen(name, seed, out);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace stablenorm::cli
