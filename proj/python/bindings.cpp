#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <tuple>
#include <vector>

#include "stablenorm/circuits.hpp"
#include "stablenorm/error.hpp"
#include "stablenorm/io.hpp"
#include "stablenorm/oracle.hpp"
#include "stablenorm/stable_norm.hpp"

namespace py = pybind11;
using namespace stablenorm;

namespace {

// A validated graph together with its homology basis.
struct Graph {
  explicit Graph(WeightedMultigraph g) : graph(std::move(g)), basis(homology_basis(graph)) {}

  WeightedMultigraph graph;
  HomologyBasis basis;
};

RationalVector to_rationals(const std::vector<std::string>& values) {
  RationalVector out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(parse_rational(v));
  return out;
}

std::vector<std::string> to_strings(const RationalVector& values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact stable-norm unit balls of weighted multigraphs (rationals cross as \"p/q\" strings).";

  py::register_exception<Error>(m, "StableNormError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def_static("from_json", [](const std::string& text) { return Graph(io::parse_graph(text)); })
      .def_static("load", [](const std::string& path) { return Graph(io::load_graph(path)); })
      .def_static("corpus", [](const std::string& name, std::uint64_t seed) { return Graph(io::gen_corpus(name, seed)); },
                  py::arg("name"), py::arg("seed") = 0)
      .def_property_readonly("vertex_count", [](const Graph& g) { return g.graph.vertex_count(); })
      .def_property_readonly("edge_count", [](const Graph& g) { return g.graph.edge_count(); })
      .def_property_readonly("betti", [](const Graph& g) { return g.basis.betti; })
      .def_property_readonly("cotree_edges", [](const Graph& g) { return g.basis.cotree_edges; })
      .def("to_json", [](const Graph& g) { return io::serialize_graph(g.graph); });

  m.def(
      "circuits",
      [](const Graph& g, std::size_t max_circuits) {
        std::vector<std::tuple<std::string, std::string>> out;
        for (const auto& c : enumerate_circuits(g.graph, EnumerationOptions{max_circuits}).oriented) {
          out.emplace_back(format_steps(c.steps), to_string(c.length));
        }
        return out;
      },
      py::arg("graph"), py::arg("max_circuits") = EnumerationOptions{}.max_oriented);

  m.def("ball_json", [](const Graph& g) {
    return io::ball_to_json(stable_ball(g.graph, g.basis, enumerate_circuits(g.graph))).dump();
  });

  m.def("stable_norm", [](const Graph& g, const std::vector<std::string>& coords) {
    return to_string(stable_norm(g.graph, g.basis, to_rationals(coords)));
  });

  m.def("chain_from_coords", [](const Graph& g, const std::vector<std::string>& coords) {
    return to_strings(chain_from_coords(g.basis, to_rationals(coords)).coefficients);
  });

  m.def("dual_norm", [](const Graph& g, const std::vector<std::string>& xi) {
    auto ball = stable_ball(g.graph, g.basis, enumerate_circuits(g.graph));
    return to_string(dual_norm(ball, to_rationals(xi)));
  });

  m.def("decompose", [](const Graph& g, const std::vector<std::string>& coords) {
    std::vector<std::tuple<std::string, std::string, std::size_t>> out;
    auto d = decompose_class(g.graph, g.basis, to_rationals(coords));
    for (std::size_t i = 0; i < d.circuits.size(); ++i) {
      out.emplace_back(format_steps(d.circuits[i].steps), to_string(d.circuits[i].length), d.multiplicities[i]);
    }
    return out;
  });

  m.def("merge_circuits", [](const Graph& g, const std::string& c1, const std::string& c2) {
    std::vector<std::string> out;
    for (const auto& c : merge_circuits(g.graph, canonicalize(g.graph, parse_steps(c1)),
                                        canonicalize(g.graph, parse_steps(c2)))) {
      out.push_back(format_steps(c.steps));
    }
    return out;
  });

  m.def("verify_vertices", [](const Graph& g) {
    return verify_vertices(stable_ball(g.graph, g.basis, enumerate_circuits(g.graph))).all_certified;
  });

  m.def(
      "oracle_ball",
      [](const Graph& g, std::size_t max_edges) {
        oracle::Options options;
        options.max_edges = max_edges;
        std::vector<std::vector<std::string>> out;
        for (const auto& p : oracle::ball_by_intersection(g.graph, g.basis, options).points) out.push_back(to_strings(p));
        return out;
      },
      py::arg("graph"), py::arg("max_edges") = oracle::Options{}.max_edges);

  m.def("norm_by_infimum", [](const Graph& g, const std::vector<std::string>& coords) {
    return to_string(oracle::norm_by_infimum(g.graph, g.basis, to_rationals(coords)).norm);
  });

  m.def("export_plot", [](const Graph& g) {
    return io::export_plot(g.graph, stable_ball(g.graph, g.basis, enumerate_circuits(g.graph)));
  });
}
