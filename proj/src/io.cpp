#include "stablenorm/io.hpp"

#include <fstream>
#include <random>
#include <sstream>

#include "stablenorm/error.hpp"
#include "stablenorm/linear_program.hpp"

namespace stablenorm::io {

using nlohmann::ordered_json;

namespace {

std::size_t read_index(const nlohmann::json& obj, const char* key) {
  if (!obj.contains(key) || !obj[key].is_number_integer() || obj[key].get<std::int64_t>() < 0) {
    throw Error(ErrorKind::Parse, std::string("\"") + key + "\" must be a nonnegative integer");
  }
  return obj[key].get<std::size_t>();
}

}  // namespace

WeightedMultigraph parse_graph(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text.begin(), json_text.end(), nullptr, true, false);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
  if (!doc.is_object()) throw Error(ErrorKind::Parse, "graph file must hold a JSON object");
  auto vertex_count = read_index(doc, "vertex_count");
  if (!doc.contains("edges") || !doc["edges"].is_array()) throw Error(ErrorKind::Parse, "\"edges\" must be an array");

  std::vector<EdgeSpec> specs;
  for (const auto& e : doc["edges"]) {
    if (!e.is_object()) throw Error(ErrorKind::Parse, "each edge must be an object");
    if (!e.contains("weight") || !e["weight"].is_string()) {
      throw Error(ErrorKind::Parse, "edge weight must be a string such as \"3/2\" or \"1.5\"");
    }
    specs.push_back(EdgeSpec{read_index(e, "tail"), read_index(e, "head"),
                             parse_rational(e["weight"].get<std::string>())});
  }
  return WeightedMultigraph::build(vertex_count, specs);
}

WeightedMultigraph load_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

ordered_json graph_to_json(const WeightedMultigraph& graph) {
  ordered_json doc;
  doc["vertex_count"] = graph.vertex_count();
  doc["edges"] = ordered_json::array();
  for (const auto& e : graph.edges()) {
    ordered_json edge;
    edge["tail"] = e.tail;
    edge["head"] = e.head;
    edge["weight"] = to_string(e.weight);
    doc["edges"].push_back(std::move(edge));
  }
  return doc;
}

std::string serialize_graph(const WeightedMultigraph& graph) { return graph_to_json(graph).dump(2) + "\n"; }

ordered_json rationals_to_json(const RationalVector& values) {
  auto arr = ordered_json::array();
  for (const auto& v : values) arr.push_back(to_string(v));
  return arr;
}

RationalVector parse_class(std::string_view text) {
  RationalVector out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    auto token = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    out.push_back(parse_rational(token));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

ordered_json ball_to_json(const StableBall& ball) {
  ordered_json doc;
  doc["betti"] = ball.betti;
  doc["vertices"] = ordered_json::array();
  for (std::size_t i = 0; i < ball.size(); ++i) {
    ordered_json v;
    v["basis"] = rationals_to_json(ball.vertices_basis[i]);
    v["chain"] = rationals_to_json(ball.vertices_chain[i].coefficients);
    if (i < ball.source_circuits.size()) {
      v["circuit"] = format_steps(ball.source_circuits[i].steps);
      v["length"] = to_string(ball.source_circuits[i].length);
    }
    doc["vertices"].push_back(std::move(v));
  }
  return doc;
}

PlotData plot_data(const WeightedMultigraph& graph, const StableBall& ball) {
  if (ball.betti > 3) {
    throw Error(ErrorKind::DimensionTooHigh, "plot export needs b <= 3, got b = " + std::to_string(ball.betti));
  }
  PlotData plot;
  plot.dimension = ball.betti;
  plot.vertices = ball.vertices_basis;

  const auto n = ball.size();
  // A segment is its own 1-skeleton; its midpoint is the origin, not a boundary point.
  if (ball.betti == 1) {
    if (n == 2) plot.skeleton.emplace_back(0, 1);
    return plot;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Chain mid = Rational(1, 2) * (ball.vertices_chain[i] + ball.vertices_chain[j]);
      if (chain_norm(graph, mid) != 1) continue;
      // [v_i, v_j] is an edge iff the midpoint admits no convex combination
      // putting weight on any other vertex: maximize that weight.
      RationalMatrix a(ball.betti + 1, RationalVector(n));
      RationalVector rhs(ball.betti + 1);
      RationalVector cost(n);
      for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t d = 0; d < ball.betti; ++d) a[d][c] = ball.vertices_basis[c][d];
        a[ball.betti][c] = 1;
        if (c != i && c != j) cost[c] = -1;
      }
      for (std::size_t d = 0; d < ball.betti; ++d) {
        rhs[d] = (ball.vertices_basis[i][d] + ball.vertices_basis[j][d]) / 2;
      }
      rhs[ball.betti] = 1;
      auto lp = solve_linear_program(a, rhs, cost);
      if (lp.status == LinearProgramResult::Status::Optimal && lp.objective == 0) plot.skeleton.emplace_back(i, j);
    }
  }
  return plot;
}

std::string export_plot(const WeightedMultigraph& graph, const StableBall& ball) {
  auto plot = plot_data(graph, ball);
  std::ostringstream out;
  out << "kind,index,a,b";
  for (std::size_t d = 0; d < plot.dimension; ++d) out << ",x" << d;
  out << "\n";
  for (std::size_t i = 0; i < plot.vertices.size(); ++i) {
    out << "vertex," << i << ",,";
    for (const auto& x : plot.vertices[i]) out << "," << to_string(x);
    out << "\n";
  }
  for (std::size_t e = 0; e < plot.skeleton.size(); ++e) {
    out << "edge," << e << "," << plot.skeleton[e].first << "," << plot.skeleton[e].second;
    for (std::size_t d = 0; d < plot.dimension; ++d) out << ",";
    out << "\n";
  }
  return out.str();
}

namespace {

// Uniform enough for corpus generation and identical on every platform,
// unlike std::uniform_int_distribution.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

bool parse_size(std::string_view text, std::size_t& out) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string_view::npos) return false;
  out = std::stoul(std::string(text));
  return true;
}

}  // namespace

WeightedMultigraph random_graph(std::uint64_t seed, std::size_t vertices, std::size_t edges) {
  if (vertices == 0) throw Error(ErrorKind::Disconnected, "random graph needs at least one vertex");
  if (edges + 1 < vertices) throw Error(ErrorKind::Disconnected, "too few edges to connect the random graph");
  std::mt19937_64 rng(seed);
  std::vector<EdgeSpec> specs;

  auto weight = [&] {
    auto q = 1 + draw(rng, 6);
    auto p = 1 + draw(rng, 5 * q);
    return Rational(Integer(p), Integer(q));
  };
  auto oriented = [&](std::size_t u, std::size_t v) {
    return draw(rng, 2) == 0 ? EdgeSpec{u, v, weight()} : EdgeSpec{v, u, weight()};
  };

  for (std::size_t v = 1; v < vertices; ++v) specs.push_back(oriented(draw(rng, v), v));
  while (specs.size() < edges) specs.push_back(oriented(draw(rng, vertices), draw(rng, vertices)));

  // Shuffle so tree edges do not always come first.
  for (std::size_t i = specs.size(); i > 1; --i) std::swap(specs[i - 1], specs[draw(rng, i)]);
  return WeightedMultigraph::build(vertices, specs);
}

WeightedMultigraph gen_corpus(std::string_view name, std::uint64_t seed) {
  auto unit = [](std::size_t t, std::size_t h) { return EdgeSpec{t, h, 1}; };
  if (name == "theta") return WeightedMultigraph::build(2, {unit(0, 1), unit(0, 1), unit(0, 1)});
  if (name == "K4") {
    return WeightedMultigraph::build(4, {unit(0, 1), unit(0, 2), unit(0, 3), unit(1, 2), unit(1, 3), unit(2, 3)});
  }
  if (name == "K33") {
    std::vector<EdgeSpec> specs;
    for (std::size_t a = 0; a < 3; ++a) {
      for (std::size_t b = 3; b < 6; ++b) specs.push_back(unit(a, b));
    }
    return WeightedMultigraph::build(6, specs);
  }
  std::size_t k = 0;
  if (name.starts_with("bouquet-") && parse_size(name.substr(8), k) && k > 0) {
    return WeightedMultigraph::build(1, std::vector<EdgeSpec>(k, unit(0, 0)));
  }
  if (name == "random") {
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    auto v = 2 + draw(rng, 5);
    auto e = v + draw(rng, 10 - v);
    return random_graph(seed, v, e);
  }
  if (name.starts_with("random-")) {
    auto rest = name.substr(7);
    auto dash = rest.find('-');
    std::size_t v = 0;
    std::size_t e = 0;
    if (dash != std::string_view::npos && parse_size(rest.substr(0, dash), v) && parse_size(rest.substr(dash + 1), e)) {
      return random_graph(seed, v, e);
    }
  }
  throw Error(ErrorKind::UnknownCorpusName, "unknown corpus graph '" + std::string(name) + "'");
}

}  // namespace stablenorm::io
