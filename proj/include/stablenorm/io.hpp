#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "stablenorm/graph.hpp"
#include "stablenorm/stable_norm.hpp"

namespace stablenorm::io {

/// Strict JSON: {"vertex_count": n, "edges": [{"tail": t, "head": h, "weight": "p/q"}]}.
/// Throws Error(Parse) on malformed input and the graph validation errors otherwise.
WeightedMultigraph parse_graph(std::string_view json_text);
WeightedMultigraph load_graph(const std::filesystem::path& path);

nlohmann::ordered_json graph_to_json(const WeightedMultigraph& graph);
std::string serialize_graph(const WeightedMultigraph& graph);

nlohmann::ordered_json rationals_to_json(const RationalVector& values);
/// Comma-separated rational literals, e.g. "1/2,-3,0.25".
RationalVector parse_class(std::string_view text);

/// {"betti": b, "vertices": [{"basis", "chain", "circuit", "length"}]}.
nlohmann::ordered_json ball_to_json(const StableBall& ball);

struct PlotData {
  std::size_t dimension = 0;
  std::vector<RationalVector> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> skeleton;
};

/// Vertices plus the 1-skeleton of the ball, for b <= 3. Throws DimensionTooHigh.
PlotData plot_data(const WeightedMultigraph& graph, const StableBall& ball);
/// CSV rendering: a "vertex" row per vertex, then an "edge" row per skeleton edge.
std::string export_plot(const WeightedMultigraph& graph, const StableBall& ball);

/// Corpus generators: "bouquet-<k>", "theta", "K4", "K33", "random" or
/// "random-<v>-<e>". Throws UnknownCorpusName.
WeightedMultigraph gen_corpus(std::string_view name, std::uint64_t seed = 0);

/// Seeded connected multigraph on `vertices` vertices with `edges` edges;
/// loops and parallel edges may occur, weights are rationals in (0, 5].
WeightedMultigraph random_graph(std::uint64_t seed, std::size_t vertices, std::size_t edges);

}  // namespace stablenorm::io
