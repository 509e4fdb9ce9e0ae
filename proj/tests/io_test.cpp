#include "stablenorm/io.hpp"

#include <gtest/gtest.h>

#include <sstream>

#include "stablenorm/error.hpp"
#include "stablenorm/oracle.hpp"
#include "test_support.hpp"

namespace stablenorm {
namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::Parse;
}

StableBall ball_of(const WeightedMultigraph& g) { return stable_ball(g, homology_basis(g), enumerate_circuits(g)); }

TEST(ParseGraph, ValidFile) {
  auto g = io::parse_graph(R"({"vertex_count": 2, "edges": [
      {"tail": 0, "head": 1, "weight": "3/2"},
      {"tail": 1, "head": 0, "weight": "0.25"},
      {"tail": 1, "head": 1, "weight": "2"}]})");
  EXPECT_EQ(g.vertex_count(), 2u);
  EXPECT_EQ(g.edge(0).weight, Rational(3, 2));
  EXPECT_EQ(g.edge(1).weight, Rational(1, 4));
  EXPECT_TRUE(g.edge(2).is_loop());
}

TEST(ParseGraph, Errors) {
  EXPECT_EQ(kind_of([] { io::parse_graph("{"); }), ErrorKind::Parse);
  EXPECT_EQ(kind_of([] { io::parse_graph(R"({"vertex_count": 1, "edges": [] /* no */})"); }), ErrorKind::Parse);
  EXPECT_EQ(kind_of([] { io::parse_graph(R"({"vertex_count": 1, "edges": [{"tail":0,"head":0,"weight":1}]})"); }),
            ErrorKind::Parse);
  EXPECT_EQ(kind_of([] { io::parse_graph(R"({"vertex_count": 1, "edges": [{"tail":0,"head":0,"weight":"1e2"}]})"); }),
            ErrorKind::Parse);
  EXPECT_EQ(kind_of([] { io::parse_graph(R"({"vertex_count": 2, "edges": [{"tail":0,"head":1,"weight":"0"}]})"); }),
            ErrorKind::NonPositiveWeight);
  EXPECT_EQ(kind_of([] { io::parse_graph(R"({"vertex_count": 2, "edges": [{"tail":0,"head":5,"weight":"1"}]})"); }),
            ErrorKind::DanglingEndpoint);
  EXPECT_EQ(kind_of([] { io::parse_graph(R"({"vertex_count": 3, "edges": [{"tail":0,"head":1,"weight":"1"}]})"); }),
            ErrorKind::Disconnected);
}

TEST(SerializeGraph, RoundTripsCorpusAndIsDeterministic) {
  auto graphs = testing::corpus();
  for (std::uint64_t seed = 100; seed < 130; ++seed) graphs.push_back(io::gen_corpus("random", seed));
  for (const auto& g : graphs) {
    auto text = io::serialize_graph(g);
    EXPECT_EQ(io::parse_graph(text), g);
    EXPECT_EQ(io::serialize_graph(io::parse_graph(text)), text);
  }
}

TEST(GenCorpus, NamesAndDeterminism) {
  EXPECT_EQ(io::gen_corpus("theta").edge_count(), 3u);
  EXPECT_EQ(io::gen_corpus("K4").betti(), 3u);
  EXPECT_EQ(io::gen_corpus("K33").betti(), 4u);
  EXPECT_EQ(io::gen_corpus("bouquet-5").betti(), 5u);
  EXPECT_EQ(io::gen_corpus("random-4-7", 3).edge_count(), 7u);
  EXPECT_EQ(io::gen_corpus("random", 42), io::gen_corpus("random", 42));
  EXPECT_EQ(kind_of([] { io::gen_corpus("petersen"); }), ErrorKind::UnknownCorpusName);
  EXPECT_EQ(kind_of([] { io::gen_corpus("bouquet-x"); }), ErrorKind::UnknownCorpusName);
}

TEST(GenCorpus, RandomGraphsStayInRange) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto g = io::gen_corpus("random", seed);
    EXPECT_GE(g.vertex_count(), 2u);
    EXPECT_LE(g.vertex_count(), 6u);
    EXPECT_LE(g.edge_count(), 9u);
    EXPECT_GE(g.betti(), 1u);
    for (const auto& e : g.edges()) {
      EXPECT_GT(e.weight, 0);
      EXPECT_LE(e.weight, 5);
    }
  }
}

TEST(ParseClass, CommaSeparated) {
  EXPECT_EQ(io::parse_class("1/2, -3,0.25"), RationalVector({Rational(1, 2), -3, Rational(1, 4)}));
  EXPECT_TRUE(io::parse_class("").empty());
  EXPECT_THROW(io::parse_class("1,,2"), Error);
}

TEST(BallJson, Shape) {
  auto doc = io::ball_to_json(ball_of(testing::theta()));
  EXPECT_EQ(doc["betti"], 2);
  ASSERT_EQ(doc["vertices"].size(), 6u);
  const auto& v = doc["vertices"][0];
  EXPECT_EQ(v["basis"], nlohmann::ordered_json({"1/2", "0/1"}));
  EXPECT_EQ(v["chain"], nlohmann::ordered_json({"-1/2", "1/2", "0/1"}));
  EXPECT_EQ(v["circuit"], "-0 +1");
  EXPECT_EQ(v["length"], "2/1");
}

TEST(ExportPlot, HexagonSquareAndGuard) {
  auto theta = testing::theta();
  auto plot = io::plot_data(theta, ball_of(theta));
  EXPECT_EQ(plot.vertices.size(), 6u);
  EXPECT_EQ(plot.skeleton.size(), 6u);
  // Every hexagon vertex has exactly two neighbours.
  std::vector<int> degree(6, 0);
  for (auto [a, b] : plot.skeleton) {
    ++degree[a];
    ++degree[b];
  }
  EXPECT_EQ(degree, std::vector<int>(6, 2));

  auto square = testing::bouquet({1, 1});
  auto sq = io::plot_data(square, ball_of(square));
  EXPECT_EQ(sq.vertices.size(), 4u);
  EXPECT_EQ(sq.skeleton.size(), 4u);

  // For a 3-polytope, Euler gives edges = vertices + facets - 2; count the
  // facets independently as the extreme points among the oracle's normals.
  auto facet_count = [](const WeightedMultigraph& g) {
    auto normals = oracle::facet_normals(g, homology_basis(g));
    std::size_t facets = 0;
    for (std::size_t i = 0; i < normals.size(); ++i) {
      PointSet others(3, {});
      for (std::size_t j = 0; j < normals.size(); ++j) {
        if (j != i) others.points.push_back(normals[j]);
      }
      facets += is_extreme(normals[i], others).extreme;
    }
    return facets;
  };
  auto k4 = testing::k4();
  EXPECT_EQ(facet_count(k4), 24u);
  EXPECT_EQ(io::plot_data(k4, ball_of(k4)).skeleton.size(), 14 + facet_count(k4) - 2);

  // Non-simplicial ball: facet diagonals have boundary midpoints but are not edges.
  auto quad = io::gen_corpus("random", 14);
  auto quad_ball = ball_of(quad);
  ASSERT_EQ(quad_ball.betti, 3u);
  std::size_t boundary_pairs = 0;
  for (std::size_t i = 0; i < quad_ball.size(); ++i) {
    for (std::size_t j = i + 1; j < quad_ball.size(); ++j) {
      Chain mid = Rational(1, 2) * (quad_ball.vertices_chain[i] + quad_ball.vertices_chain[j]);
      boundary_pairs += chain_norm(quad, mid) == 1;
    }
  }
  auto quad_edges = io::plot_data(quad, quad_ball).skeleton.size();
  EXPECT_EQ(quad_edges, quad_ball.size() + facet_count(quad) - 2);
  EXPECT_LT(quad_edges, boundary_pairs);

  // A segment is its own 1-skeleton.
  auto loop = testing::bouquet({Rational(5, 2)});
  auto seg = io::plot_data(loop, ball_of(loop));
  ASSERT_EQ(seg.skeleton.size(), 1u);
  EXPECT_EQ(seg.skeleton[0], std::make_pair(std::size_t{0}, std::size_t{1}));

  auto b4 = io::gen_corpus("bouquet-4");
  EXPECT_EQ(kind_of([&] { io::export_plot(b4, ball_of(b4)); }), ErrorKind::DimensionTooHigh);

  auto csv = io::export_plot(theta, ball_of(theta));
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "kind,index,a,b,x0,x1");
  std::getline(lines, line);
  EXPECT_EQ(line, "vertex,0,,,1/2,0/1");
}

}  // namespace
}  // namespace stablenorm
