#include "stablenorm/stable_norm.hpp"

#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "stablenorm/error.hpp"
#include "test_support.hpp"

namespace stablenorm {
namespace {

using testing::bouquet;
using testing::k4;
using testing::theta;

StableBall ball_of(const WeightedMultigraph& g) {
  return stable_ball(g, homology_basis(g), enumerate_circuits(g));
}

std::set<Chain> chain_set(const StableBall& ball) {
  return {ball.vertices_chain.begin(), ball.vertices_chain.end()};
}

// Independent check that merged/decomposed circuits never run an edge both ways.
bool no_opposing_edges(const std::vector<SimpleCircuit>& circuits) {
  std::map<std::size_t, int> direction;
  for (const auto& c : circuits) {
    for (const auto& s : c.steps) {
      auto [it, inserted] = direction.emplace(s.edge, s.sign);
      if (!inserted && it->second != s.sign) return false;
    }
  }
  return true;
}

TEST(ChainNorm, Examples) {
  EXPECT_EQ(chain_norm(theta(), Chain(3)), 0);
  EXPECT_EQ(chain_norm(theta(), Chain({1, -1, 0})), 2);
  EXPECT_EQ(chain_norm(bouquet({Rational(1, 2), 3}), Chain({2, 1})), 4);
  EXPECT_THROW(chain_norm(theta(), Chain(2)), Error);
}

TEST(StableNorm, Examples) {
  auto g = theta();
  auto h = homology_basis(g);
  EXPECT_EQ(stable_norm(g, h, {0, 0}), 0);
  auto cls = basis_coords(g, h, Chain({1, -1, 0}));
  EXPECT_EQ(stable_norm(g, h, cls), 2);
  EXPECT_THROW(stable_norm(g, h, {1}), Error);
}

TEST(StableNorm, NormAxiomsOnRandomInputs) {
  std::mt19937_64 rng(21);
  for (const auto& g : testing::corpus()) {
    auto h = homology_basis(g);
    for (int trial = 0; trial < 25; ++trial) {
      auto y = testing::random_vector(rng, h.betti);
      auto z = testing::random_vector(rng, h.betti);
      auto alpha = testing::random_rational(rng);
      Rational abs_alpha = alpha < 0 ? Rational(-alpha) : alpha;
      EXPECT_EQ(stable_norm(g, h, scaled(y, alpha)), abs_alpha * stable_norm(g, h, y));
      EXPECT_EQ(stable_norm(g, h, scaled(y, 3)), 3 * stable_norm(g, h, y));
      RationalVector sum(h.betti);
      for (std::size_t j = 0; j < h.betti; ++j) sum[j] = y[j] + z[j];
      EXPECT_LE(stable_norm(g, h, sum), stable_norm(g, h, y) + stable_norm(g, h, z));
      bool zero = std::all_of(y.begin(), y.end(), [](const Rational& x) { return x == 0; });
      EXPECT_EQ(stable_norm(g, h, y) == 0, zero);
    }
  }
}

TEST(StableBall, BouquetIsCrossPolytope) {
  auto ball = ball_of(bouquet({2, 5}));
  EXPECT_EQ(chain_set(ball), (std::set<Chain>{Chain({Rational(1, 2), 0}), Chain({Rational(-1, 2), 0}),
                                                Chain({0, Rational(1, 5)}), Chain({0, Rational(-1, 5)})}));
}

TEST(StableBall, ThetaIsHexagon) {
  auto ball = ball_of(theta());
  const Rational h(1, 2);
  std::set<Chain> expected{Chain({h, -h, 0}), Chain({-h, h, 0}), Chain({h, 0, -h}),
                           Chain({-h, 0, h}), Chain({0, h, -h}), Chain({0, -h, h})};
  EXPECT_EQ(ball.betti, 2u);
  EXPECT_EQ(chain_set(ball), expected);
}

TEST(StableBall, K4MeetsVertexBound) {
  auto ball = ball_of(k4());
  EXPECT_EQ(ball.size(), 14u);
  EXPECT_EQ(vertex_count_bound(3), 14u);
  std::size_t triangles = 0;
  std::size_t squares = 0;
  for (const auto& c : ball.source_circuits) {
    triangles += c.length == 3;
    squares += c.length == 4;
  }
  EXPECT_EQ(triangles, 8u);
  EXPECT_EQ(squares, 6u);
}

TEST(StableBall, TreeIsDegenerate) {
  auto g = WeightedMultigraph::build(2, {{0, 1, 1}});
  auto ball = ball_of(g);
  EXPECT_EQ(ball.betti, 0u);
  EXPECT_EQ(ball.size(), 0u);
  EXPECT_EQ(dual_norm(ball, {}), 0);
  EXPECT_EQ(stable_norm(g, homology_basis(g), {}), 0);
}

TEST(StableBall, InvariantsOnCorpus) {
  for (const auto& g : testing::corpus()) {
    auto ball = ball_of(g);
    auto chains = chain_set(ball);
    EXPECT_EQ(chains.size(), ball.size());
    EXPECT_LE(ball.size(), vertex_count_bound(ball.betti));
    for (std::size_t i = 0; i < ball.size(); ++i) {
      EXPECT_EQ(chain_norm(g, ball.vertices_chain[i]), 1);
      EXPECT_TRUE(chains.contains(-ball.vertices_chain[i]));
      EXPECT_EQ(ball.vertices_chain[i], Rational(1) / ball.source_circuits[i].length * ball.source_circuits[i].chain);
    }
  }
}

TEST(DualNorm, Examples) {
  auto ball = ball_of(bouquet({1, 1}));
  EXPECT_EQ(dual_norm(ball, {0, 0}), 0);
  EXPECT_EQ(dual_norm(ball, {1, 0}), 1);
  EXPECT_THROW(dual_norm(ball, {1}), Error);

  std::mt19937_64 rng(4);
  for (const auto& g : testing::corpus()) {
    auto b = ball_of(g);
    for (int t = 0; t < 10; ++t) {
      auto xi = testing::random_vector(rng, b.betti);
      EXPECT_EQ(dual_norm(b, xi), dual_norm(b, scaled(xi, -1)));
    }
  }
}

TEST(DualNorm, DualPairingBound) {
  std::mt19937_64 rng(9);
  for (const auto& g : testing::corpus()) {
    auto h = homology_basis(g);
    auto ball = stable_ball(g, h, enumerate_circuits(g));
    for (int t = 0; t < 20; ++t) {
      auto xi = testing::random_vector(rng, h.betti);
      auto y = testing::random_vector(rng, h.betti);
      EXPECT_LE(dot(xi, y), dual_norm(ball, xi) * stable_norm(g, h, y));
    }
  }
}

TEST(MergeCircuits, Examples) {
  auto g = theta();
  auto c1 = canonicalize(g, {{0, 1}, {1, -1}});
  auto c2 = canonicalize(g, {{1, 1}, {2, -1}});
  auto merged = merge_circuits(g, c1, c2);
  ASSERT_EQ(merged.size(), 1u);
  EXPECT_EQ(format_steps(merged[0].steps), "+0 -2");

  EXPECT_TRUE(merge_circuits(g, c1, reverse(g, c1)).empty());

  auto loops = bouquet({1, 1});
  auto l0 = canonicalize(loops, {{0, 1}});
  auto l1 = canonicalize(loops, {{1, -1}});
  auto disjoint = merge_circuits(loops, l0, l1);
  EXPECT_EQ(disjoint, (std::vector<SimpleCircuit>{l0, l1}));
}

TEST(MergeCircuits, ContractOnAllPairs) {
  for (const auto& g : testing::corpus()) {
    auto set = enumerate_circuits(g);
    if (set.oriented.size() > 60) continue;
    for (const auto& a : set.oriented) {
      for (const auto& b : set.oriented) {
        auto pieces = merge_circuits(g, a, b);
        Chain total(g.edge_count());
        for (const auto& p : pieces) total += p.chain;
        EXPECT_EQ(total, a.chain + b.chain);
        EXPECT_TRUE(no_opposing_edges(pieces));
      }
    }
  }
}

TEST(DecomposeClass, Examples) {
  auto g = theta();
  auto h = homology_basis(g);
  EXPECT_TRUE(decompose_class(g, h, {0, 0}).circuits.empty());

  auto a = basis_coords(g, h, Chain({1, -1, 0}));
  auto b = basis_coords(g, h, Chain({0, 1, -1}));
  auto d = decompose_class(g, h, {a[0] + b[0], a[1] + b[1]});
  ASSERT_EQ(d.circuits.size(), 1u);
  EXPECT_EQ(format_steps(d.circuits[0].steps), "+0 -2");
  EXPECT_EQ(d.multiplicities[0], 1u);
  EXPECT_EQ(d.total_length(), 2);

  auto k = k4();
  auto hk = homology_basis(k);
  auto tri = canonicalize(k, {{0, 1}, {3, 1}, {1, -1}});
  auto cls = scaled(basis_coords(k, hk, tri.chain), 2);
  auto dk = decompose_class(k, hk, cls);
  ASSERT_EQ(dk.circuits.size(), 1u);
  EXPECT_EQ(dk.circuits[0], tri);
  EXPECT_EQ(dk.multiplicities[0], 2u);
  EXPECT_EQ(dk.total_length(), 6);

  try {
    decompose_class(g, h, {Rational(1, 2), 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonIntegralClass);
  }
}

TEST(DecomposeClass, SoundOnRandomClasses) {
  std::mt19937_64 rng(17);
  for (const auto& g : testing::corpus()) {
    auto h = homology_basis(g);
    for (int t = 0; t < 15; ++t) {
      auto a = testing::random_integral(rng, h.betti);
      auto d = decompose_class(g, h, a);
      EXPECT_EQ(d.total_chain(g.edge_count()), chain_from_coords(h, a));
      EXPECT_EQ(d.total_length(), stable_norm(g, h, a));
      EXPECT_TRUE(no_opposing_edges(d.circuits));
      for (auto m : d.multiplicities) EXPECT_GT(m, 0u);
    }
  }
}

TEST(VerifyVertices, CertifiesCircuitVertices) {
  for (const auto& g : {theta(), bouquet({1, 1}), k4()}) {
    auto ball = ball_of(g);
    auto report = verify_vertices(ball);
    EXPECT_TRUE(report.all_certified);
    EXPECT_EQ(report.vertices.size(), ball.size());
    for (const auto& v : report.vertices) {
      PointSet others(ball.betti, {});
      for (std::size_t j = 0; j < ball.size(); ++j) {
        if (j != v.index) others.points.push_back(ball.vertices_basis[j]);
      }
      EXPECT_TRUE(certificate_holds(v.certificate, ball.vertices_basis[v.index], others));
    }
  }
}

TEST(VerifyVertices, FlagsInjectedMidpoint) {
  auto ball = ball_of(theta());
  RationalVector mid(ball.betti);
  for (std::size_t d = 0; d < ball.betti; ++d) mid[d] = (ball.vertices_basis[0][d] + ball.vertices_basis[1][d]) / 2;
  ball.vertices_basis.push_back(mid);
  ball.vertices_chain.push_back(Rational(1, 2) * (ball.vertices_chain[0] + ball.vertices_chain[1]));
  auto report = verify_vertices(ball);
  EXPECT_FALSE(report.all_certified);
  EXPECT_FALSE(report.vertices.back().extreme);
  for (std::size_t i = 0; i + 1 < report.vertices.size(); ++i) EXPECT_TRUE(report.vertices[i].extreme);
}

}  // namespace
}  // namespace stablenorm
