#include "stablenorm/graph.hpp"

#include <gtest/gtest.h>

#include <random>

#include "stablenorm/error.hpp"
#include "test_support.hpp"

namespace stablenorm {
namespace {

using testing::bouquet;
using testing::k4;
using testing::theta;

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::Parse;
}

TEST(BuildGraph, ThetaAndBouquet) {
  auto g = theta();
  EXPECT_EQ(g.vertex_count(), 2u);
  EXPECT_EQ(g.edge_count(), 3u);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(g.edge(i).id, i);

  auto b = bouquet({1, 1});
  EXPECT_EQ(b.edge_count(), 2u);
  EXPECT_TRUE(b.edge(0).is_loop());
  EXPECT_EQ(b.incident(0).size(), 2u);
}

TEST(BuildGraph, ValidationErrors) {
  EXPECT_EQ(kind_of([] { WeightedMultigraph::build(2, {{0, 1, 0}}); }), ErrorKind::NonPositiveWeight);
  EXPECT_EQ(kind_of([] { WeightedMultigraph::build(2, {{0, 1, Rational(-1, 2)}}); }), ErrorKind::NonPositiveWeight);
  EXPECT_EQ(kind_of([] { WeightedMultigraph::build(2, {{0, 2, 1}}); }), ErrorKind::DanglingEndpoint);
  EXPECT_EQ(kind_of([] { WeightedMultigraph::build(3, {{0, 1, 1}, {0, 0, 1}}); }), ErrorKind::Disconnected);
}

TEST(Boundary, Examples) {
  auto g = theta();
  EXPECT_EQ(boundary(g, Chain({1, -1, 0})), RationalVector({0, 0}));

  auto loop = bouquet({1});
  EXPECT_EQ(boundary(loop, Chain(RationalVector{1})), RationalVector{0});

  auto path = WeightedMultigraph::build(2, {{0, 1, 1}});
  EXPECT_EQ(boundary(path, Chain(RationalVector{1})), RationalVector({-1, 1}));

  EXPECT_THROW(boundary(g, Chain({1, 1})), Error);
}

TEST(Boundary, IsLinear) {
  std::mt19937_64 rng(11);
  for (const auto& g : testing::corpus()) {
    for (int trial = 0; trial < 10; ++trial) {
      Chain u(testing::random_vector(rng, g.edge_count()));
      Chain v(testing::random_vector(rng, g.edge_count()));
      auto alpha = testing::random_rational(rng);
      auto beta = testing::random_rational(rng);
      auto lhs = boundary(g, alpha * u + beta * v);
      auto bu = boundary(g, u);
      auto bv = boundary(g, v);
      for (std::size_t i = 0; i < lhs.size(); ++i) EXPECT_EQ(lhs[i], alpha * bu[i] + beta * bv[i]);
    }
  }
}

TEST(HomologyBasis, ThetaBouquetK4) {
  auto h = homology_basis(theta());
  EXPECT_EQ(h.betti, 2u);
  EXPECT_EQ(h.forest_edges, std::vector<std::size_t>({0}));
  EXPECT_EQ(h.cotree_edges, std::vector<std::size_t>({1, 2}));

  auto hb = homology_basis(bouquet({1, 1}));
  EXPECT_EQ(hb.betti, 2u);
  EXPECT_EQ(hb.cotree_edges, std::vector<std::size_t>({0, 1}));

  EXPECT_EQ(homology_basis(k4()).betti, 3u);
}

TEST(HomologyBasis, TreeHasNoCycles) {
  auto g = WeightedMultigraph::build(3, {{0, 1, 1}, {1, 2, 2}});
  auto h = homology_basis(g);
  EXPECT_EQ(h.betti, 0u);
  EXPECT_TRUE(chain_from_coords(h, {}).is_zero());
}

TEST(HomologyBasis, InvariantsOnCorpus) {
  for (const auto& g : testing::corpus()) {
    auto h = homology_basis(g);
    EXPECT_EQ(h.betti + g.vertex_count(), g.edge_count() + 1);
    EXPECT_EQ(h.forest_edges.size(), g.vertex_count() - 1);
    for (std::size_t j = 0; j < h.betti; ++j) {
      EXPECT_TRUE(is_cycle(g, h.fundamental_cycles[j]));
      for (std::size_t i = 0; i < h.betti; ++i) {
        EXPECT_EQ(h.fundamental_cycles[j][h.cotree_edges[i]], i == j ? 1 : 0);
      }
    }
  }
}

TEST(ChainFromCoords, Examples) {
  auto g = theta();
  auto h = homology_basis(g);
  EXPECT_TRUE(chain_from_coords(h, {0, 0}).is_zero());
  EXPECT_EQ(chain_from_coords(h, {1, 0}), h.fundamental_cycles[0]);
  // Cycle through e1 closed by the tree edge e0 run backwards.
  EXPECT_EQ(chain_from_coords(h, {1, 0}), Chain({-1, 1, 0}));
  EXPECT_THROW(chain_from_coords(h, {1}), Error);
}

TEST(BasisCoords, RejectsNonCycles) {
  auto g = theta();
  auto h = homology_basis(g);
  try {
    basis_coords(g, h, Chain({1, 0, 0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotACycle);
  }
}

TEST(BasisCoords, RoundTripOnRandomCycles) {
  std::mt19937_64 rng(5);
  for (const auto& g : testing::corpus()) {
    auto h = homology_basis(g);
    for (int trial = 0; trial < 20; ++trial) {
      auto y = testing::random_vector(rng, h.betti);
      auto u = chain_from_coords(h, y);
      EXPECT_TRUE(is_cycle(g, u));
      EXPECT_EQ(basis_coords(g, h, u), y);
      EXPECT_EQ(chain_from_coords(h, basis_coords(g, h, u)), u);
    }
  }
}

}  // namespace
}  // namespace stablenorm
