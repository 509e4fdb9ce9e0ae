#pragma once

#include <cstddef>
#include <vector>

#include "stablenorm/circuits.hpp"
#include "stablenorm/graph.hpp"
#include "stablenorm/polytope.hpp"

namespace stablenorm {

/// Weighted l1 norm sum_i w_i |u_i| on the chain space.
Rational chain_norm(const WeightedMultigraph& graph, const Chain& chain);

/// Stable norm of a homology class given in basis coordinates. A class has a
/// unique cycle representative, so this is the chain norm of that cycle.
Rational stable_norm(const WeightedMultigraph& graph, const HomologyBasis& basis, const RationalVector& coords);

/// V-representation of the stable-norm unit ball: one vertex C / |C|_w per
/// simple oriented circuit C, in both chain and basis coordinates.
struct StableBall {
  std::size_t betti = 0;
  std::vector<Chain> vertices_chain;
  std::vector<RationalVector> vertices_basis;
  std::vector<SimpleCircuit> source_circuits;  // parallel to the vertex lists

  std::size_t size() const { return vertices_basis.size(); }
  PointSet basis_points() const { return PointSet(betti, vertices_basis); }
};

/// Upper bound 2(2^b - 1) on the vertex count; saturates at SIZE_MAX.
std::size_t vertex_count_bound(std::size_t betti);

StableBall stable_ball(const WeightedMultigraph& graph, const HomologyBasis& basis, const CircuitSet& circuits);

/// Support function of the ball, i.e. the dual norm of a covector in basis
/// coordinates. Throws DegenerateBall when b = 0 and xi is nonempty.
Rational dual_norm(const StableBall& ball, const RationalVector& xi);

/// Cancels edges the two circuits run in opposite directions, then cuts the
/// remaining closed curves at their first revisited vertex until every piece
/// is simple. The pieces sum to [c1] + [c2] and never disagree on an edge's direction.
std::vector<SimpleCircuit> merge_circuits(const WeightedMultigraph& graph, const SimpleCircuit& c1,
                                          const SimpleCircuit& c2);

struct Decomposition {
  std::vector<SimpleCircuit> circuits;     // distinct, canonical order
  std::vector<std::size_t> multiplicities; // positive, parallel to circuits

  Rational total_length() const;
  Chain total_chain(std::size_t edge_count) const;
};

/// Norm-additive splitting of an integral class into simple circuits.
/// Throws NonIntegralClass or DimensionMismatch.
Decomposition decompose_class(const WeightedMultigraph& graph, const HomologyBasis& basis, const RationalVector& coords);

struct VertexCheck {
  std::size_t index = 0;
  bool extreme = false;
  HullCertificate certificate;
};

struct VerificationReport {
  std::vector<VertexCheck> vertices;
  bool all_certified = true;
};

/// Certifies, with an exact LP, that no listed vertex lies in the hull of the others.
VerificationReport verify_vertices(const StableBall& ball);

}  // namespace stablenorm
