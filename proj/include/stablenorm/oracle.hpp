#pragma once

#include <cstddef>
#include <vector>

#include "stablenorm/graph.hpp"
#include "stablenorm/polytope.hpp"

namespace stablenorm::oracle {

// Brute-force reference computations of the stable ball that never look at
// circuits: they intersect the weighted l1 cross-polytope of the chain space
// with the cycle subspace directly.

struct Options {
  std::size_t max_edges = 12;
  // Guard for the b-subset method only.
  std::size_t max_subsets = 5'000'000;
};

/// Deduplicated normals a with {y : a.y <= 1} describing the ball in basis
/// coordinates: a = B^T (s o w) for every sign vector s in {-1,+1}^k.
/// Sorted lexicographically. Throws CapExceeded, DegenerateBall.
std::vector<RationalVector> facet_normals(const WeightedMultigraph& graph, const HomologyBasis& basis,
                                          const Options& options = {});

/// Vertex set of the ball via exact double description over the facet
/// normals, followed by an extremality filter. Sorted lexicographically.
PointSet ball_by_intersection(const WeightedMultigraph& graph, const HomologyBasis& basis,
                              const Options& options = {});

/// Same vertex set, by solving every b-subset of facet normals as a square
/// system and keeping feasible solutions. Only viable on tiny instances.
PointSet ball_by_facet_subsets(const WeightedMultigraph& graph, const HomologyBasis& basis,
                               const Options& options = {});

struct InfimumResult {
  Rational norm;
  Chain minimizer;
};

/// inf sum w_i |u_i| over cycles u with basis coordinates y, as an exact LP
/// in the positive and negative parts of u.
InfimumResult norm_by_infimum(const WeightedMultigraph& graph, const HomologyBasis& basis, const RationalVector& coords,
                              const Options& options = {});

}  // namespace stablenorm::oracle
