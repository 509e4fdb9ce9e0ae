#pragma once

#include <cstddef>
#include <vector>

#include "stablenorm/rational.hpp"

namespace stablenorm {

/// Points sharing one dimension; the carrier for V-representations.
struct PointSet {
  std::size_t dimension = 0;
  std::vector<RationalVector> points;

  PointSet() = default;
  PointSet(std::size_t dim, std::vector<RationalVector> pts);

  std::size_t size() const { return points.size(); }
  bool empty() const { return points.empty(); }
};

/// Exact answer to "is p a convex combination of the set?".
///
/// When contained, `weights` are nonnegative, sum to one and reproduce p.
/// Otherwise `functional`/`offset` separate strictly:
///   <functional, q> <= offset for every q in the set, and <functional, p> > offset.
struct HullCertificate {
  bool contained = false;
  RationalVector weights;
  RationalVector functional;
  Rational offset;
};

HullCertificate hull_contains(const RationalVector& p, const PointSet& vertices);

/// p is extreme w.r.t. `others` iff it is not in their convex hull.
/// The certificate is the hull-membership one (separator on success).
struct ExtremalityResult {
  bool extreme = false;
  HullCertificate certificate;
};

ExtremalityResult is_extreme(const RationalVector& p, const PointSet& others);

/// Checks a certificate against the data it claims to describe.
bool certificate_holds(const HullCertificate& cert, const RationalVector& p, const PointSet& vertices);

/// max <xi, v> over the set. Throws EmptySet.
Rational support_value(const RationalVector& xi, const PointSet& vertices);

}  // namespace stablenorm
