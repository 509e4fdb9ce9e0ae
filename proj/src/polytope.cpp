#include "stablenorm/polytope.hpp"

#include <string>

#include "stablenorm/error.hpp"
#include "stablenorm/linear_program.hpp"

namespace stablenorm {

namespace {

void require_dimension(const RationalVector& p, std::size_t dim) {
  if (p.size() != dim) {
    throw Error(ErrorKind::DimensionMismatch,
                "point of dimension " + std::to_string(p.size()) + " against set of dimension " + std::to_string(dim));
  }
}

}  // namespace

PointSet::PointSet(std::size_t dim, std::vector<RationalVector> pts) : dimension(dim), points(std::move(pts)) {
  for (const auto& p : points) require_dimension(p, dimension);
}

HullCertificate hull_contains(const RationalVector& p, const PointSet& vertices) {
  require_dimension(p, vertices.dimension);
  const auto d = vertices.dimension;
  const auto n = vertices.size();

  // Columns are the points; rows are the coordinates plus the affine row.
  RationalMatrix a(d + 1, RationalVector(n));
  RationalVector b(d + 1);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < d; ++i) a[i][j] = vertices.points[j][i];
    a[d][j] = 1;
  }
  for (std::size_t i = 0; i < d; ++i) b[i] = p[i];
  b[d] = 1;

  auto lp = solve_linear_program(a, b, RationalVector(n));
  HullCertificate cert;
  if (lp.status == LinearProgramResult::Status::Optimal) {
    cert.contained = true;
    cert.weights = std::move(lp.solution);
    return cert;
  }
  // y.A <= 0 and y.b > 0: <y_x, v> + y_0 <= 0 < <y_x, p> + y_0.
  cert.contained = false;
  cert.functional.assign(lp.farkas.begin(), lp.farkas.begin() + static_cast<std::ptrdiff_t>(d));
  cert.offset = -lp.farkas[d];
  return cert;
}

ExtremalityResult is_extreme(const RationalVector& p, const PointSet& others) {
  ExtremalityResult r;
  r.certificate = hull_contains(p, others);
  r.extreme = !r.certificate.contained;
  return r;
}

bool certificate_holds(const HullCertificate& cert, const RationalVector& p, const PointSet& vertices) {
  if (p.size() != vertices.dimension) return false;
  if (cert.contained) {
    if (cert.weights.size() != vertices.size()) return false;
    Rational total = 0;
    RationalVector combo(vertices.dimension);
    for (std::size_t j = 0; j < vertices.size(); ++j) {
      if (cert.weights[j] < 0) return false;
      total += cert.weights[j];
      for (std::size_t i = 0; i < vertices.dimension; ++i) combo[i] += cert.weights[j] * vertices.points[j][i];
    }
    return total == 1 && combo == p;
  }
  if (cert.functional.size() != vertices.dimension) return false;
  for (const auto& v : vertices.points) {
    if (dot(cert.functional, v) > cert.offset) return false;
  }
  return dot(cert.functional, p) > cert.offset;
}

Rational support_value(const RationalVector& xi, const PointSet& vertices) {
  if (vertices.empty()) throw Error(ErrorKind::EmptySet, "support of an empty point set");
  require_dimension(xi, vertices.dimension);
  Rational best = dot(xi, vertices.points.front());
  for (std::size_t j = 1; j < vertices.size(); ++j) {
    Rational v = dot(xi, vertices.points[j]);
    if (v > best) best = v;
  }
  return best;
}

}  // namespace stablenorm
