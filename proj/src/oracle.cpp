#include "stablenorm/oracle.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <string>

#include <boost/dynamic_bitset.hpp>

#include "stablenorm/error.hpp"
#include "stablenorm/linear_program.hpp"

namespace stablenorm::oracle {

namespace {

using IntegerVector = std::vector<Integer>;
using Bitset = boost::dynamic_bitset<>;

void check_caps(const WeightedMultigraph& graph, const HomologyBasis& basis, const Options& options) {
  if (graph.edge_count() > options.max_edges) {
    throw Error(ErrorKind::CapExceeded, std::to_string(graph.edge_count()) + " edges exceed the oracle cap of " +
                                            std::to_string(options.max_edges));
  }
  if (basis.betti == 0) throw Error(ErrorKind::DegenerateBall, "b = 0: the ball is the single point 0");
}

// Solves m x = rhs for square m; nullopt when singular.
std::optional<RationalVector> solve_square(RationalMatrix m, RationalVector rhs) {
  const auto n = m.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(m[pivot], m[col]);
    std::swap(rhs[pivot], rhs[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  RationalVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i] / m[i][i];
  return x;
}

bool satisfies_all(const RationalVector& y, const std::vector<RationalVector>& normals) {
  return std::all_of(normals.begin(), normals.end(), [&](const RationalVector& a) { return dot(a, y) <= 1; });
}

// Keeps the points that are not in the hull of the rest; sorts them.
PointSet extreme_only(std::size_t dim, std::set<RationalVector> candidates) {
  std::vector<RationalVector> pts(candidates.begin(), candidates.end());
  PointSet out;
  out.dimension = dim;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    PointSet others;
    others.dimension = dim;
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (j != i) others.points.push_back(pts[j]);
    }
    if (is_extreme(pts[i], others).extreme) out.points.push_back(pts[i]);
  }
  return out;
}

Integer dot(const IntegerVector& a, const IntegerVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  }
  return s;
}

void make_primitive(IntegerVector& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, Integer(abs(x)));
  if (g > 1) {
    for (auto& x : v) x /= g;
  }
}

// Row (a, -1) of the homogenized cone {(y, t) : a.y <= t}, scaled to integers.
IntegerVector homogenized_row(const RationalVector& a) {
  Integer scale = 1;
  for (const auto& x : a) scale = lcm(scale, Integer(boost::multiprecision::denominator(x)));
  IntegerVector row;
  row.reserve(a.size() + 1);
  for (const auto& x : a) row.push_back(Integer(boost::multiprecision::numerator(x) * (scale / boost::multiprecision::denominator(x))));
  row.push_back(-scale);
  return row;
}

struct Ray {
  IntegerVector coords;
  Bitset zeros;  // indices of processed constraints tight at this ray
};

// Extreme rays of the pointed cone {x : row.x <= 0 for all rows}, by the
// double description method with the combinatorial adjacency test.
std::vector<Ray> double_description(const std::vector<IntegerVector>& rows, std::size_t dim) {
  const auto m = rows.size();

  // Greedy choice of dim linearly independent rows for the initial simplicial cone.
  std::vector<std::size_t> initial;
  RationalMatrix echelon;
  for (std::size_t i = 0; i < m && initial.size() < dim; ++i) {
    RationalVector v(rows[i].begin(), rows[i].end());
    for (const auto& e : echelon) {
      std::size_t lead = 0;
      while (e[lead] == 0) ++lead;
      if (v[lead] != 0) {
        Rational f = v[lead] / e[lead];
        for (std::size_t c = 0; c < dim; ++c) v[c] -= f * e[c];
      }
    }
    if (std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; })) continue;
    echelon.push_back(std::move(v));
    initial.push_back(i);
  }
  if (initial.size() < dim) throw Error(ErrorKind::DegenerateBall, "constraint system is not full rank");

  // Rays of {x : M_S x <= 0} are the columns of -M_S^{-1}.
  std::vector<Ray> rays;
  for (std::size_t j = 0; j < dim; ++j) {
    RationalMatrix ms;
    for (auto i : initial) ms.emplace_back(rows[i].begin(), rows[i].end());
    RationalVector rhs(dim);
    rhs[j] = -1;
    auto x = solve_square(std::move(ms), std::move(rhs));
    Integer scale = 1;
    for (const auto& c : *x) scale = lcm(scale, Integer(boost::multiprecision::denominator(c)));
    Ray r;
    for (const auto& c : *x) r.coords.push_back(Integer(boost::multiprecision::numerator(c) * (scale / boost::multiprecision::denominator(c))));
    make_primitive(r.coords);
    r.zeros.resize(m);
    for (std::size_t jj = 0; jj < dim; ++jj) {
      if (jj != j) r.zeros.set(initial[jj]);
    }
    rays.push_back(std::move(r));
  }

  Bitset processed(m);
  for (auto i : initial) processed.set(i);

  for (std::size_t i = 0; i < m; ++i) {
    if (processed.test(i)) continue;
    std::vector<Integer> value(rays.size());
    std::vector<std::size_t> plus, minus;
    std::vector<Ray> next;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      value[r] = dot(rows[i], rays[r].coords);
      if (value[r] > 0) {
        plus.push_back(r);
      } else {
        if (value[r] == 0) rays[r].zeros.set(i);
        if (value[r] < 0) minus.push_back(r);
        next.push_back(rays[r]);
      }
    }
    processed.set(i);
    if (plus.empty()) {
      rays = std::move(next);
      continue;
    }
    for (auto p : plus) {
      for (auto q : minus) {
        Bitset common = rays[p].zeros & rays[q].zeros;
        if (common.count() + 2 < dim) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == q) continue;
          if (common.is_subset_of(rays[r].zeros)) adjacent = false;
        }
        if (!adjacent) continue;
        Ray fresh;
        fresh.coords.resize(dim);
        for (std::size_t c = 0; c < dim; ++c) {
          fresh.coords[c] = value[p] * rays[q].coords[c] - value[q] * rays[p].coords[c];
        }
        make_primitive(fresh.coords);
        fresh.zeros = common;
        fresh.zeros.set(i);
        next.push_back(std::move(fresh));
      }
    }
    rays = std::move(next);
  }
  return rays;
}

}  // namespace

std::vector<RationalVector> facet_normals(const WeightedMultigraph& graph, const HomologyBasis& basis,
                                          const Options& options) {
  check_caps(graph, basis, options);
  const auto k = graph.edge_count();
  const auto b = basis.betti;
  const auto matrix = basis.matrix();

  // Row i of the basis matrix scaled by w_i; a_s = sum_i s_i * scaled_row_i.
  RationalMatrix scaled_rows(k);
  for (std::size_t i = 0; i < k; ++i) scaled_rows[i] = scaled(matrix[i], graph.edge(i).weight);

  std::set<RationalVector> unique;
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    RationalVector a(b);
    for (std::size_t i = 0; i < k; ++i) {
      const bool negative = (mask >> i) & 1U;
      for (std::size_t j = 0; j < b; ++j) {
        if (scaled_rows[i][j] == 0) continue;
        if (negative) {
          a[j] -= scaled_rows[i][j];
        } else {
          a[j] += scaled_rows[i][j];
        }
      }
    }
    unique.insert(std::move(a));
  }
  return {unique.begin(), unique.end()};
}

PointSet ball_by_intersection(const WeightedMultigraph& graph, const HomologyBasis& basis, const Options& options) {
  const auto normals = facet_normals(graph, basis, options);
  const auto b = basis.betti;

  std::vector<IntegerVector> rows;
  rows.reserve(normals.size());
  for (const auto& a : normals) rows.push_back(homogenized_row(a));

  std::set<RationalVector> candidates;
  for (const auto& ray : double_description(rows, b + 1)) {
    const Integer& t = ray.coords[b];
    if (t <= 0) throw Error(ErrorKind::DegenerateBall, "unbounded direction in a norm ball");
    RationalVector y(b);
    for (std::size_t j = 0; j < b; ++j) y[j] = Rational(ray.coords[j], t);
    if (!satisfies_all(y, normals)) throw Error(ErrorKind::DegenerateBall, "double description produced an infeasible ray");
    candidates.insert(std::move(y));
  }
  return extreme_only(b, std::move(candidates));
}

PointSet ball_by_facet_subsets(const WeightedMultigraph& graph, const HomologyBasis& basis, const Options& options) {
  const auto normals = facet_normals(graph, basis, options);
  const auto b = basis.betti;
  const auto f = normals.size();

  // C(f, b) with early exit once over the guard.
  double subsets = 1;
  for (std::size_t i = 0; i < b; ++i) subsets = subsets * static_cast<double>(f - i) / static_cast<double>(i + 1);
  if (f < b || subsets > static_cast<double>(options.max_subsets)) {
    throw Error(ErrorKind::CapExceeded, "too many facet subsets for the subset method");
  }

  std::set<RationalVector> candidates;
  std::vector<std::size_t> pick(b);
  for (std::size_t i = 0; i < b; ++i) pick[i] = i;
  while (true) {
    RationalMatrix m;
    for (auto i : pick) m.push_back(normals[i]);
    if (auto y = solve_square(std::move(m), RationalVector(b, Rational(1))); y && satisfies_all(*y, normals)) {
      candidates.insert(std::move(*y));
    }
    std::size_t i = b;
    while (i > 0 && pick[i - 1] == f - b + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < b; ++j) pick[j] = pick[j - 1] + 1;
  }
  return extreme_only(b, std::move(candidates));
}

InfimumResult norm_by_infimum(const WeightedMultigraph& graph, const HomologyBasis& basis, const RationalVector& coords,
                              const Options& options) {
  const auto k = graph.edge_count();
  if (k > options.max_edges) {
    throw Error(ErrorKind::CapExceeded, std::to_string(k) + " edges exceed the oracle cap");
  }
  if (coords.size() != basis.betti) throw Error(ErrorKind::DimensionMismatch, "class has wrong number of coordinates");

  // Variables: u+ (k entries) then u- (k entries).
  const auto n = graph.vertex_count();
  RationalMatrix a(n + basis.betti, RationalVector(2 * k));
  RationalVector rhs(n + basis.betti);
  for (const auto& e : graph.edges()) {
    if (e.is_loop()) continue;
    a[e.head][e.id] += 1;
    a[e.tail][e.id] -= 1;
    a[e.head][k + e.id] -= 1;
    a[e.tail][k + e.id] += 1;
  }
  for (std::size_t j = 0; j < basis.betti; ++j) {
    const auto id = basis.cotree_edges[j];
    a[n + j][id] = 1;
    a[n + j][k + id] = -1;
    rhs[n + j] = coords[j];
  }
  RationalVector cost(2 * k);
  for (const auto& e : graph.edges()) cost[e.id] = cost[k + e.id] = e.weight;

  auto lp = solve_linear_program(a, rhs, cost);
  if (lp.status != LinearProgramResult::Status::Optimal) {
    throw Error(ErrorKind::NotACycle, "no cycle has the requested coordinates");
  }
  InfimumResult result;
  result.norm = lp.objective;
  result.minimizer = Chain(k);
  for (std::size_t i = 0; i < k; ++i) result.minimizer[i] = lp.solution[i] - lp.solution[k + i];
  return result;
}

}  // namespace stablenorm::oracle
