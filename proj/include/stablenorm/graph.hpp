#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "stablenorm/rational.hpp"

namespace stablenorm {

struct EdgeSpec {
  std::size_t tail = 0;
  std::size_t head = 0;
  Rational weight = 1;
};

struct Edge {
  std::size_t id = 0;
  std::size_t tail = 0;
  std::size_t head = 0;
  Rational weight;

  bool is_loop() const { return tail == head; }
  /// The endpoint opposite to `v` (v itself for a loop).
  std::size_t other(std::size_t v) const { return v == tail ? head : tail; }

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Finite connected multigraph with strictly positive rational weights.
/// Loops and parallel edges are allowed; edge orientation is bookkeeping only.
class WeightedMultigraph {
 public:
  /// Validates and builds. Edge ids follow input order.
  /// Throws NonPositiveWeight, DanglingEndpoint or Disconnected.
  static WeightedMultigraph build(std::size_t vertex_count, const std::vector<EdgeSpec>& edges);

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(std::size_t id) const { return edges_.at(id); }
  RationalVector weights() const;

  /// Edge ids touching `v`, ascending; a loop is listed once.
  std::span<const std::size_t> incident(std::size_t v) const { return incidence_.at(v); }

  /// First Betti number k - |V| + 1.
  std::size_t betti() const { return edges_.size() + 1 - vertex_count_; }

  friend bool operator==(const WeightedMultigraph& a, const WeightedMultigraph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

 private:
  WeightedMultigraph() = default;

  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> incidence_;
};

/// Vector of rational coefficients indexed by edge id.
struct Chain {
  RationalVector coefficients;

  Chain() = default;
  explicit Chain(std::size_t edge_count) : coefficients(edge_count) {}
  explicit Chain(RationalVector c) : coefficients(std::move(c)) {}

  std::size_t size() const { return coefficients.size(); }
  const Rational& operator[](std::size_t i) const { return coefficients[i]; }
  Rational& operator[](std::size_t i) { return coefficients[i]; }
  bool is_zero() const;

  Chain& operator+=(const Chain& other);
  Chain& operator-=(const Chain& other);
  Chain& operator*=(const Rational& factor);
  friend Chain operator+(Chain a, const Chain& b) { return a += b; }
  friend Chain operator-(Chain a, const Chain& b) { return a -= b; }
  friend Chain operator*(const Rational& s, Chain a) { return a *= s; }
  friend Chain operator-(Chain a) { return a *= Rational(-1); }
  friend bool operator==(const Chain&, const Chain&) = default;
  friend bool operator<(const Chain& a, const Chain& b) { return a.coefficients < b.coefficients; }
};

/// Simplicial boundary: each edge contributes head - tail; loops contribute nothing.
RationalVector boundary(const WeightedMultigraph& graph, const Chain& chain);

bool is_cycle(const WeightedMultigraph& graph, const Chain& chain);

/// Breadth-first spanning tree from vertex 0 (edges scanned in id order) and
/// the fundamental cycles of the remaining edges.
struct HomologyBasis {
  std::vector<std::size_t> forest_edges;   // ascending
  std::vector<std::size_t> cotree_edges;   // ascending, one per basis vector
  std::vector<Chain> fundamental_cycles;   // +1 on its own cotree edge
  std::size_t betti = 0;

  /// k x b matrix whose columns are the fundamental cycles.
  RationalMatrix matrix() const;
};

HomologyBasis homology_basis(const WeightedMultigraph& graph);

/// Coordinates of a cycle: its coefficients on the cotree edges. Throws NotACycle.
RationalVector basis_coords(const WeightedMultigraph& graph, const HomologyBasis& basis, const Chain& cycle);

/// Sum of coords[j] * fundamental_cycles[j].
Chain chain_from_coords(const HomologyBasis& basis, const RationalVector& coords);

}  // namespace stablenorm
