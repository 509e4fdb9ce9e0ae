#include "stablenorm/graph.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <string>

#include "stablenorm/error.hpp"

namespace stablenorm {

namespace {

void require_size(const Chain& chain, std::size_t expected) {
  if (chain.size() != expected) {
    throw Error(ErrorKind::DimensionMismatch,
                "chain has " + std::to_string(chain.size()) + " coefficients, graph has " +
                    std::to_string(expected) + " edges");
  }
}

}  // namespace

WeightedMultigraph WeightedMultigraph::build(std::size_t vertex_count, const std::vector<EdgeSpec>& edges) {
  WeightedMultigraph g;
  g.vertex_count_ = vertex_count;
  g.incidence_.resize(vertex_count);
  g.edges_.reserve(edges.size());

  if (vertex_count == 0) throw Error(ErrorKind::Disconnected, "graph has no vertices");

  for (std::size_t id = 0; id < edges.size(); ++id) {
    const auto& spec = edges[id];
    if (spec.tail >= vertex_count || spec.head >= vertex_count) {
      throw Error(ErrorKind::DanglingEndpoint, "edge " + std::to_string(id) + " has endpoint outside 0.." +
                                                   std::to_string(vertex_count - 1));
    }
    if (spec.weight <= 0) {
      throw Error(ErrorKind::NonPositiveWeight,
                  "edge " + std::to_string(id) + " has weight " + to_string(spec.weight));
    }
    g.edges_.push_back(Edge{id, spec.tail, spec.head, spec.weight});
    g.incidence_[spec.tail].push_back(id);
    if (spec.head != spec.tail) g.incidence_[spec.head].push_back(id);
  }

  std::vector<bool> seen(vertex_count, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (auto id : g.incidence_[v]) {
      auto w = g.edges_[id].other(v);
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != vertex_count) {
    throw Error(ErrorKind::Disconnected,
                "only " + std::to_string(reached) + " of " + std::to_string(vertex_count) + " vertices reachable from 0");
  }
  return g;
}

RationalVector WeightedMultigraph::weights() const {
  RationalVector w;
  w.reserve(edges_.size());
  for (const auto& e : edges_) w.push_back(e.weight);
  return w;
}

bool Chain::is_zero() const {
  return std::all_of(coefficients.begin(), coefficients.end(), [](const Rational& c) { return c == 0; });
}

Chain& Chain::operator+=(const Chain& other) {
  if (other.size() != size()) throw Error(ErrorKind::DimensionMismatch, "adding chains of different length");
  for (std::size_t i = 0; i < size(); ++i) coefficients[i] += other.coefficients[i];
  return *this;
}

Chain& Chain::operator-=(const Chain& other) {
  if (other.size() != size()) throw Error(ErrorKind::DimensionMismatch, "subtracting chains of different length");
  for (std::size_t i = 0; i < size(); ++i) coefficients[i] -= other.coefficients[i];
  return *this;
}

Chain& Chain::operator*=(const Rational& factor) {
  for (auto& c : coefficients) c *= factor;
  return *this;
}

RationalVector boundary(const WeightedMultigraph& graph, const Chain& chain) {
  require_size(chain, graph.edge_count());
  RationalVector out(graph.vertex_count());
  for (const auto& e : graph.edges()) {
    const auto& c = chain[e.id];
    if (c == 0 || e.is_loop()) continue;
    out[e.head] += c;
    out[e.tail] -= c;
  }
  return out;
}

bool is_cycle(const WeightedMultigraph& graph, const Chain& chain) {
  auto b = boundary(graph, chain);
  return std::all_of(b.begin(), b.end(), [](const Rational& x) { return x == 0; });
}

RationalMatrix HomologyBasis::matrix() const {
  std::size_t k = fundamental_cycles.empty() ? forest_edges.size() + cotree_edges.size()
                                             : fundamental_cycles.front().size();
  RationalMatrix m(k, RationalVector(betti));
  for (std::size_t j = 0; j < betti; ++j) {
    for (std::size_t i = 0; i < k; ++i) m[i][j] = fundamental_cycles[j][i];
  }
  return m;
}

HomologyBasis homology_basis(const WeightedMultigraph& graph) {
  const auto n = graph.vertex_count();
  const auto k = graph.edge_count();

  // parent_edge[v] is the tree edge joining v to its BFS parent.
  std::vector<std::optional<std::size_t>> parent_edge(n);
  std::vector<std::size_t> parent(n, 0);
  std::vector<bool> visited(n, false);
  std::vector<bool> in_tree(k, false);

  std::deque<std::size_t> queue{0};
  visited[0] = true;
  while (!queue.empty()) {
    auto v = queue.front();
    queue.pop_front();
    for (auto id : graph.incident(v)) {
      auto w = graph.edge(id).other(v);
      if (visited[w]) continue;
      visited[w] = true;
      parent[w] = v;
      parent_edge[w] = id;
      in_tree[id] = true;
      queue.push_back(w);
    }
  }

  // Chain of the tree path from v up to the root.
  auto path_to_root = [&](std::size_t v) {
    Chain path(k);
    while (parent_edge[v]) {
      const auto& e = graph.edge(*parent_edge[v]);
      path[e.id] += (e.tail == v) ? 1 : -1;
      v = parent[v];
    }
    return path;
  };

  HomologyBasis basis;
  for (std::size_t id = 0; id < k; ++id) {
    (in_tree[id] ? basis.forest_edges : basis.cotree_edges).push_back(id);
  }
  basis.betti = basis.cotree_edges.size();
  for (auto id : basis.cotree_edges) {
    const auto& e = graph.edge(id);
    Chain cycle(k);
    cycle[id] = 1;
    if (!e.is_loop()) {
      cycle += path_to_root(e.head);
      cycle -= path_to_root(e.tail);
    }
    basis.fundamental_cycles.push_back(std::move(cycle));
  }
  return basis;
}

RationalVector basis_coords(const WeightedMultigraph& graph, const HomologyBasis& basis, const Chain& cycle) {
  require_size(cycle, graph.edge_count());
  if (!is_cycle(graph, cycle)) throw Error(ErrorKind::NotACycle, "chain has nonzero boundary");
  RationalVector coords;
  coords.reserve(basis.betti);
  for (auto id : basis.cotree_edges) coords.push_back(cycle[id]);
  return coords;
}

Chain chain_from_coords(const HomologyBasis& basis, const RationalVector& coords) {
  if (coords.size() != basis.betti) {
    throw Error(ErrorKind::DimensionMismatch, "expected " + std::to_string(basis.betti) + " coordinates, got " +
                                                  std::to_string(coords.size()));
  }
  Chain out(basis.forest_edges.size() + basis.cotree_edges.size());
  for (std::size_t j = 0; j < basis.betti; ++j) {
    if (coords[j] == 0) continue;
    out += coords[j] * basis.fundamental_cycles[j];
  }
  return out;
}

}  // namespace stablenorm
