#include "stablenorm/stable_norm.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <string>

#include "stablenorm/error.hpp"

namespace stablenorm {

Rational chain_norm(const WeightedMultigraph& graph, const Chain& chain) {
  if (chain.size() != graph.edge_count()) {
    throw Error(ErrorKind::DimensionMismatch, "chain length " + std::to_string(chain.size()) + " vs " +
                                                  std::to_string(graph.edge_count()) + " edges");
  }
  Rational total = 0;
  for (const auto& e : graph.edges()) {
    const auto& c = chain[e.id];
    if (c != 0) total += e.weight * abs(c);
  }
  return total;
}

Rational stable_norm(const WeightedMultigraph& graph, const HomologyBasis& basis, const RationalVector& coords) {
  return chain_norm(graph, chain_from_coords(basis, coords));
}

std::size_t vertex_count_bound(std::size_t betti) {
  if (betti >= std::numeric_limits<std::size_t>::digits - 1) return std::numeric_limits<std::size_t>::max();
  return 2 * ((std::size_t{1} << betti) - 1);
}

StableBall stable_ball(const WeightedMultigraph& graph, const HomologyBasis& basis, const CircuitSet& circuits) {
  StableBall ball;
  ball.betti = basis.betti;
  ball.vertices_chain.reserve(circuits.oriented.size());
  ball.vertices_basis.reserve(circuits.oriented.size());
  for (const auto& c : circuits.oriented) {
    Chain vertex = Rational(1) / c.length * c.chain;
    ball.vertices_basis.push_back(basis_coords(graph, basis, vertex));
    ball.vertices_chain.push_back(std::move(vertex));
    ball.source_circuits.push_back(c);
  }
  return ball;
}

Rational dual_norm(const StableBall& ball, const RationalVector& xi) {
  if (xi.size() != ball.betti) {
    throw Error(ErrorKind::DimensionMismatch, "covector of length " + std::to_string(xi.size()) +
                                                  " for b = " + std::to_string(ball.betti));
  }
  if (ball.betti == 0) return 0;
  if (ball.vertices_basis.empty()) throw Error(ErrorKind::DegenerateBall, "ball has no vertices");
  return support_value(xi, ball.basis_points());
}

namespace {

// Splits a balanced multiset of directed arcs into vertex-simple circuits by
// walking and cutting at the first revisited vertex.
std::vector<SimpleCircuit> split_into_simple(const WeightedMultigraph& graph, const std::vector<Step>& arcs) {
  std::vector<bool> used(arcs.size(), false);
  std::map<std::size_t, std::vector<std::size_t>> outgoing;
  for (std::size_t i = 0; i < arcs.size(); ++i) outgoing[step_source(graph, arcs[i])].push_back(i);

  auto next_unused = [&](std::size_t v) -> std::optional<std::size_t> {
    for (auto i : outgoing[v]) {
      if (!used[i]) return i;
    }
    return std::nullopt;
  };

  std::vector<SimpleCircuit> out;
  for (std::size_t seed = 0; seed < arcs.size(); ++seed) {
    if (used[seed]) continue;
    std::vector<std::size_t> walk_vertices{step_source(graph, arcs[seed])};
    std::vector<std::size_t> walk_arcs;
    std::map<std::size_t, std::size_t> position{{walk_vertices.front(), 0}};

    std::optional<std::size_t> current = seed;
    while (current) {
      used[*current] = true;
      walk_arcs.push_back(*current);
      auto v = step_target(graph, arcs[*current]);
      if (auto hit = position.find(v); hit != position.end()) {
        auto p = hit->second;
        std::vector<Step> piece;
        for (auto i = p; i < walk_arcs.size(); ++i) piece.push_back(arcs[walk_arcs[i]]);
        out.push_back(canonicalize(graph, std::move(piece)));
        for (auto i = p + 1; i < walk_vertices.size(); ++i) position.erase(walk_vertices[i]);
        walk_arcs.resize(p);
        walk_vertices.resize(p + 1);
        if (walk_arcs.empty()) break;
      } else {
        position.emplace(v, walk_vertices.size());
        walk_vertices.push_back(v);
      }
      current = next_unused(walk_vertices.back());
      if (!current) throw Error(ErrorKind::NotClosed, "arc multiset is not balanced");
    }
  }
  return out;
}

}  // namespace

std::vector<SimpleCircuit> merge_circuits(const WeightedMultigraph& graph, const SimpleCircuit& c1,
                                          const SimpleCircuit& c2) {
  std::map<std::size_t, int> direction_in_c2;
  for (const auto& s : c2.steps) direction_in_c2[s.edge] = s.sign;

  std::map<std::size_t, bool> cancelled;
  std::vector<Step> arcs;
  for (const auto& s : c1.steps) {
    auto it = direction_in_c2.find(s.edge);
    if (it != direction_in_c2.end() && it->second == -s.sign) {
      cancelled[s.edge] = true;
    } else {
      arcs.push_back(s);
    }
  }
  for (const auto& s : c2.steps) {
    if (!cancelled.contains(s.edge)) arcs.push_back(s);
  }
  auto pieces = split_into_simple(graph, arcs);
  std::sort(pieces.begin(), pieces.end());
  return pieces;
}

Rational Decomposition::total_length() const {
  Rational total = 0;
  for (std::size_t i = 0; i < circuits.size(); ++i) total += multiplicities[i] * circuits[i].length;
  return total;
}

Chain Decomposition::total_chain(std::size_t edge_count) const {
  Chain total(edge_count);
  for (std::size_t i = 0; i < circuits.size(); ++i) total += Rational(multiplicities[i]) * circuits[i].chain;
  return total;
}

Decomposition decompose_class(const WeightedMultigraph& graph, const HomologyBasis& basis,
                              const RationalVector& coords) {
  for (std::size_t j = 0; j < coords.size(); ++j) {
    if (!is_integral(coords[j])) {
      throw Error(ErrorKind::NonIntegralClass, "coordinate " + std::to_string(j) + " is " + to_string(coords[j]));
    }
  }
  Chain residual = chain_from_coords(basis, coords);

  // Arc leaving v along an edge, in the direction of its residual sign.
  auto outgoing_arc = [&](std::size_t v) -> std::optional<Step> {
    for (auto id : graph.incident(v)) {
      const auto& e = graph.edge(id);
      const auto& r = residual[id];
      if (r > 0 && e.tail == v) return Step{id, 1};
      if (r < 0 && e.head == v) return Step{id, -1};
    }
    return std::nullopt;
  };

  std::map<std::vector<Step>, std::pair<SimpleCircuit, std::size_t>> tally;
  while (true) {
    std::optional<Step> first;
    for (std::size_t id = 0; id < residual.size() && !first; ++id) {
      if (residual[id] != 0) first = Step{id, residual[id] > 0 ? 1 : -1};
    }
    if (!first) break;

    std::vector<Step> walk{*first};
    std::map<std::size_t, std::size_t> position{{step_source(graph, *first), 0}};
    while (true) {
      auto v = step_target(graph, walk.back());
      if (auto hit = position.find(v); hit != position.end()) {
        std::vector<Step> loop(walk.begin() + static_cast<std::ptrdiff_t>(hit->second), walk.end());
        auto circuit = canonicalize(graph, std::move(loop));
        residual -= circuit.chain;
        auto [it, inserted] = tally.try_emplace(circuit.steps, circuit, 0);
        ++it->second.second;
        break;
      }
      position.emplace(v, walk.size());
      auto arc = outgoing_arc(v);
      if (!arc) throw Error(ErrorKind::NotACycle, "residual lost conservation at vertex " + std::to_string(v));
      walk.push_back(*arc);
    }
  }

  Decomposition d;
  for (auto& [steps, entry] : tally) {
    d.circuits.push_back(std::move(entry.first));
    d.multiplicities.push_back(entry.second);
  }
  return d;
}

VerificationReport verify_vertices(const StableBall& ball) {
  VerificationReport report;
  const auto n = ball.vertices_basis.size();
  for (std::size_t i = 0; i < n; ++i) {
    PointSet others;
    others.dimension = ball.betti;
    others.points.reserve(n - 1);
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) others.points.push_back(ball.vertices_basis[j]);
    }
    auto r = is_extreme(ball.vertices_basis[i], others);
    report.all_certified = report.all_certified && r.extreme;
    report.vertices.push_back(VertexCheck{i, r.extreme, std::move(r.certificate)});
  }
  return report;
}

}  // namespace stablenorm
