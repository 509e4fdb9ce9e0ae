#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stablenorm/graph.hpp"

namespace stablenorm {

/// One traversal of an edge; sign +1 runs tail -> head, -1 runs head -> tail.
struct Step {
  std::size_t edge = 0;
  int sign = 1;

  friend auto operator<=>(const Step&, const Step&) = default;
};

/// Vertex the step leaves from / arrives at.
std::size_t step_source(const WeightedMultigraph& graph, const Step& step);
std::size_t step_target(const WeightedMultigraph& graph, const Step& step);

/// Closed oriented walk visiting each of its vertices once, stored in
/// canonical rotation (smallest edge id first).
struct SimpleCircuit {
  std::vector<Step> steps;
  std::vector<std::size_t> vertices;  // vertices[i] is the source of steps[i]
  Rational length;
  Chain chain;

  std::size_t size() const { return steps.size(); }

  friend bool operator==(const SimpleCircuit& a, const SimpleCircuit& b) { return a.steps == b.steps; }
  friend bool operator<(const SimpleCircuit& a, const SimpleCircuit& b) { return a.steps < b.steps; }
};

/// Validates a closed walk and rotates it into canonical form.
/// Throws NotClosed, NotSimple or DimensionMismatch (unknown edge id).
SimpleCircuit canonicalize(const WeightedMultigraph& graph, std::vector<Step> walk);

SimpleCircuit reverse(const WeightedMultigraph& graph, const SimpleCircuit& circuit);

inline const Chain& circuit_chain(const SimpleCircuit& circuit) { return circuit.chain; }

/// "+3 -1 +0" style rendering of a step sequence.
std::string format_steps(std::span<const Step> steps);
std::vector<Step> parse_steps(std::string_view text);

struct CircuitSet {
  std::vector<SimpleCircuit> oriented;  // sorted by step sequence
  std::size_t geometric_count = 0;
};

struct EnumerationOptions {
  std::size_t max_oriented = 1'000'000;
};

/// Every simple oriented circuit of the graph, each exactly once.
/// Throws CircuitCapExceeded once more than options.max_oriented are found.
CircuitSet enumerate_circuits(const WeightedMultigraph& graph, const EnumerationOptions& options = {});

}  // namespace stablenorm
