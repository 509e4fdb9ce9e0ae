#include "stablenorm/circuits.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include "stablenorm/error.hpp"

namespace stablenorm {

std::size_t step_source(const WeightedMultigraph& graph, const Step& step) {
  const auto& e = graph.edge(step.edge);
  return step.sign > 0 ? e.tail : e.head;
}

std::size_t step_target(const WeightedMultigraph& graph, const Step& step) {
  const auto& e = graph.edge(step.edge);
  return step.sign > 0 ? e.head : e.tail;
}

SimpleCircuit canonicalize(const WeightedMultigraph& graph, std::vector<Step> walk) {
  if (walk.empty()) throw Error(ErrorKind::NotClosed, "empty walk");
  for (const auto& s : walk) {
    if (s.edge >= graph.edge_count()) {
      throw Error(ErrorKind::DimensionMismatch, "walk uses unknown edge " + std::to_string(s.edge));
    }
    if (s.sign != 1 && s.sign != -1) throw Error(ErrorKind::Parse, "step sign must be +1 or -1");
  }
  const auto m = walk.size();
  for (std::size_t i = 0; i < m; ++i) {
    if (step_target(graph, walk[i]) != step_source(graph, walk[(i + 1) % m])) {
      throw Error(ErrorKind::NotClosed, "step " + std::to_string(i) + " does not meet step " +
                                            std::to_string((i + 1) % m));
    }
  }
  std::set<std::size_t> vertices;
  std::set<std::size_t> edges;
  for (const auto& s : walk) {
    if (!vertices.insert(step_source(graph, s)).second) {
      throw Error(ErrorKind::NotSimple, "vertex " + std::to_string(step_source(graph, s)) + " visited twice");
    }
    if (!edges.insert(s.edge).second) {
      throw Error(ErrorKind::NotSimple, "edge " + std::to_string(s.edge) + " traversed twice");
    }
  }

  auto first = std::min_element(walk.begin(), walk.end(),
                                [](const Step& a, const Step& b) { return a.edge < b.edge; });
  std::rotate(walk.begin(), first, walk.end());

  SimpleCircuit c;
  c.chain = Chain(graph.edge_count());
  c.length = 0;
  for (const auto& s : walk) {
    c.vertices.push_back(step_source(graph, s));
    c.chain[s.edge] = s.sign;
    c.length += graph.edge(s.edge).weight;
  }
  c.steps = std::move(walk);
  return c;
}

SimpleCircuit reverse(const WeightedMultigraph& graph, const SimpleCircuit& circuit) {
  std::vector<Step> walk(circuit.steps.rbegin(), circuit.steps.rend());
  for (auto& s : walk) s.sign = -s.sign;
  return canonicalize(graph, std::move(walk));
}

std::string format_steps(std::span<const Step> steps) {
  std::string out;
  for (const auto& s : steps) {
    if (!out.empty()) out += ' ';
    out += (s.sign > 0 ? '+' : '-');
    out += std::to_string(s.edge);
  }
  return out;
}

std::vector<Step> parse_steps(std::string_view text) {
  std::vector<Step> steps;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    if (token.size() < 2 || (token[0] != '+' && token[0] != '-') ||
        token.find_first_not_of("0123456789", 1) != std::string::npos) {
      throw Error(ErrorKind::Parse, "bad step token '" + token + "'");
    }
    steps.push_back(Step{std::stoul(token.substr(1)), token[0] == '+' ? 1 : -1});
  }
  return steps;
}

namespace {

// Johnson's elementary-circuit search on the symmetric digraph of the
// underlying simple graph. Vertex cycles of length >= 3 are reported; the
// trivial u -> v -> u cycles are walked (they drive the blocking logic) but
// not reported, since parallel edges are handled separately.
class JohnsonSearch {
 public:
  template <typename Emit>
  JohnsonSearch(const std::vector<std::vector<std::size_t>>& adjacency, Emit emit) : adj_(adjacency) {
    const auto n = adj_.size();
    blocked_.assign(n, false);
    blocked_by_.assign(n, {});
    in_component_.assign(n, false);
    for (start_ = 0; start_ < n; ++start_) {
      mark_component();
      for (std::size_t v = start_; v < n; ++v) {
        blocked_[v] = false;
        blocked_by_[v].clear();
      }
      circuit(start_, emit);
    }
  }

 private:
  void mark_component() {
    std::fill(in_component_.begin(), in_component_.end(), false);
    std::vector<std::size_t> stack{start_};
    in_component_[start_] = true;
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (auto w : adj_[v]) {
        if (w > start_ && !in_component_[w]) {
          in_component_[w] = true;
          stack.push_back(w);
        }
      }
    }
  }

  void unblock(std::size_t v) {
    blocked_[v] = false;
    auto pending = std::move(blocked_by_[v]);
    blocked_by_[v].clear();
    for (auto w : pending) {
      if (blocked_[w]) unblock(w);
    }
  }

  template <typename Emit>
  bool circuit(std::size_t v, Emit& emit) {
    bool found = false;
    path_.push_back(v);
    blocked_[v] = true;
    for (auto w : adj_[v]) {
      if (!in_component_[w]) continue;
      if (w == start_) {
        if (path_.size() >= 3) emit(path_);
        found = true;
      } else if (!blocked_[w] && circuit(w, emit)) {
        found = true;
      }
    }
    if (found) {
      unblock(v);
    } else {
      for (auto w : adj_[v]) {
        if (in_component_[w]) blocked_by_[w].insert(v);
      }
    }
    path_.pop_back();
    return found;
  }

  const std::vector<std::vector<std::size_t>>& adj_;
  std::size_t start_ = 0;
  std::vector<bool> blocked_;
  std::vector<std::set<std::size_t>> blocked_by_;
  std::vector<bool> in_component_;
  std::vector<std::size_t> path_;
};

Step step_from(const Edge& e, std::size_t from) { return Step{e.id, e.tail == from ? 1 : -1}; }

}  // namespace

CircuitSet enumerate_circuits(const WeightedMultigraph& graph, const EnumerationOptions& options) {
  const auto n = graph.vertex_count();
  std::vector<std::vector<Step>> walks;

  auto push = [&](std::vector<Step> walk) {
    if (walks.size() >= options.max_oriented) {
      throw Error(ErrorKind::CircuitCapExceeded,
                  "more than " + std::to_string(options.max_oriented) + " oriented circuits");
    }
    walks.push_back(std::move(walk));
  };

  // Edges between each unordered vertex pair, ascending.
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> bundles;
  for (const auto& e : graph.edges()) {
    if (e.is_loop()) {
      push({Step{e.id, 1}});
      push({Step{e.id, -1}});
    } else {
      bundles[std::minmax(e.tail, e.head)].push_back(e.id);
    }
  }

  std::vector<std::vector<std::size_t>> adjacency(n);
  for (const auto& [pair, ids] : bundles) {
    const auto [u, v] = pair;
    adjacency[u].push_back(v);
    adjacency[v].push_back(u);
    for (auto a : ids) {
      for (auto b : ids) {
        if (a == b) continue;
        push({step_from(graph.edge(a), u), step_from(graph.edge(b), v)});
      }
    }
  }
  for (auto& row : adjacency) std::sort(row.begin(), row.end());

  auto expand = [&](const std::vector<std::size_t>& cycle) {
    const auto m = cycle.size();
    std::vector<const std::vector<std::size_t>*> choices(m);
    for (std::size_t i = 0; i < m; ++i) choices[i] = &bundles.at(std::minmax(cycle[i], cycle[(i + 1) % m]));
    std::vector<std::size_t> pick(m, 0);
    while (true) {
      std::vector<Step> walk;
      walk.reserve(m);
      for (std::size_t i = 0; i < m; ++i) walk.push_back(step_from(graph.edge((*choices[i])[pick[i]]), cycle[i]));
      push(std::move(walk));
      std::size_t i = 0;
      while (i < m && ++pick[i] == choices[i]->size()) pick[i++] = 0;
      if (i == m) break;
    }
  };
  JohnsonSearch search(adjacency, expand);

  CircuitSet set;
  set.oriented.reserve(walks.size());
  for (auto& w : walks) set.oriented.push_back(canonicalize(graph, std::move(w)));
  std::sort(set.oriented.begin(), set.oriented.end());
  set.geometric_count = set.oriented.size() / 2;
  return set;
}

}  // namespace stablenorm
