#include "latflow/circuit.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace latflow {

namespace {

int pick(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

}  // namespace

MonotoneCircuit validate_circuit(int vertex_count, const std::vector<std::pair<int, int>>& edges,
                                 const std::map<int, GateKind>& gates,
                                 const std::map<int, int>& inputs, int output) {
  if (vertex_count <= 0)
    fail(ErrorCode::NoUniqueOutput, "a circuit needs at least one vertex to have an output");
  for (const auto& [a, b] : edges) {
    if (a < 0 || a >= vertex_count)
      fail(ErrorCode::IndexOutOfRange, "edge source " + std::to_string(a) + " out of range", a);
    if (b < 0 || b >= vertex_count)
      fail(ErrorCode::IndexOutOfRange, "edge target " + std::to_string(b) + " out of range", b);
  }
  if (output < 0 || output >= vertex_count)
    fail(ErrorCode::IndexOutOfRange, "output vertex " + std::to_string(output) + " out of range",
         output);

  // degrees by wire multiplicity: two wires from one source are two inputs
  std::vector<int> indeg(vertex_count, 0), outdeg(vertex_count, 0);
  std::vector<std::vector<int>> wire_sources(vertex_count);
  for (const auto& [a, b] : edges) {
    ++outdeg[a];
    ++indeg[b];
    wire_sources[b].push_back(a);
  }

  for (int v = 0; v < vertex_count; ++v) {
    if (indeg[v] != 0 && indeg[v] != 2)
      fail(ErrorCode::BadIndegree,
           "vertex " + std::to_string(v) + " has indegree " + std::to_string(indeg[v]) +
               "; inputs take 0 wires and gates exactly 2",
           v);
  }

  // the gate map must name exactly the indegree-2 vertices, the assignment
  // exactly the indegree-0 vertices, with 0/1 values
  for (int v = 0; v < vertex_count; ++v) {
    if (indeg[v] == 2 && gates.find(v) == gates.end())
      fail(ErrorCode::AssignmentMismatch,
           "vertex " + std::to_string(v) + " has two wires but no gate kind", v);
    if (indeg[v] == 0 && inputs.find(v) == inputs.end())
      fail(ErrorCode::AssignmentMismatch,
           "input vertex " + std::to_string(v) + " has no assigned bit", v);
  }
  for (const auto& [v, kind] : gates) {
    (void)kind;
    if (v < 0 || v >= vertex_count || indeg[v] != 2)
      fail(ErrorCode::AssignmentMismatch,
           "gate kind given for vertex " + std::to_string(v) + ", which is not an indegree-2 vertex",
           v);
  }
  for (const auto& [v, bit] : inputs) {
    if (v < 0 || v >= vertex_count || indeg[v] != 0)
      fail(ErrorCode::AssignmentMismatch,
           "bit assigned to vertex " + std::to_string(v) + ", which is not an indegree-0 vertex", v);
    if (bit != 0 && bit != 1)
      fail(ErrorCode::AssignmentMismatch,
           "input vertex " + std::to_string(v) + " assigned " + std::to_string(bit) +
               "; bits must be 0 or 1",
           v);
  }

  int sink = -1;
  int sink_count = 0;
  for (int v = 0; v < vertex_count; ++v) {
    if (outdeg[v] == 0) {
      sink = v;
      ++sink_count;
    }
  }
  if (sink_count != 1)
    fail(ErrorCode::NoUniqueOutput,
         "found " + std::to_string(sink_count) + " outdegree-0 vertices; need exactly one");
  if (sink != output)
    fail(ErrorCode::NoUniqueOutput,
         "declared output " + std::to_string(output) + " differs from the unique sink " +
             std::to_string(sink),
         output);

  // Kahn's algorithm over wire multiplicities; leftovers mean a cycle
  std::vector<std::vector<int>> wire_targets(vertex_count);
  for (const auto& [a, b] : edges) wire_targets[a].push_back(b);
  std::vector<int> pending = indeg;
  std::vector<int> order;
  order.reserve(vertex_count);
  std::vector<int> queue;
  for (int v = 0; v < vertex_count; ++v)
    if (pending[v] == 0) queue.push_back(v);
  for (size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    order.push_back(v);
    for (int w : wire_targets[v])
      if (--pending[w] == 0) queue.push_back(w);
  }
  if (static_cast<int>(order.size()) != vertex_count) {
    int witness = 0;
    while (pending[witness] == 0) ++witness;
    fail(ErrorCode::CycleDetected,
         "vertex " + std::to_string(witness) + " lies on a cycle; circuits must be acyclic",
         witness);
  }

  MonotoneCircuit c;
  c.vertex_count = vertex_count;
  c.edges = edges;
  c.gates = gates;
  c.inputs = inputs;
  c.output = output;

  // ports ordered by source index; a doubled wire feeds both ports
  c.gate_preds.assign(vertex_count, {-1, -1});
  c.levels.assign(vertex_count, 0);
  for (int v : order) {
    if (indeg[v] == 0) continue;
    int p0 = wire_sources[v][0];
    int p1 = wire_sources[v][1];
    if (p0 > p1) std::swap(p0, p1);
    c.gate_preds[v] = {p0, p1};
    c.levels[v] = 1 + std::max(c.levels[p0], c.levels[p1]);
  }
  return c;
}

int circuit_level(const MonotoneCircuit& c, int v) {
  if (v < 0 || v >= c.vertex_count)
    fail(ErrorCode::IndexOutOfRange, "vertex " + std::to_string(v) + " out of range", v);
  return c.levels[v];
}

std::vector<int> eval_circuit(const MonotoneCircuit& c) {
  // level order: a gate's ports sit at strictly smaller levels
  std::vector<int> order(c.vertex_count);
  for (int v = 0; v < c.vertex_count; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return c.levels[a] < c.levels[b]; });

  std::vector<int> value(c.vertex_count, 0);
  for (int v : order) {
    auto gate = c.gates.find(v);
    if (gate == c.gates.end()) {
      value[v] = c.inputs.at(v);
    } else {
      int a = value[c.gate_preds[v][0]];
      int b = value[c.gate_preds[v][1]];
      value[v] = gate->second == GateKind::And ? (a & b) : (a | b);
    }
  }
  return value;
}

MonotoneCircuit make_random_circuit(std::uint64_t seed, int max_gates) {
  if (max_gates < 1)
    fail(ErrorCode::GenerationFailed, "need a budget of at least one gate");
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + 5);

  int input_count = std::min(pick(rng, 1, 4), max_gates + 1);
  // at least input_count - 1 gates are needed to funnel every input into one sink
  int gate_count = pick(rng, std::max(1, input_count - 1), max_gates);
  if (input_count == 1 && pick(rng, 0, 9) == 0) gate_count = 0;  // lone-input circuit

  std::vector<std::pair<int, int>> edges;
  std::map<int, GateKind> gates;
  std::map<int, int> inputs;
  std::vector<int> sinks;
  for (int v = 0; v < input_count; ++v) {
    inputs[v] = pick(rng, 0, 1);
    sinks.push_back(v);
  }

  auto drop_sink = [&](int v) {
    auto it = std::find(sinks.begin(), sinks.end(), v);
    if (it != sinks.end()) sinks.erase(it);
  };

  for (int t = 0; t < gate_count; ++t) {
    int v = input_count + t;
    int remaining_after = gate_count - t - 1;
    int p0, p1;
    if (static_cast<int>(sinks.size()) - 1 > remaining_after) {
      // must merge two open sinks or the circuit cannot end in a single output
      int i = pick(rng, 0, static_cast<int>(sinks.size()) - 1);
      int j = pick(rng, 0, static_cast<int>(sinks.size()) - 2);
      p0 = sinks[i];
      std::vector<int> rest = sinks;
      rest.erase(rest.begin() + i);
      p1 = rest[j];
    } else {
      p0 = sinks[pick(rng, 0, static_cast<int>(sinks.size()) - 1)];
      p1 = pick(rng, 0, v - 1);  // may repeat p0: a doubled wire is legal
    }
    edges.emplace_back(p0, v);
    edges.emplace_back(p1, v);
    gates[v] = pick(rng, 0, 1) == 0 ? GateKind::And : GateKind::Or;
    drop_sink(p0);
    drop_sink(p1);
    sinks.push_back(v);
  }

  return validate_circuit(input_count + gate_count, edges, gates, inputs, sinks.front());
}

}  // namespace latflow
