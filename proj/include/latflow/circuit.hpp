#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "latflow/error.hpp"

// Monotone boolean circuits: DAGs whose vertices have indegree 0 (inputs,
// carrying an assigned bit) or 2 (AND/OR gates), with a unique output vertex
// of outdegree 0.

namespace latflow {

enum class GateKind { And, Or };

struct MonotoneCircuit {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;  // as given; duplicates = double wire
  std::map<int, GateKind> gates;           // exactly the indegree-2 vertices
  std::map<int, int> inputs;               // assignment: indegree-0 vertex -> 0/1
  int output = 0;

  // derived by validate_circuit
  std::vector<std::array<int, 2>> gate_preds;  // ports ordered by source index
  std::vector<int> levels;

  bool operator==(const MonotoneCircuit& other) const {
    return vertex_count == other.vertex_count && edges == other.edges &&
           gates == other.gates && inputs == other.inputs && output == other.output;
  }
};

// Verifies acyclicity, the indegree rule, output uniqueness and that the gate
// and input maps cover exactly the right vertex sets. A gate fed twice from
// the same vertex is legal; its first wire is the low port.
MonotoneCircuit validate_circuit(int vertex_count, const std::vector<std::pair<int, int>>& edges,
                                 const std::map<int, GateKind>& gates,
                                 const std::map<int, int>& inputs, int output);

// 0 for inputs, 1 + max of predecessor levels for gates.
int circuit_level(const MonotoneCircuit& c, int v);

// Per-vertex 0/1 values, computed in level order.
std::vector<int> eval_circuit(const MonotoneCircuit& c);

// Random valid circuit with at most max_gates gates; deterministic in seed.
MonotoneCircuit make_random_circuit(std::uint64_t seed, int max_gates);

}  // namespace latflow
