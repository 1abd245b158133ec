#pragma once

#include "latflow/circuit.hpp"
#include "latflow/dfa.hpp"

// Executable reductions between the classic decision problems and the two
// data-flow solutions: circuit value -> fixpoint solution, graph reachability
// -> path-meet solution.

namespace latflow {

// The four-element lattice of bit pairs ordered componentwise (index encodes
// the pair: 2*a1 + a2; meet/join are bitwise and/or) and the six transfer
// functions used by the circuit reduction.
struct GadgetSet {
  Lattice lattice;
  TransferFunction identity;     // (a1,a2) -> (a1,a2)
  TransferFunction const_false;  // (a1,a2) -> (1,0)
  TransferFunction const_true;   // (a1,a2) -> (1,1)
  TransferFunction swap;         // (a1,a2) -> (a2,a1)
  TransferFunction and_gate;     // (a1,a2) -> (1, a1 & a2)
  TransferFunction or_gate;      // (a1,a2) -> (1, a1 | a2)
};

const GadgetSet& gadget_tables();

// Builds the CFG with a fresh entry, one polarity-1 vertex per circuit
// vertex, and a polarity-0 staging vertex per gate; assigns the gadgets and
// queries whether the output's value is (1,1). The system's fixpoint decision
// equals the circuit's value. Vertex names: entry "v1_0"; circuit vertex i
// (0-based) maps to "v1_{i+1}" and, for gates, "v0_{i+1}".
DfaSystem reduce_mcv_to_mfp(const MonotoneCircuit& c);

// Index of the polarity-1 CFG vertex of circuit vertex v in the reduced
// system (the reduction lays vertices out deterministically).
int mcv_vertex_of(const MonotoneCircuit& c, int v);
int mcv_staging_vertex_of(const MonotoneCircuit& c, int v);

struct GrInstance {
  int vertex_count = 0;
  std::vector<IndexPair> edges;
  int source = 0;
  int target = 0;

  bool operator==(const GrInstance&) const = default;
};

// Over the two-chain lattice: keep the source-reachable subgraph, wrap it in
// a fresh entry and exit, make every function the identity except a constant
// 0 at the target. The path-meet at the exit is 0 exactly when some path
// passes through the target, i.e. when the target is reachable.
DfaSystem reduce_gr_to_mop(const GrInstance& g);

}  // namespace latflow
