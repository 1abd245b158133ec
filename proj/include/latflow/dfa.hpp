#pragma once

#include <string>
#include <vector>

#include "latflow/lattice.hpp"

// Data-flow framework instances: a control-flow graph with a unique entry and
// exit, one transfer function per vertex over a shared finite lattice, and a
// query (vertex, expected value). The combined step operator computes, per
// vertex, f_i applied to the meet of the predecessors' components; a vertex
// without predecessors (the entry) reads top.

namespace latflow {

struct ControlFlowGraph {
  int vertex_count = 0;
  std::vector<IndexPair> edges;  // sorted, unique
  int entry = 0;
  int exit = 0;
  std::vector<std::string> names;  // optional display names

  // derived adjacency, filled by validate_cfg
  std::vector<std::vector<int>> preds;
  std::vector<std::vector<int>> succs;

  std::string vertex_name(int v) const;  // given name, or "v{v+1}"

  bool operator==(const ControlFlowGraph& other) const {
    return vertex_count == other.vertex_count && edges == other.edges &&
           entry == other.entry && exit == other.exit && names == other.names;
  }
};

// Checks: indices in range, entry is the unique vertex of indegree 0, exit
// the unique vertex of outdegree 0, every vertex reachable from the entry.
// Self-loops are fine anywhere those degree rules allow; duplicate edges are
// collapsed.
ControlFlowGraph validate_cfg(int vertex_count, const std::vector<IndexPair>& edges, int entry,
                              int exit, std::vector<std::string> names = {});

struct TransferFunction {
  std::vector<int> table;  // table[x] = f(x), one entry per lattice element

  int apply(int x) const { return table[x]; }
  int size() const { return static_cast<int>(table.size()); }

  bool operator==(const TransferFunction&) const = default;
};

// Validates totality and output range against the lattice.
TransferFunction make_transfer(const Lattice& lattice, std::vector<int> table);

bool check_monotone(const Lattice& lattice, const TransferFunction& f);
bool check_distributive(const Lattice& lattice, const TransferFunction& f);

struct DfaSystem {
  ControlFlowGraph cfg;
  Lattice lattice;
  std::vector<TransferFunction> functions;  // one per vertex
  int query_vertex = 0;
  int query_value = 0;

  bool operator==(const DfaSystem&) const = default;
};

// Validates cross-references: one function per vertex, each total over the
// lattice, query indices in range. Monotonicity is not required here; the
// fixpoint solver checks it separately.
DfaSystem make_system(ControlFlowGraph cfg, Lattice lattice,
                      std::vector<std::vector<int>> function_tables, int query_vertex,
                      int query_value);

bool system_is_monotone(const DfaSystem& sys);

// One parallel application of the combined step operator.
TupleValue transfer_step(const DfaSystem& sys, const TupleValue& x);

// Value of the composed function along a vertex path, applied to top.
// Verifies each consecutive pair is an edge; the path need not start at the
// entry. Throws NotAPath.
int apply_path_function(const DfaSystem& sys, const std::vector<int>& path);

}  // namespace latflow
