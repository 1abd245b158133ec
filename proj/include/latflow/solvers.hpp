#pragma once

#include <cstdint>
#include <vector>

#include "latflow/dfa.hpp"

// The two solutions of a data-flow system and their brute-force oracles.
//
// solve_mfp: descending worklist iteration from top^n to the greatest fixed
// point of the combined step operator (monotone systems only).
//
// solve_mop: exact meet-over-all-paths via the product graph whose vertices
// are (polarity, CFG vertex, lattice element) triples. A polarity-0 vertex
// (0,i,j) feeds the single function edge to (1,i,f_i(l_j)); a CFG edge (i,j)
// propagates (1,i,k) to (0,j,k). The values reachable at polarity 1 of a
// vertex are exactly the realizable path-function values there, monotone or
// not.

namespace latflow {

struct ProductGraph {
  int cfg_vertex_count = 0;
  int lattice_size = 0;
  std::vector<std::vector<int>> adjacency;  // indexed by packed id
  int source = 0;                           // (0, entry, top)

  int id(int polarity, int vertex, int element) const {
    return (polarity * cfg_vertex_count + vertex) * lattice_size + element;
  }
  int vertex_total() const { return 2 * cfg_vertex_count * lattice_size; }
};

ProductGraph build_product_graph(const DfaSystem& sys);

// Element indices whose polarity-1 vertex at target is reachable from the
// source; sorted ascending. Breadth-first search.
std::vector<int> reachable_values(const ProductGraph& pg, int target_cfg_vertex);

// Meets every reachable value at the target into top and compares with
// expected. An empty reachable set therefore answers (expected == top).
bool gmr_decide(const ProductGraph& pg, int target_cfg_vertex, int expected,
                const Lattice& lattice);

struct SolveReport {
  std::vector<int> solution;  // one element index per CFG vertex
  long iterations = 0;        // worklist pops (fixpoint solver)
  long visited = 0;           // product vertices reached (path solver)
  bool decision = false;      // solution[query_vertex] == query_value
};

// Requires every transfer function monotone (NonMonotoneFunction otherwise).
// The result is the unique maximum fixed point: transfer_step fixes it, and
// every other fixed point lies below it.
SolveReport solve_mfp(const DfaSystem& sys);

// Exact path-meet solution at every vertex; monotonicity not required.
SolveReport solve_mop(const DfaSystem& sys);

// Enumerates all m^n tuples (capped), keeps the fixed points of the combined
// step, returns the unique maximal one.
TupleValue mfp_oracle(const DfaSystem& sys, std::int64_t tuple_cap = 1000000);

enum class OracleMode {
  Pruned,  // cut a branch when its (vertex, value) state was already expanded
  Strict,  // raw bounded enumeration of every path, for tiny instances
};

// Meet of the path function over all entry-to-vertex paths of at most
// n*m vertices (longer paths repeat a (vertex, value) state, so the excised
// cycle changes nothing).
int mop_oracle(const DfaSystem& sys, int vertex, OracleMode mode = OracleMode::Pruned,
               std::int64_t length_cap = 10000);

}  // namespace latflow
