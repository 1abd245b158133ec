#pragma once

#include <array>
#include <cstdint>
#include <random>

#include "latflow/dfa.hpp"

// A catalog of ready-made systems: gen/kill bit-vector frameworks, seeded
// random instances for corpus testing, and two fixed examples (the worked
// six-function tables and the diamond system whose fixpoint solution is
// strictly below the path solution).

namespace latflow {

// Gen/kill framework over the powerset of {d0..d(universe-1)}, ordered by
// reverse inclusion: X <= Y iff X is a superset of Y, so meet is set union,
// bottom is the full set and top is the empty set. Element index == bitmask.
struct BitvectorFramework {
  int universe = 0;
  std::vector<unsigned> gen;   // one mask per CFG vertex
  std::vector<unsigned> kill;  // one mask per CFG vertex
};

// f_i(x) = gen_i | (x & ~kill_i). Universe is capped at 6 so the lattice
// tables (4^u entries) stay exhaustively checkable.
DfaSystem make_bitvector_system(const BitvectorFramework& spec, ControlFlowGraph cfg,
                                int query_vertex, int query_value);

Lattice powerset_lattice(int universe);

// Rejection-samples random posets until one is a lattice. Throws
// GenerationFailed after bounded retries.
Lattice random_lattice(std::mt19937_64& rng, int element_count, int max_attempts = 2000);

// Random CFG with entry 0 and exit n-1: a forward backbone guarantees
// reachability and unique entry/exit; extra edges (including back edges and
// self-loops on interior vertices) are sprinkled per edge_density in [0,1].
ControlFlowGraph make_random_cfg(std::mt19937_64& rng, int vertex_count, double edge_density);

// Monotone transfer functions built over a linear extension of the lattice:
// each output is drawn uniformly from the common up-set of the outputs of the
// element's lower covers, so monotonicity holds by construction.
DfaSystem make_random_monotone_system(std::uint64_t seed, int vertex_count, int element_count,
                                      double edge_density);

// Same shape but with unconstrained uniform transfer tables; most draws are
// not monotone.
DfaSystem make_random_system(std::uint64_t seed, int vertex_count, int element_count,
                             double edge_density);

// The six five-element transfer tables of the worked example, index i holding
// the table of the function attached to CFG vertex i. Shipped without a
// lattice or graph; pair them with any five-element lattice and six-vertex
// CFG.
std::array<std::vector<int>, 6> worked_example_tables();

// Diamond CFG over the diamond lattice where the exit's fixpoint value (bot)
// is strictly below its path-meet value (top): the classic distributivity
// gap. Query: (exit, top).
DfaSystem diamond_gap_system();

}  // namespace latflow
