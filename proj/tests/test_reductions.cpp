#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "latflow/circuit.hpp"
#include "latflow/reductions.hpp"
#include "latflow/solvers.hpp"
#include "support.hpp"

using namespace latflow;
using testsupport::pick;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::SyntaxError;
}

int vertex_named(const ControlFlowGraph& cfg, const std::string& name) {
  for (int v = 0; v < cfg.vertex_count; ++v)
    if (cfg.vertex_name(v) == name) return v;
  FAIL("no vertex named ", name);
  return -1;
}

MonotoneCircuit single_gate(GateKind kind, int bit0, int bit1) {
  return validate_circuit(3, {{0, 2}, {1, 2}}, {{2, kind}}, {{0, bit0}, {1, bit1}}, 2);
}

// OR of two ANDs over four inputs assigned (1,0,1,1)
MonotoneCircuit two_level_circuit() {
  return validate_circuit(7, {{0, 4}, {1, 4}, {2, 5}, {3, 5}, {4, 6}, {5, 6}},
                          {{4, GateKind::And}, {5, GateKind::And}, {6, GateKind::Or}},
                          {{0, 1}, {1, 0}, {2, 1}, {3, 1}}, 6);
}

long count_fixed_points(const DfaSystem& sys) {
  const int n = sys.cfg.vertex_count;
  const int m = sys.lattice.size();
  std::vector<int> digits(n, 0);
  long count = 0;
  while (true) {
    TupleValue x(sys.lattice, digits);
    if (transfer_step(sys, x) == x) ++count;
    int pos = 0;
    while (pos < n && ++digits[pos] == m) {
      digits[pos] = 0;
      ++pos;
    }
    if (pos == n) break;
  }
  return count;
}

std::set<std::pair<std::string, std::string>> edge_names(const ControlFlowGraph& cfg) {
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& [a, b] : cfg.edges) out.insert({cfg.vertex_name(a), cfg.vertex_name(b)});
  return out;
}

GrInstance random_digraph(std::mt19937_64& rng, int max_vertices) {
  GrInstance g;
  g.vertex_count = pick(rng, 1, max_vertices);
  int edge_count = pick(rng, 0, 2 * g.vertex_count);
  for (int i = 0; i < edge_count; ++i)
    g.edges.push_back({pick(rng, 0, g.vertex_count - 1), pick(rng, 0, g.vertex_count - 1)});
  g.source = pick(rng, 0, g.vertex_count - 1);
  g.target = pick(rng, 0, g.vertex_count - 1);
  return g;
}

bool plain_bfs_reaches_target(const GrInstance& g) {
  std::vector<std::vector<int>> succs(g.vertex_count);
  for (const auto& [a, b] : g.edges) succs[a].push_back(b);
  std::vector<char> seen(g.vertex_count, 0);
  std::vector<int> queue{g.source};
  seen[g.source] = 1;
  for (size_t head = 0; head < queue.size(); ++head)
    for (int w : succs[queue[head]])
      if (!seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
  return seen[g.target] != 0;
}

}  // namespace

TEST_CASE("a doubled wire from one source is a legal gate") {
  const auto c = validate_circuit(2, {{0, 1}, {0, 1}}, {{1, GateKind::And}}, {{0, 1}}, 1);
  CHECK(c.gate_preds[1] == std::array<int, 2>{0, 0});
  CHECK(eval_circuit(c) == std::vector<int>{1, 1});
  CHECK(circuit_level(c, 0) == 0);
  CHECK(circuit_level(c, 1) == 1);
}

TEST_CASE("validate_circuit rejects structural defects") {
  CHECK(code_of([] {
          validate_circuit(2, {{0, 1}}, {{1, GateKind::And}}, {{0, 0}}, 1);
        }) == ErrorCode::BadIndegree);
  CHECK(code_of([] {  // two sinks
          validate_circuit(2, {}, {}, {{0, 0}, {1, 1}}, 0);
        }) == ErrorCode::NoUniqueOutput);
  CHECK(code_of([] {  // declared output is not the sink
          validate_circuit(3, {{0, 2}, {1, 2}}, {{2, GateKind::And}}, {{0, 0}, {1, 1}}, 0);
        }) == ErrorCode::NoUniqueOutput);
  CHECK(code_of([] {  // 1 <-> 2 cycle behind a proper sink
          validate_circuit(
              4, {{1, 2}, {1, 2}, {2, 1}, {0, 1}, {2, 3}, {0, 3}},
              {{1, GateKind::And}, {2, GateKind::Or}, {3, GateKind::And}}, {{0, 1}}, 3);
        }) == ErrorCode::CycleDetected);
  CHECK(code_of([] {  // gate vertex without a kind
          validate_circuit(3, {{0, 2}, {1, 2}}, {}, {{0, 0}, {1, 1}}, 2);
        }) == ErrorCode::AssignmentMismatch);
  CHECK(code_of([] {  // input without a bit
          validate_circuit(3, {{0, 2}, {1, 2}}, {{2, GateKind::And}}, {{0, 0}}, 2);
        }) == ErrorCode::AssignmentMismatch);
  CHECK(code_of([] {  // bit assigned to a gate
          validate_circuit(3, {{0, 2}, {1, 2}}, {{2, GateKind::And}},
                           {{0, 0}, {1, 1}, {2, 1}}, 2);
        }) == ErrorCode::AssignmentMismatch);
  CHECK(code_of([] {  // non-boolean bit
          validate_circuit(1, {}, {}, {{0, 7}}, 0);
        }) == ErrorCode::AssignmentMismatch);
  CHECK(code_of([] {
          validate_circuit(2, {{0, 5}, {0, 5}}, {}, {{0, 0}, {1, 1}}, 1);
        }) == ErrorCode::IndexOutOfRange);
}

TEST_CASE("circuit levels count gate depth") {
  // gate 3 joins two inputs; gate 4 joins an input with gate 3
  const auto c = validate_circuit(5, {{1, 3}, {2, 3}, {0, 4}, {3, 4}},
                                  {{3, GateKind::And}, {4, GateKind::Or}},
                                  {{0, 1}, {1, 0}, {2, 1}}, 4);
  CHECK(circuit_level(c, 0) == 0);
  CHECK(circuit_level(c, 1) == 0);
  CHECK(circuit_level(c, 2) == 0);
  CHECK(circuit_level(c, 3) == 1);
  CHECK(circuit_level(c, 4) == 2);
  CHECK(code_of([&] { circuit_level(c, 5); }) == ErrorCode::IndexOutOfRange);
}

TEST_CASE("eval_circuit computes gate semantics") {
  CHECK(eval_circuit(single_gate(GateKind::And, 1, 0)) == std::vector<int>{1, 0, 0});
  CHECK(eval_circuit(single_gate(GateKind::Or, 0, 0)) == std::vector<int>{0, 0, 0});

  const auto two = two_level_circuit();
  const auto values = eval_circuit(two);
  CHECK(values == std::vector<int>{1, 0, 1, 1, 0, 1, 1});
  CHECK(circuit_level(two, 6) == 2);
}

TEST_CASE("gadget tables are the six frozen functions over the bit-pair lattice") {
  const GadgetSet& g = gadget_tables();
  CHECK(g.lattice.size() == 4);
  CHECK(g.lattice.bottom() == 0);
  CHECK(g.lattice.top() == 3);
  CHECK(g.lattice.meet(1, 2) == 0);
  CHECK(g.lattice.join(1, 2) == 3);
  CHECK(g.lattice.element_name(0) == "(0,0)");
  CHECK(g.lattice.element_name(2) == "(1,0)");

  CHECK(g.identity.table == std::vector<int>{0, 1, 2, 3});
  CHECK(g.const_false.table == std::vector<int>{2, 2, 2, 2});
  CHECK(g.const_true.table == std::vector<int>{3, 3, 3, 3});
  CHECK(g.swap.table == std::vector<int>{0, 2, 1, 3});
  CHECK(g.and_gate.table == std::vector<int>{2, 2, 2, 3});
  CHECK(g.or_gate.table == std::vector<int>{2, 3, 3, 3});

  // the swapped pair (0,1) -> (1,0); constants land on (1,0)/(1,1)
  CHECK(g.swap.apply(1) == 2);
  CHECK(g.const_false.apply(3) == 2);
  CHECK(g.or_gate.apply(0) == 2);

  for (const TransferFunction* f :
       {&g.identity, &g.const_false, &g.const_true, &g.swap, &g.and_gate, &g.or_gate})
    CHECK(check_monotone(g.lattice, *f));
}

TEST_CASE("the single-gate reduction matches the hand construction") {
  const auto c = single_gate(GateKind::And, 1, 0);
  const auto sys = reduce_mcv_to_mfp(c);

  CHECK(sys.cfg.vertex_count == 5);
  CHECK(sys.cfg.edges.size() == 5);
  CHECK(sys.lattice == gadget_tables().lattice);
  CHECK(sys.cfg.entry == vertex_named(sys.cfg, "v1_0"));
  CHECK(sys.cfg.exit == vertex_named(sys.cfg, "v1_3"));
  CHECK(mcv_vertex_of(c, 2) == sys.cfg.exit);
  CHECK(mcv_staging_vertex_of(c, 2) == vertex_named(sys.cfg, "v0_3"));
  CHECK(code_of([&] { mcv_staging_vertex_of(c, 0); }) == ErrorCode::IndexOutOfRange);

  const std::set<std::pair<std::string, std::string>> expected{
      {"v1_0", "v1_1"}, {"v1_0", "v1_2"}, {"v1_1", "v0_3"}, {"v1_2", "v1_3"}, {"v0_3", "v1_3"}};
  CHECK(edge_names(sys.cfg) == expected);

  const GadgetSet& g = gadget_tables();
  CHECK(sys.functions[vertex_named(sys.cfg, "v1_0")].table == g.identity.table);
  CHECK(sys.functions[vertex_named(sys.cfg, "v1_1")].table == g.const_true.table);
  CHECK(sys.functions[vertex_named(sys.cfg, "v1_2")].table == g.const_false.table);
  CHECK(sys.functions[vertex_named(sys.cfg, "v0_3")].table == g.swap.table);
  CHECK(sys.functions[vertex_named(sys.cfg, "v1_3")].table == g.and_gate.table);
  CHECK(sys.query_vertex == sys.cfg.exit);
  CHECK(sys.query_value == 3);
}

TEST_CASE("the single-gate reduction solves to the frozen fixpoint") {
  const auto c = single_gate(GateKind::And, 1, 0);
  const auto sys = reduce_mcv_to_mfp(c);
  const auto report = solve_mfp(sys);

  // output vertex carries (1, 0); its staging vertex carries (1, 1)
  CHECK(report.solution[vertex_named(sys.cfg, "v1_3")] == 2);
  CHECK(report.solution[vertex_named(sys.cfg, "v0_3")] == 3);
  CHECK_FALSE(report.decision);

  const auto oracle = mfp_oracle(sys);
  CHECK(oracle.values() == report.solution);
  CHECK(count_fixed_points(sys) == 1);

  const auto sys_true = reduce_mcv_to_mfp(single_gate(GateKind::And, 1, 1));
  const auto report_true = solve_mfp(sys_true);
  CHECK(report_true.solution[sys_true.cfg.exit] == 3);
  CHECK(report_true.decision);
}

TEST_CASE("reduced circuit systems satisfy the per-vertex value law") {
  std::mt19937_64 seeder(20260816);
  for (int round = 0; round < 60; ++round) {
    const auto c = make_random_circuit(seeder(), 8);
    const auto sys = reduce_mcv_to_mfp(c);
    CHECK(system_is_monotone(sys));

    const auto values = eval_circuit(c);
    const auto report = solve_mfp(sys);
    for (int v = 0; v < c.vertex_count; ++v) {
      CHECK(report.solution[mcv_vertex_of(c, v)] == 2 + values[v]);
      if (c.gates.count(v)) {
        const int lower_port = c.gate_preds[v][0];
        CHECK(report.solution[mcv_staging_vertex_of(c, v)] == 2 * values[lower_port] + 1);
      }
    }
    CHECK(report.decision == (values[c.output] == 1));
    if (sys.cfg.vertex_count <= 7) CHECK(count_fixed_points(sys) == 1);
  }
}

TEST_CASE("make_random_circuit is deterministic and respects the gate budget") {
  const auto a = make_random_circuit(42, 8);
  const auto b = make_random_circuit(42, 8);
  CHECK(a == b);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto c = make_random_circuit(seed, 8);
    CHECK(static_cast<int>(c.gates.size()) <= 8);
    CHECK(eval_circuit(c).size() == static_cast<size_t>(c.vertex_count));
  }
}

TEST_CASE("reachability reduction: target equal to source") {
  const auto sys = reduce_gr_to_mop({1, {}, 0, 0});
  CHECK(sys.cfg.vertex_count == 3);
  CHECK(sys.cfg.vertex_name(0) == "entry");
  CHECK(sys.cfg.vertex_name(1) == "g0");
  CHECK(sys.cfg.vertex_name(2) == "exit");
  // the lone retained vertex also wires entry straight to exit
  CHECK(sys.cfg.edges == std::vector<IndexPair>{{0, 1}, {0, 2}, {1, 2}});
  CHECK(sys.lattice.size() == 2);
  CHECK(sys.lattice.element_name(0) == "0");
  CHECK(sys.lattice.element_name(1) == "1");
  CHECK(sys.functions[1].table == std::vector<int>{0, 0});
  CHECK(sys.query_vertex == 2);
  CHECK(sys.query_value == 0);

  const auto report = solve_mop(sys);
  CHECK(report.solution[2] == 0);
  CHECK(report.decision);
  CHECK(mop_oracle(sys, 2) == 0);
}

TEST_CASE("reachability reduction: isolated target") {
  const auto sys = reduce_gr_to_mop({2, {}, 0, 1});
  CHECK(sys.cfg.vertex_count == 3);  // the target is dropped entirely
  const auto report = solve_mop(sys);
  CHECK(report.solution[sys.cfg.exit] == 1);
  CHECK_FALSE(report.decision);
}

TEST_CASE("reachability reduction: line graph with a stray vertex") {
  const auto sys = reduce_gr_to_mop({4, {{0, 1}, {1, 2}}, 0, 2});
  CHECK(sys.cfg.vertex_count == 5);
  CHECK(vertex_named(sys.cfg, "g2") == 3);
  for (int v = 0; v < sys.cfg.vertex_count; ++v) CHECK(sys.cfg.vertex_name(v) != "g3");
  CHECK(sys.functions[3].table == std::vector<int>{0, 0});
  for (int v : {0, 1, 2, 4}) CHECK(sys.functions[v].table == std::vector<int>{0, 1});

  const auto report = solve_mop(sys);
  CHECK(report.decision);
  CHECK(mop_oracle(sys, sys.cfg.exit) == 0);
  CHECK(mop_oracle(sys, sys.cfg.exit, OracleMode::Strict) == 0);
}

TEST_CASE("reachability reduction rejects out-of-range indices") {
  CHECK(code_of([] { reduce_gr_to_mop({2, {}, 2, 0}); }) == ErrorCode::IndexOutOfRange);
  CHECK(code_of([] { reduce_gr_to_mop({2, {}, 0, -1}); }) == ErrorCode::IndexOutOfRange);
  CHECK(code_of([] { reduce_gr_to_mop({2, {{0, 3}}, 0, 1}); }) == ErrorCode::IndexOutOfRange);
}

TEST_CASE("reachability reduction agrees with plain graph search") {
  std::mt19937_64 rng(7151);
  for (int round = 0; round < 100; ++round) {
    const auto g = random_digraph(rng, 8);
    const auto sys = reduce_gr_to_mop(g);
    const auto report = solve_mop(sys);
    CHECK(report.decision == plain_bfs_reaches_target(g));
    if (round % 10 == 0)
      CHECK(report.solution[sys.cfg.exit] == mop_oracle(sys, sys.cfg.exit));
  }
}
