#include "latflow/reductions.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace latflow {

namespace {

Lattice bit_pair_lattice() {
  // index encodes the pair (a1, a2) as 2*a1 + a2; the componentwise order
  // makes meet bitwise AND and join bitwise OR on indices
  std::vector<std::vector<int>> meet(4, std::vector<int>(4));
  std::vector<std::vector<int>> join(4, std::vector<int>(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      meet[i][j] = i & j;
      join[i][j] = i | j;
    }
  return Lattice::from_tables(4, meet, join, {"(0,0)", "(0,1)", "(1,0)", "(1,1)"});
}

}  // namespace

const GadgetSet& gadget_tables() {
  static const GadgetSet set = [] {
    GadgetSet g;
    g.lattice = bit_pair_lattice();
    g.identity = make_transfer(g.lattice, {0, 1, 2, 3});
    g.const_false = make_transfer(g.lattice, {2, 2, 2, 2});
    g.const_true = make_transfer(g.lattice, {3, 3, 3, 3});
    g.swap = make_transfer(g.lattice, {0, 2, 1, 3});
    g.and_gate = make_transfer(g.lattice, {2, 2, 2, 3});
    g.or_gate = make_transfer(g.lattice, {2, 3, 3, 3});
    return g;
  }();
  return set;
}

namespace {

int staging_rank(const MonotoneCircuit& c, int v) {
  // gates get staging vertices in index order (std::map iterates sorted)
  int rank = 0;
  for (const auto& [gate, kind] : c.gates) {
    (void)kind;
    if (gate == v) return rank;
    ++rank;
  }
  fail(ErrorCode::IndexOutOfRange, "vertex " + std::to_string(v) + " is not a gate", v);
}

}  // namespace

int mcv_vertex_of(const MonotoneCircuit& c, int v) {
  if (v < 0 || v >= c.vertex_count)
    fail(ErrorCode::IndexOutOfRange, "vertex " + std::to_string(v) + " out of range", v);
  return 1 + v;
}

int mcv_staging_vertex_of(const MonotoneCircuit& c, int v) {
  if (v < 0 || v >= c.vertex_count)
    fail(ErrorCode::IndexOutOfRange, "vertex " + std::to_string(v) + " out of range", v);
  return 1 + c.vertex_count + staging_rank(c, v);
}

DfaSystem reduce_mcv_to_mfp(const MonotoneCircuit& raw) {
  // re-validate so derived ports/levels are trustworthy even on hand-built input
  MonotoneCircuit c =
      validate_circuit(raw.vertex_count, raw.edges, raw.gates, raw.inputs, raw.output);
  const GadgetSet& g = gadget_tables();

  int n = c.vertex_count;
  int cfg_count = 1 + n + static_cast<int>(c.gates.size());

  std::vector<std::string> names(cfg_count);
  std::vector<std::vector<int>> tables(cfg_count);
  names[0] = "v1_0";
  tables[0] = g.identity.table;

  std::vector<IndexPair> edges;
  for (int v = 0; v < n; ++v) {
    int live = mcv_vertex_of(c, v);
    names[live] = "v1_" + std::to_string(v + 1);
    auto gate = c.gates.find(v);
    if (gate == c.gates.end()) {
      // input: fed straight from the entry, pinned to its assigned bit
      edges.push_back({0, live});
      tables[live] = c.inputs.at(v) == 0 ? g.const_false.table : g.const_true.table;
    } else {
      int staging = mcv_staging_vertex_of(c, v);
      names[staging] = "v0_" + std::to_string(v + 1);
      tables[staging] = g.swap.table;
      tables[live] = gate->second == GateKind::And ? g.and_gate.table : g.or_gate.table;
      // the lower port routes through the staging vertex, the higher directly
      edges.push_back({mcv_vertex_of(c, c.gate_preds[v][0]), staging});
      edges.push_back({mcv_vertex_of(c, c.gate_preds[v][1]), live});
      edges.push_back({staging, live});
    }
  }

  ControlFlowGraph cfg =
      validate_cfg(cfg_count, edges, 0, mcv_vertex_of(c, c.output), std::move(names));
  return make_system(std::move(cfg), g.lattice, std::move(tables), mcv_vertex_of(c, c.output), 3);
}

DfaSystem reduce_gr_to_mop(const GrInstance& g) {
  if (g.vertex_count <= 0)
    fail(ErrorCode::IndexOutOfRange, "the graph needs at least one vertex");
  if (g.source < 0 || g.source >= g.vertex_count)
    fail(ErrorCode::IndexOutOfRange, "source " + std::to_string(g.source) + " out of range",
         g.source);
  if (g.target < 0 || g.target >= g.vertex_count)
    fail(ErrorCode::IndexOutOfRange, "target " + std::to_string(g.target) + " out of range",
         g.target);
  std::vector<std::vector<int>> succs(g.vertex_count);
  for (const auto& [a, b] : g.edges) {
    if (a < 0 || a >= g.vertex_count)
      fail(ErrorCode::IndexOutOfRange, "edge source " + std::to_string(a) + " out of range", a);
    if (b < 0 || b >= g.vertex_count)
      fail(ErrorCode::IndexOutOfRange, "edge target " + std::to_string(b) + " out of range", b);
    succs[a].push_back(b);
  }

  // keep only the source-reachable part: a valid CFG has no unreachable vertex
  std::vector<char> reach(g.vertex_count, 0);
  std::vector<int> stack{g.source};
  reach[g.source] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : succs[v])
      if (!reach[w]) {
        reach[w] = 1;
        stack.push_back(w);
      }
  }

  std::vector<int> index_of(g.vertex_count, -1);
  std::vector<std::string> names{"entry"};
  int next = 1;
  for (int v = 0; v < g.vertex_count; ++v)
    if (reach[v]) {
      index_of[v] = next++;
      names.push_back("g" + std::to_string(v));
    }
  int retained = next - 1;
  int exit = next;
  names.push_back("exit");

  std::vector<IndexPair> edges{{0, index_of[g.source]}};
  for (const auto& [a, b] : g.edges)
    if (reach[a] && reach[b]) edges.push_back({index_of[a], index_of[b]});
  for (int v = 0; v < g.vertex_count; ++v)
    if (reach[v]) edges.push_back({index_of[v], exit});
  if (retained == 1) edges.push_back({0, exit});

  std::vector<std::vector<int>> meet{{0, 0}, {0, 1}};
  std::vector<std::vector<int>> join{{0, 1}, {1, 1}};
  Lattice two = Lattice::from_tables(2, meet, join, {"0", "1"});

  std::vector<std::vector<int>> tables(exit + 1, std::vector<int>{0, 1});
  if (reach[g.target]) tables[index_of[g.target]] = {0, 0};

  ControlFlowGraph cfg = validate_cfg(exit + 1, edges, 0, exit, std::move(names));
  return make_system(std::move(cfg), std::move(two), std::move(tables), exit, 0);
}

}  // namespace latflow
