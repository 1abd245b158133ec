#include "latflow/dfa.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace latflow {

namespace {

void check_vertex(int v, int n) {
  if (v < 0 || v >= n)
    fail(ErrorCode::IndexOutOfRange,
         "vertex index " + std::to_string(v) + " not in [0," + std::to_string(n) + ")", v);
}

}  // namespace

std::string ControlFlowGraph::vertex_name(int v) const {
  check_vertex(v, vertex_count);
  if (!names.empty()) return names[v];
  return "v" + std::to_string(v + 1);
}

ControlFlowGraph validate_cfg(int vertex_count, const std::vector<IndexPair>& edges, int entry,
                              int exit, std::vector<std::string> names) {
  if (vertex_count <= 0) fail(ErrorCode::IndexOutOfRange, "vertex count must be positive");
  check_vertex(entry, vertex_count);
  check_vertex(exit, vertex_count);
  if (!names.empty() && static_cast<int>(names.size()) != vertex_count)
    fail(ErrorCode::LengthMismatch, "names list has wrong length");

  std::set<IndexPair> unique;
  for (const auto& [a, b] : edges) {
    check_vertex(a, vertex_count);
    check_vertex(b, vertex_count);
    unique.insert({a, b});
  }

  ControlFlowGraph g;
  g.vertex_count = vertex_count;
  g.edges.assign(unique.begin(), unique.end());
  g.entry = entry;
  g.exit = exit;
  g.names = std::move(names);
  g.preds.assign(vertex_count, {});
  g.succs.assign(vertex_count, {});
  for (const auto& [a, b] : g.edges) {
    g.succs[a].push_back(b);
    g.preds[b].push_back(a);
  }

  if (!g.preds[entry].empty())
    fail(ErrorCode::EntryHasPredecessor,
         "entry " + g.vertex_name(entry) + " has a predecessor", entry);
  if (!g.succs[exit].empty())
    fail(ErrorCode::ExitHasSuccessor, "exit " + g.vertex_name(exit) + " has a successor", exit);

  std::vector<char> seen(vertex_count, 0);
  std::vector<int> stack{entry};
  seen[entry] = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : g.succs[v])
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
  }
  for (int v = 0; v < vertex_count; ++v)
    if (!seen[v])
      fail(ErrorCode::UnreachableVertex,
           "vertex " + g.vertex_name(v) + " is unreachable from the entry", v);

  // any other indegree-0 vertex would be unreachable, so this is a guard only
  for (int v = 0; v < vertex_count; ++v) {
    if (v != entry && g.preds[v].empty())
      fail(ErrorCode::NotUniqueEntry, "second indegree-0 vertex " + g.vertex_name(v), v);
    if (v != exit && g.succs[v].empty())
      fail(ErrorCode::NotUniqueExit, "second outdegree-0 vertex " + g.vertex_name(v), v);
  }

  return g;
}

TransferFunction make_transfer(const Lattice& lattice, std::vector<int> table) {
  if (static_cast<int>(table.size()) != lattice.size())
    fail(ErrorCode::LengthMismatch, "transfer table has " + std::to_string(table.size()) +
                                        " entries for " + std::to_string(lattice.size()) +
                                        " elements");
  for (int v : table)
    if (v < 0 || v >= lattice.size())
      fail(ErrorCode::IndexOutOfRange, "transfer output " + std::to_string(v) + " out of range",
           v);
  return TransferFunction{std::move(table)};
}

bool check_monotone(const Lattice& lattice, const TransferFunction& f) {
  for (int x = 0; x < lattice.size(); ++x)
    for (int y = 0; y < lattice.size(); ++y)
      if (lattice.leq(x, y) && !lattice.leq(f.apply(x), f.apply(y))) return false;
  return true;
}

bool check_distributive(const Lattice& lattice, const TransferFunction& f) {
  for (int x = 0; x < lattice.size(); ++x)
    for (int y = 0; y < lattice.size(); ++y)
      if (f.apply(lattice.meet(x, y)) != lattice.meet(f.apply(x), f.apply(y))) return false;
  return true;
}

DfaSystem make_system(ControlFlowGraph cfg, Lattice lattice,
                      std::vector<std::vector<int>> function_tables, int query_vertex,
                      int query_value) {
  if (static_cast<int>(function_tables.size()) != cfg.vertex_count)
    fail(ErrorCode::LengthMismatch,
         "expected " + std::to_string(cfg.vertex_count) + " transfer functions, got " +
             std::to_string(function_tables.size()));
  check_vertex(query_vertex, cfg.vertex_count);
  if (query_value < 0 || query_value >= lattice.size())
    fail(ErrorCode::IndexOutOfRange, "query value out of range", query_value);

  DfaSystem sys;
  sys.functions.reserve(function_tables.size());
  for (auto& t : function_tables) sys.functions.push_back(make_transfer(lattice, std::move(t)));
  sys.cfg = std::move(cfg);
  sys.lattice = std::move(lattice);
  sys.query_vertex = query_vertex;
  sys.query_value = query_value;
  return sys;
}

bool system_is_monotone(const DfaSystem& sys) {
  for (const auto& f : sys.functions)
    if (!check_monotone(sys.lattice, f)) return false;
  return true;
}

TupleValue transfer_step(const DfaSystem& sys, const TupleValue& x) {
  const int n = sys.cfg.vertex_count;
  if (x.size() != n) fail(ErrorCode::LengthMismatch, "tuple length does not match vertex count");
  if (!(&x.lattice() == &sys.lattice || x.lattice() == sys.lattice))
    fail(ErrorCode::LatticeMismatch, "tuple is over a different lattice");
  std::vector<int> out(n);
  for (int v = 0; v < n; ++v) {
    int in = sys.lattice.top();  // empty meet
    for (int p : sys.cfg.preds[v]) in = sys.lattice.meet(in, x[p]);
    out[v] = sys.functions[v].apply(in);
  }
  return TupleValue(sys.lattice, std::move(out));
}

int apply_path_function(const DfaSystem& sys, const std::vector<int>& path) {
  if (path.empty()) fail(ErrorCode::NotAPath, "empty path");
  for (int v : path) check_vertex(v, sys.cfg.vertex_count);
  for (size_t i = 0; i + 1 < path.size(); ++i) {
    const auto& s = sys.cfg.succs[path[i]];
    if (std::find(s.begin(), s.end(), path[i + 1]) == s.end())
      fail(ErrorCode::NotAPath,
           "(" + std::to_string(path[i]) + "," + std::to_string(path[i + 1]) + ") is not an edge",
           path[i]);
  }
  int val = sys.lattice.top();
  for (int v : path) val = sys.functions[v].apply(val);
  return val;
}

}  // namespace latflow
