#include "latflow/solvers.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <string>

namespace latflow {

namespace {

std::vector<int> reverse_postorder(const ControlFlowGraph& g) {
  std::vector<int> order;
  std::vector<char> seen(g.vertex_count, 0);
  // iterative DFS keeping an explicit child cursor so postorder is exact
  std::vector<std::pair<int, size_t>> stack;
  stack.emplace_back(g.entry, 0);
  seen[g.entry] = 1;
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    if (next < g.succs[v].size()) {
      const int w = g.succs[v][next++];
      if (!seen[w]) {
        seen[w] = 1;
        stack.emplace_back(w, 0);
      }
    } else {
      order.push_back(v);
      stack.pop_back();
    }
  }
  std::reverse(order.begin(), order.end());
  return order;
}

void step_into(const DfaSystem& sys, const std::vector<int>& x, std::vector<int>& out) {
  for (int v = 0; v < sys.cfg.vertex_count; ++v) {
    int in = sys.lattice.top();
    for (int p : sys.cfg.preds[v]) in = sys.lattice.meet(in, x[p]);
    out[v] = sys.functions[v].apply(in);
  }
}

}  // namespace

SolveReport solve_mfp(const DfaSystem& sys) {
  const int n = sys.cfg.vertex_count;
  const auto& L = sys.lattice;
  for (int v = 0; v < n; ++v)
    if (!check_monotone(L, sys.functions[v]))
      fail(ErrorCode::NonMonotoneFunction,
           "transfer function at " + sys.cfg.vertex_name(v) + " is not monotone", v);

  SolveReport report;
  report.solution.assign(n, L.top());
  auto& x = report.solution;

  std::deque<int> worklist;
  std::vector<char> queued(n, 0);
  for (int v : reverse_postorder(sys.cfg)) {
    worklist.push_back(v);
    queued[v] = 1;
  }

  // every component can strictly drop at most height times; more means the
  // monotonicity precondition was violated somewhere
  const long drop_budget = static_cast<long>(n) * L.height();
  long drops = 0;
  while (!worklist.empty()) {
    const int v = worklist.front();
    worklist.pop_front();
    queued[v] = 0;
    ++report.iterations;

    int in = L.top();
    for (int p : sys.cfg.preds[v]) in = L.meet(in, x[p]);
    const int next = sys.functions[v].apply(in);
    if (next == x[v]) continue;
    if (!L.leq(next, x[v]) || ++drops > drop_budget)
      fail(ErrorCode::IterationBoundExceeded,
           "descending iteration exceeded its drop budget at " + sys.cfg.vertex_name(v), v);
    x[v] = next;
    for (int w : sys.cfg.succs[v])
      if (!queued[w]) {
        queued[w] = 1;
        worklist.push_back(w);
      }
  }

  report.decision = x[sys.query_vertex] == sys.query_value;
  return report;
}

TupleValue mfp_oracle(const DfaSystem& sys, std::int64_t tuple_cap) {
  const int n = sys.cfg.vertex_count;
  const int m = sys.lattice.size();
  std::int64_t total = 1;
  for (int i = 0; i < n; ++i) {
    total *= m;
    if (total > tuple_cap)
      fail(ErrorCode::InstanceTooLarge, "tuple space exceeds the cap of " +
                                            std::to_string(tuple_cap) + " candidates");
  }

  std::vector<std::vector<int>> fixed_points;
  std::vector<int> x(n, 0), stepped(n);
  while (true) {
    step_into(sys, x, stepped);
    if (stepped == x) fixed_points.push_back(x);
    int i = 0;
    for (; i < n; ++i) {
      if (++x[i] < m) break;
      x[i] = 0;
    }
    if (i == n) break;
  }

  if (fixed_points.empty())
    fail(ErrorCode::NoFixedPoint, "combined step operator has no fixed point");
  auto leq_vec = [&](const std::vector<int>& a, const std::vector<int>& b) {
    for (int i = 0; i < n; ++i)
      if (!sys.lattice.leq(a[i], b[i])) return false;
    return true;
  };
  size_t best = 0;
  for (size_t i = 1; i < fixed_points.size(); ++i)
    if (leq_vec(fixed_points[best], fixed_points[i])) best = i;
  for (const auto& fp : fixed_points)
    if (!leq_vec(fp, fixed_points[best]))
      fail(ErrorCode::NoMaximum, "fixed points have no maximum element");
  return TupleValue(sys.lattice, fixed_points[best]);
}

ProductGraph build_product_graph(const DfaSystem& sys) {
  ProductGraph pg;
  pg.cfg_vertex_count = sys.cfg.vertex_count;
  pg.lattice_size = sys.lattice.size();
  pg.adjacency.assign(pg.vertex_total(), {});
  for (int i = 0; i < pg.cfg_vertex_count; ++i)
    for (int j = 0; j < pg.lattice_size; ++j)
      pg.adjacency[pg.id(0, i, j)].push_back(pg.id(1, i, sys.functions[i].apply(j)));
  for (const auto& [a, b] : sys.cfg.edges)
    for (int k = 0; k < pg.lattice_size; ++k)
      pg.adjacency[pg.id(1, a, k)].push_back(pg.id(0, b, k));
  pg.source = pg.id(0, sys.cfg.entry, sys.lattice.top());
  return pg;
}

namespace {

std::vector<char> bfs_from_source(const ProductGraph& pg, long* visited_count = nullptr) {
  std::vector<char> seen(pg.vertex_total(), 0);
  std::deque<int> queue{pg.source};
  seen[pg.source] = 1;
  long count = 0;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    ++count;
    for (int w : pg.adjacency[v])
      if (!seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
  }
  if (visited_count) *visited_count = count;
  return seen;
}

}  // namespace

std::vector<int> reachable_values(const ProductGraph& pg, int target_cfg_vertex) {
  if (target_cfg_vertex < 0 || target_cfg_vertex >= pg.cfg_vertex_count)
    fail(ErrorCode::IndexOutOfRange, "target vertex out of range", target_cfg_vertex);
  const auto seen = bfs_from_source(pg);
  std::vector<int> out;
  for (int j = 0; j < pg.lattice_size; ++j)
    if (seen[pg.id(1, target_cfg_vertex, j)]) out.push_back(j);
  return out;
}

bool gmr_decide(const ProductGraph& pg, int target_cfg_vertex, int expected,
                const Lattice& lattice) {
  int temp = lattice.top();
  for (int j : reachable_values(pg, target_cfg_vertex)) temp = lattice.meet(temp, j);
  return temp == expected;
}

SolveReport solve_mop(const DfaSystem& sys) {
  const auto pg = build_product_graph(sys);
  SolveReport report;
  const auto seen = bfs_from_source(pg, &report.visited);
  report.solution.assign(sys.cfg.vertex_count, 0);
  for (int v = 0; v < sys.cfg.vertex_count; ++v) {
    int temp = sys.lattice.top();
    for (int j = 0; j < sys.lattice.size(); ++j)
      if (seen[pg.id(1, v, j)]) temp = sys.lattice.meet(temp, j);
    report.solution[v] = temp;
  }
  report.decision = report.solution[sys.query_vertex] == sys.query_value;
  return report;
}

int mop_oracle(const DfaSystem& sys, int vertex, OracleMode mode, std::int64_t length_cap) {
  const int n = sys.cfg.vertex_count;
  const int m = sys.lattice.size();
  if (vertex < 0 || vertex >= n) fail(ErrorCode::IndexOutOfRange, "vertex out of range", vertex);
  const std::int64_t max_len = static_cast<std::int64_t>(n) * m;
  if (max_len > length_cap)
    fail(ErrorCode::InstanceTooLarge,
         "path length bound " + std::to_string(max_len) + " exceeds the cap");

  int acc = sys.lattice.top();
  // pruned mode: cut a branch whose (vertex, value) state was already reached
  // at the same or a shorter path length; a strictly shorter arrival is
  // re-expanded so the length bound never truncates a state's extensions
  std::vector<std::int64_t> best_len;
  if (mode == OracleMode::Pruned) best_len.assign(static_cast<size_t>(n) * m, max_len + 1);

  // depth-first extension of every entry path within the length bound
  std::function<void(int, int, std::int64_t)> extend = [&](int v, int val, std::int64_t len) {
    if (v == vertex) acc = sys.lattice.meet(acc, val);
    if (len == max_len) return;
    if (mode == OracleMode::Pruned) {
      auto& best = best_len[static_cast<size_t>(v) * m + val];
      if (len >= best) return;
      best = len;
    }
    for (int w : sys.cfg.succs[v]) extend(w, sys.functions[w].apply(val), len + 1);
  };
  extend(sys.cfg.entry, sys.functions[sys.cfg.entry].apply(sys.lattice.top()), 1);
  return acc;
}

}  // namespace latflow
