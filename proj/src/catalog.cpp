#include "latflow/catalog.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace latflow {

namespace {

int pick(std::mt19937_64& rng, int lo, int hi) {  // inclusive
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

bool chance(std::mt19937_64& rng, double p) {
  return (rng() % 1000000) < static_cast<std::uint64_t>(p * 1000000.0);
}

std::string subset_name(unsigned mask, int universe) {
  std::string s = "{";
  bool first = true;
  for (int b = 0; b < universe; ++b)
    if (mask & (1u << b)) {
      if (!first) s += ",";
      s += "d" + std::to_string(b);
      first = false;
    }
  return s + "}";
}

}  // namespace

Lattice powerset_lattice(int universe) {
  if (universe < 0 || universe > 6)
    fail(ErrorCode::InstanceTooLarge, "universe must be between 0 and 6");
  const int m = 1 << universe;
  std::vector<std::vector<int>> meet(m, std::vector<int>(m));
  std::vector<std::vector<int>> join(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      meet[a][b] = a | b;  // more facts = lower
      join[a][b] = a & b;
    }
  std::vector<std::string> names;
  names.reserve(m);
  for (int x = 0; x < m; ++x) names.push_back(subset_name(static_cast<unsigned>(x), universe));
  return Lattice::from_tables(m, std::move(meet), std::move(join), std::move(names));
}

DfaSystem make_bitvector_system(const BitvectorFramework& spec, ControlFlowGraph cfg,
                                int query_vertex, int query_value) {
  const int n = cfg.vertex_count;
  if (static_cast<int>(spec.gen.size()) != n || static_cast<int>(spec.kill.size()) != n)
    fail(ErrorCode::LengthMismatch, "gen/kill lists must have one mask per vertex");
  const auto L = powerset_lattice(spec.universe);
  const unsigned full = static_cast<unsigned>(L.size() - 1);
  for (int v = 0; v < n; ++v)
    if ((spec.gen[v] | full) != full || (spec.kill[v] | full) != full)
      fail(ErrorCode::IndexOutOfRange, "gen/kill mask outside the universe", v);

  std::vector<std::vector<int>> tables(n, std::vector<int>(L.size()));
  for (int v = 0; v < n; ++v)
    for (int x = 0; x < L.size(); ++x)
      tables[v][x] =
          static_cast<int>(spec.gen[v] | (static_cast<unsigned>(x) & ~spec.kill[v]));
  return make_system(std::move(cfg), L, std::move(tables), query_vertex, query_value);
}

Lattice random_lattice(std::mt19937_64& rng, int element_count, int max_attempts) {
  if (element_count <= 0) fail(ErrorCode::IndexOutOfRange, "element count must be positive");
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    // random DAG along a random permutation, closed into a poset
    std::vector<int> perm(element_count);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const double p = 0.2 + 0.01 * pick(rng, 0, 60);
    std::vector<IndexPair> pairs;
    for (int i = 0; i < element_count; ++i) {
      pairs.emplace_back(i, i);
      for (int j = i + 1; j < element_count; ++j)
        if (chance(rng, p)) pairs.emplace_back(perm[i], perm[j]);
    }
    // transitive closure
    std::vector<char> mat(static_cast<size_t>(element_count) * element_count, 0);
    for (const auto& [a, b] : pairs) mat[static_cast<size_t>(a) * element_count + b] = 1;
    for (int k = 0; k < element_count; ++k)
      for (int i = 0; i < element_count; ++i)
        if (mat[static_cast<size_t>(i) * element_count + k])
          for (int j = 0; j < element_count; ++j)
            if (mat[static_cast<size_t>(k) * element_count + j])
              mat[static_cast<size_t>(i) * element_count + j] = 1;
    try {
      return poset_to_algebra(Poset(element_count, std::move(mat)));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotALattice && e.code() != ErrorCode::Unbounded) throw;
    }
  }
  fail(ErrorCode::GenerationFailed,
       "no lattice found in " + std::to_string(max_attempts) + " attempts");
}

ControlFlowGraph make_random_cfg(std::mt19937_64& rng, int vertex_count, double edge_density) {
  const int n = vertex_count;
  if (n <= 0) fail(ErrorCode::IndexOutOfRange, "vertex count must be positive");
  std::vector<IndexPair> edges;
  // backbone: every vertex gets an edge from an earlier one, so everything is
  // reachable from 0 and only 0 has indegree 0
  for (int v = 1; v < n; ++v) edges.emplace_back(pick(rng, 0, v - 1), v);
  // every interior vertex needs a successor so the exit stays unique
  std::vector<char> has_succ(n, 0);
  for (const auto& [a, b] : edges) has_succ[a] = 1;
  for (int v = 1; v < n - 1; ++v)
    if (!has_succ[v]) edges.emplace_back(v, pick(rng, v + 1, n - 1));
  // extra edges anywhere the degree rules allow: not into the entry, not out
  // of the exit; interior self-loops and back edges welcome
  for (int a = 0; a < n - 1; ++a)
    for (int b = 1; b < n; ++b) {
      if (a == b && (a == 0 || a == n - 1)) continue;
      if (chance(rng, edge_density * 0.35)) edges.emplace_back(a, b);
    }
  return validate_cfg(n, edges, 0, n == 1 ? 0 : n - 1);
}

namespace {

// covers of the derived order, as lower-cover lists
std::vector<std::vector<int>> lower_covers(const Lattice& L) {
  const int m = L.size();
  std::vector<std::vector<int>> cov(m);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      if (x == y || !L.leq(y, x)) continue;
      bool immediate = true;
      for (int z = 0; z < m && immediate; ++z)
        if (z != x && z != y && L.leq(y, z) && L.leq(z, x)) immediate = false;
      if (immediate) cov[x].push_back(y);
    }
  return cov;
}

std::vector<int> random_monotone_table(std::mt19937_64& rng, const Lattice& L) {
  const int m = L.size();
  // linear extension by down-set size
  std::vector<int> order(m), downset(m, 0);
  std::iota(order.begin(), order.end(), 0);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      if (L.leq(y, x)) ++downset[x];
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return downset[a] < downset[b]; });

  const auto covers = lower_covers(L);
  std::vector<int> table(m, -1);
  for (int x : order) {
    // outputs of the lower covers are already fixed; the common up-set of
    // those outputs is the up-set of their join
    int least = L.bottom();
    for (int y : covers[x]) least = L.join(least, table[y]);
    std::vector<int> candidates;
    for (int z = 0; z < m; ++z)
      if (L.leq(least, z)) candidates.push_back(z);
    table[x] = candidates[pick(rng, 0, static_cast<int>(candidates.size()) - 1)];
  }
  return table;
}

DfaSystem random_system_impl(std::uint64_t seed, int vertex_count, int element_count,
                             double edge_density, bool monotone) {
  if (vertex_count <= 0 || element_count <= 0)
    fail(ErrorCode::IndexOutOfRange, "vertex and element counts must be positive");
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + (monotone ? 1 : 2));
  auto cfg = make_random_cfg(rng, vertex_count, edge_density);
  const auto L = random_lattice(rng, element_count);
  std::vector<std::vector<int>> tables;
  tables.reserve(vertex_count);
  for (int v = 0; v < vertex_count; ++v) {
    if (monotone) {
      tables.push_back(random_monotone_table(rng, L));
    } else {
      std::vector<int> t(L.size());
      for (auto& o : t) o = pick(rng, 0, L.size() - 1);
      tables.push_back(std::move(t));
    }
  }
  const int qv = pick(rng, 0, vertex_count - 1);
  const int ql = pick(rng, 0, L.size() - 1);
  return make_system(std::move(cfg), L, std::move(tables), qv, ql);
}

}  // namespace

DfaSystem make_random_monotone_system(std::uint64_t seed, int vertex_count, int element_count,
                                      double edge_density) {
  return random_system_impl(seed, vertex_count, element_count, edge_density, true);
}

DfaSystem make_random_system(std::uint64_t seed, int vertex_count, int element_count,
                             double edge_density) {
  return random_system_impl(seed, vertex_count, element_count, edge_density, false);
}

std::array<std::vector<int>, 6> worked_example_tables() {
  return {{
      {0, 3, 3, 2, 4},  // f1
      {0, 2, 2, 4, 4},  // f2
      {1, 2, 2, 1, 2},  // f3
      {0, 2, 4, 3, 4},  // f4
      {1, 1, 4, 2, 4},  // f5
      {0, 3, 4, 3, 4},  // f6
  }};
}

DfaSystem diamond_gap_system() {
  const auto cover = validate_cover(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  auto L = poset_to_algebra(cover_to_poset(cover), {"bot", "a", "b", "top"});
  auto cfg = validate_cfg(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}, 0, 3, {"s", "u", "w", "t"});
  std::vector<std::vector<int>> tables = {
      {0, 1, 2, 3},  // s: identity
      {1, 1, 1, 1},  // u: constant a
      {2, 2, 2, 2},  // w: constant b
      {0, 3, 3, 3},  // t: bot sticks, anything else saturates
  };
  return make_system(std::move(cfg), std::move(L), std::move(tables), 3, 3);
}

}  // namespace latflow
