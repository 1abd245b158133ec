#include "latflow/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace latflow {

namespace {

std::string pair_str(int a, int b) {
  std::ostringstream os;
  os << "(" << a << "," << b << ")";
  return os.str();
}

void check_index(int i, int count, const char* what) {
  if (i < 0 || i >= count) {
    std::ostringstream os;
    os << what << " index " << i << " not in [0," << count << ")";
    fail(ErrorCode::IndexOutOfRange, os.str(), i);
  }
}

// Reachability over an adjacency list, reflexive.
std::vector<char> reach_from(int start, int n, const std::vector<std::vector<int>>& succ) {
  std::vector<char> seen(n, 0);
  std::vector<int> stack{start};
  seen[start] = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : succ[v])
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
  }
  return seen;
}

}  // namespace

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::ReflexivePair: return "ReflexivePair";
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::RedundantCover: return "RedundantCover";
    case ErrorCode::NotAPoset: return "NotAPoset";
    case ErrorCode::NotALattice: return "NotALattice";
    case ErrorCode::Unbounded: return "Unbounded";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::LatticeMismatch: return "LatticeMismatch";
    case ErrorCode::EntryHasPredecessor: return "EntryHasPredecessor";
    case ErrorCode::ExitHasSuccessor: return "ExitHasSuccessor";
    case ErrorCode::NotUniqueEntry: return "NotUniqueEntry";
    case ErrorCode::NotUniqueExit: return "NotUniqueExit";
    case ErrorCode::UnreachableVertex: return "UnreachableVertex";
    case ErrorCode::NotAPath: return "NotAPath";
    case ErrorCode::NonMonotoneFunction: return "NonMonotoneFunction";
    case ErrorCode::IterationBoundExceeded: return "IterationBoundExceeded";
    case ErrorCode::InstanceTooLarge: return "InstanceTooLarge";
    case ErrorCode::NoFixedPoint: return "NoFixedPoint";
    case ErrorCode::NoMaximum: return "NoMaximum";
    case ErrorCode::BadIndegree: return "BadIndegree";
    case ErrorCode::NoUniqueOutput: return "NoUniqueOutput";
    case ErrorCode::AssignmentMismatch: return "AssignmentMismatch";
    case ErrorCode::GenerationFailed: return "GenerationFailed";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::SchemaError: return "SchemaError";
  }
  return "Unknown";
}

Poset::Poset(int element_count, std::vector<char> leq_table)
    : element_count_(element_count), leq_(std::move(leq_table)) {}

bool Poset::leq(int a, int b) const {
  check_index(a, element_count_, "element");
  check_index(b, element_count_, "element");
  return leq_[static_cast<size_t>(a) * element_count_ + b] != 0;
}

CoverRelation validate_cover(int element_count, const std::vector<IndexPair>& pairs) {
  if (element_count <= 0) fail(ErrorCode::IndexOutOfRange, "element count must be positive");
  std::set<IndexPair> unique;
  for (const auto& [a, b] : pairs) {
    check_index(a, element_count, "element");
    check_index(b, element_count, "element");
    if (a == b) fail(ErrorCode::ReflexivePair, "cover pair " + pair_str(a, b), a);
    unique.insert({a, b});
  }

  std::vector<std::vector<int>> succ(element_count);
  for (const auto& [a, b] : unique) succ[a].push_back(b);

  // acyclicity: iteratively strip sinks
  std::vector<int> outdeg(element_count, 0);
  std::vector<std::vector<int>> pred(element_count);
  for (const auto& [a, b] : unique) {
    ++outdeg[a];
    pred[b].push_back(a);
  }
  std::vector<int> order;
  for (int v = 0; v < element_count; ++v)
    if (outdeg[v] == 0) order.push_back(v);
  for (size_t i = 0; i < order.size(); ++i)
    for (int p : pred[order[i]])
      if (--outdeg[p] == 0) order.push_back(p);
  if (static_cast<int>(order.size()) != element_count)
    fail(ErrorCode::CycleDetected, "cover relation contains a directed cycle");

  // redundancy: a pair implied by a path of length >= 2 is not a cover
  for (const auto& [a, b] : unique) {
    for (int mid : succ[a]) {
      if (mid == b) continue;
      if (reach_from(mid, element_count, succ)[b])
        fail(ErrorCode::RedundantCover,
             "pair " + pair_str(a, b) + " is implied by a longer path", a);
    }
  }

  return CoverRelation{element_count, {unique.begin(), unique.end()}};
}

Poset make_poset(int element_count, const std::vector<IndexPair>& leq_pairs) {
  if (element_count <= 0) fail(ErrorCode::IndexOutOfRange, "element count must be positive");
  std::vector<char> mat(static_cast<size_t>(element_count) * element_count, 0);
  auto at = [&](int a, int b) -> char& {
    return mat[static_cast<size_t>(a) * element_count + b];
  };
  for (const auto& [a, b] : leq_pairs) {
    check_index(a, element_count, "element");
    check_index(b, element_count, "element");
    at(a, b) = 1;
  }
  for (int i = 0; i < element_count; ++i)
    if (!at(i, i)) fail(ErrorCode::NotAPoset, "relation is not reflexive at " + std::to_string(i), i);
  for (int i = 0; i < element_count; ++i)
    for (int j = 0; j < element_count; ++j) {
      if (i != j && at(i, j) && at(j, i))
        fail(ErrorCode::NotAPoset, "relation is not antisymmetric on " + pair_str(i, j), i);
      if (!at(i, j)) continue;
      for (int k = 0; k < element_count; ++k)
        if (at(j, k) && !at(i, k))
          fail(ErrorCode::NotAPoset,
               "relation is not transitive through " + pair_str(i, j) + "," + pair_str(j, k), i);
    }
  return Poset(element_count, std::move(mat));
}

Poset cover_to_poset(const CoverRelation& cover) {
  const int m = cover.element_count;
  std::vector<std::vector<int>> succ(m);
  for (const auto& [a, b] : cover.covers) succ[a].push_back(b);
  std::vector<char> mat(static_cast<size_t>(m) * m, 0);
  for (int v = 0; v < m; ++v) {
    const auto seen = reach_from(v, m, succ);
    for (int w = 0; w < m; ++w)
      if (seen[w]) mat[static_cast<size_t>(v) * m + w] = 1;
  }
  return Poset(m, std::move(mat));
}

Lattice poset_to_algebra(const Poset& poset, std::vector<std::string> names) {
  const int m = poset.size();
  std::vector<std::vector<int>> meet(m, std::vector<int>(m, -1));
  std::vector<std::vector<int>> join(m, std::vector<int>(m, -1));

  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      // least upper bound: scan the upper bounds keeping a minimal candidate,
      // then verify the candidate is below every upper bound
      int lub = -1;
      for (int k = 0; k < m; ++k)
        if (poset.leq(a, k) && poset.leq(b, k) && (lub == -1 || poset.leq(k, lub))) lub = k;
      if (lub == -1)
        fail(ErrorCode::NotALattice, "pair " + pair_str(a, b) + " has no upper bound", a);
      for (int k = 0; k < m; ++k)
        if (poset.leq(a, k) && poset.leq(b, k) && !poset.leq(lub, k))
          fail(ErrorCode::NotALattice, "pair " + pair_str(a, b) + " has no least upper bound", a);
      join[a][b] = lub;

      int glb = -1;
      for (int k = 0; k < m; ++k)
        if (poset.leq(k, a) && poset.leq(k, b) && (glb == -1 || poset.leq(glb, k))) glb = k;
      if (glb == -1)
        fail(ErrorCode::NotALattice, "pair " + pair_str(a, b) + " has no lower bound", a);
      for (int k = 0; k < m; ++k)
        if (poset.leq(k, a) && poset.leq(k, b) && !poset.leq(k, glb))
          fail(ErrorCode::NotALattice,
               "pair " + pair_str(a, b) + " has no greatest lower bound", a);
      meet[a][b] = glb;
    }

  return Lattice::from_tables(m, std::move(meet), std::move(join), std::move(names));
}

Lattice Lattice::from_tables(int element_count, std::vector<std::vector<int>> meet,
                             std::vector<std::vector<int>> join,
                             std::vector<std::string> names) {
  const int m = element_count;
  if (m <= 0) fail(ErrorCode::IndexOutOfRange, "element count must be positive");
  auto check_table = [m](const std::vector<std::vector<int>>& t, const char* what) {
    if (static_cast<int>(t.size()) != m)
      fail(ErrorCode::LengthMismatch, std::string(what) + " table has wrong row count");
    for (const auto& row : t) {
      if (static_cast<int>(row.size()) != m)
        fail(ErrorCode::LengthMismatch, std::string(what) + " table has wrong row length");
      for (int v : row) check_index(v, m, what);
    }
  };
  check_table(meet, "meet");
  check_table(join, "join");
  if (!names.empty() && static_cast<int>(names.size()) != m)
    fail(ErrorCode::LengthMismatch, "names list has wrong length");

  for (int a = 0; a < m; ++a) {
    if (meet[a][a] != a || join[a][a] != a)
      fail(ErrorCode::NotALattice, "operation not idempotent at " + std::to_string(a), a);
    for (int b = 0; b < m; ++b) {
      if (meet[a][b] != meet[b][a] || join[a][b] != join[b][a])
        fail(ErrorCode::NotALattice, "operation not commutative on " + pair_str(a, b), a);
      if (meet[a][join[a][b]] != a || join[a][meet[a][b]] != a)
        fail(ErrorCode::NotALattice, "absorption fails on " + pair_str(a, b), a);
      for (int c = 0; c < m; ++c) {
        if (meet[meet[a][b]][c] != meet[a][meet[b][c]])
          fail(ErrorCode::NotALattice, "meet not associative", a);
        if (join[join[a][b]][c] != join[a][join[b][c]])
          fail(ErrorCode::NotALattice, "join not associative", a);
      }
    }
  }

  Lattice L;
  L.element_count_ = m;
  L.leq_.assign(static_cast<size_t>(m) * m, 0);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (meet[a][b] == a) L.leq_[static_cast<size_t>(a) * m + b] = 1;

  // the derived order must be a poset (reflexivity/antisymmetry follow from
  // the laws; keep the explicit check as a guard)
  auto leq = [&](int a, int b) { return L.leq_[static_cast<size_t>(a) * m + b] != 0; };
  for (int a = 0; a < m; ++a) {
    if (!leq(a, a)) fail(ErrorCode::NotALattice, "derived order not reflexive", a);
    for (int b = 0; b < m; ++b) {
      if (a != b && leq(a, b) && leq(b, a))
        fail(ErrorCode::NotALattice, "derived order not antisymmetric", a);
      if (!leq(a, b)) continue;
      for (int c = 0; c < m; ++c)
        if (leq(b, c) && !leq(a, c))
          fail(ErrorCode::NotALattice, "derived order not transitive", a);
    }
  }

  L.bottom_ = L.top_ = -1;
  for (int v = 0; v < m; ++v) {
    bool is_bottom = true, is_top = true;
    for (int w = 0; w < m; ++w) {
      is_bottom = is_bottom && leq(v, w);
      is_top = is_top && leq(w, v);
    }
    if (is_bottom) L.bottom_ = v;
    if (is_top) L.top_ = v;
  }
  if (L.bottom_ == -1 || L.top_ == -1)
    fail(ErrorCode::Unbounded, "order has no global bottom or top");
  for (int v = 0; v < m; ++v)
    if (meet[v][L.top_] != v || join[v][L.bottom_] != v)
      fail(ErrorCode::NotALattice, "bound identities fail at " + std::to_string(v), v);

  // height: longest strictly ascending chain, by DP over elements sorted by
  // down-set size (a linear extension of the order)
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> downset(m, 0);
  for (int v = 0; v < m; ++v)
    for (int w = 0; w < m; ++w)
      if (leq(w, v)) ++downset[v];
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return downset[x] < downset[y]; });
  std::vector<int> h(m, 0);
  for (int v : order)
    for (int u = 0; u < m; ++u)
      if (u != v && leq(u, v)) h[v] = std::max(h[v], h[u] + 1);
  L.height_ = h[L.top_];

  L.meet_ = std::move(meet);
  L.join_ = std::move(join);
  L.names_ = std::move(names);
  return L;
}

int Lattice::meet(int a, int b) const {
  check_index(a, element_count_, "element");
  check_index(b, element_count_, "element");
  return meet_[a][b];
}

int Lattice::join(int a, int b) const {
  check_index(a, element_count_, "element");
  check_index(b, element_count_, "element");
  return join_[a][b];
}

bool Lattice::leq(int a, int b) const {
  check_index(a, element_count_, "element");
  check_index(b, element_count_, "element");
  return leq_[static_cast<size_t>(a) * element_count_ + b] != 0;
}

std::string Lattice::element_name(int i) const {
  check_index(i, element_count_, "element");
  if (!names_.empty()) return names_[i];
  return "l" + std::to_string(i + 1);
}

Poset Lattice::derived_poset() const { return Poset(element_count_, leq_); }

bool Lattice::operator==(const Lattice& other) const {
  return element_count_ == other.element_count_ && meet_ == other.meet_ &&
         join_ == other.join_ && names_ == other.names_;
}

int meet_of_set(const Lattice& lattice, const std::vector<int>& elements) {
  int acc = lattice.top();
  for (int e : elements) acc = lattice.meet(acc, e);
  return acc;
}

Lattice chain_lattice(int element_count) {
  std::vector<std::vector<int>> meet(element_count, std::vector<int>(element_count));
  std::vector<std::vector<int>> join(element_count, std::vector<int>(element_count));
  for (int a = 0; a < element_count; ++a)
    for (int b = 0; b < element_count; ++b) {
      meet[a][b] = std::min(a, b);
      join[a][b] = std::max(a, b);
    }
  return Lattice::from_tables(element_count, std::move(meet), std::move(join));
}

TupleValue::TupleValue(const Lattice& lattice, std::vector<int> values)
    : lattice_(&lattice), values_(std::move(values)) {
  for (int v : values_) check_index(v, lattice.size(), "element");
}

bool TupleValue::operator==(const TupleValue& other) const {
  return *lattice_ == *other.lattice_ && values_ == other.values_;
}

TupleValue top_tuple(const Lattice& lattice, int length) {
  return TupleValue(lattice, std::vector<int>(length, lattice.top()));
}

namespace {
void check_compatible(const TupleValue& a, const TupleValue& b) {
  if (a.size() != b.size()) fail(ErrorCode::LengthMismatch, "tuples have different lengths");
  if (!(&a.lattice() == &b.lattice() || a.lattice() == b.lattice()))
    fail(ErrorCode::LatticeMismatch, "tuples are over different lattices");
}
}  // namespace

TupleValue tuple_meet(const TupleValue& a, const TupleValue& b) {
  check_compatible(a, b);
  std::vector<int> out(a.size());
  for (int i = 0; i < a.size(); ++i) out[i] = a.lattice().meet(a[i], b[i]);
  return TupleValue(a.lattice(), std::move(out));
}

bool tuple_leq(const TupleValue& a, const TupleValue& b) {
  check_compatible(a, b);
  for (int i = 0; i < a.size(); ++i)
    if (!a.lattice().leq(a[i], b[i])) return false;
  return true;
}

}  // namespace latflow
