#pragma once

// Shared helpers for the test binaries: exhaustive law checkers used as
// oracles, small known lattices, and deterministic random corpora.

#include <cstdint>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "latflow/lattice.hpp"

namespace testsupport {

using nlohmann::json;

inline std::string instances_dir() { return LATFLOW_INSTANCES_DIR; }

inline json load_json(const std::string& relative_path) {
  std::ifstream in(instances_dir() + "/" + relative_path);
  if (!in) throw std::runtime_error("missing fixture: " + relative_path);
  json j;
  in >> j;
  return j;
}

inline std::vector<latflow::IndexPair> to_pairs(const json& arr) {
  std::vector<latflow::IndexPair> out;
  for (const auto& e : arr) out.emplace_back(e[0].get<int>(), e[1].get<int>());
  return out;
}

inline std::vector<std::vector<int>> to_table(const json& arr) {
  std::vector<std::vector<int>> out;
  for (const auto& row : arr) out.push_back(row.get<std::vector<int>>());
  return out;
}

// Exhaustive lattice-law oracle, independent of Lattice::from_tables's own
// validation order: checks every pair/triple directly.
inline bool laws_hold(const latflow::Lattice& L) {
  const int m = L.size();
  for (int a = 0; a < m; ++a) {
    if (L.meet(a, a) != a || L.join(a, a) != a) return false;
    if (L.meet(a, L.top()) != a || L.join(a, L.bottom()) != a) return false;
    for (int b = 0; b < m; ++b) {
      if (L.meet(a, b) != L.meet(b, a)) return false;
      if (L.join(a, b) != L.join(b, a)) return false;
      if (L.meet(a, L.join(a, b)) != a) return false;
      if (L.join(a, L.meet(a, b)) != a) return false;
      for (int c = 0; c < m; ++c) {
        if (L.meet(L.meet(a, b), c) != L.meet(a, L.meet(b, c))) return false;
        if (L.join(L.join(a, b), c) != L.join(a, L.join(b, c))) return false;
      }
    }
  }
  return true;
}

// Meet/join really are glb/lub of the derived order.
inline bool bounds_are_extremal(const latflow::Lattice& L) {
  const int m = L.size();
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      const int mt = L.meet(a, b);
      const int jn = L.join(a, b);
      if (!L.leq(mt, a) || !L.leq(mt, b)) return false;
      if (!L.leq(a, jn) || !L.leq(b, jn)) return false;
      for (int c = 0; c < m; ++c) {
        if (L.leq(c, a) && L.leq(c, b) && !L.leq(c, mt)) return false;
        if (L.leq(a, c) && L.leq(b, c) && !L.leq(jn, c)) return false;
      }
    }
  }
  return true;
}

inline latflow::Lattice diamond_lattice() {
  return latflow::poset_to_algebra(
      latflow::cover_to_poset(latflow::validate_cover(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}})),
      {"bot", "a", "b", "top"});
}

// Componentwise product, built directly from the factor tables; used as an
// independent construction of larger lattices.
inline latflow::Lattice product_lattice(const latflow::Lattice& A, const latflow::Lattice& B) {
  const int ma = A.size(), mb = B.size(), m = ma * mb;
  std::vector<std::vector<int>> meet(m, std::vector<int>(m));
  std::vector<std::vector<int>> join(m, std::vector<int>(m));
  for (int a1 = 0; a1 < ma; ++a1)
    for (int b1 = 0; b1 < mb; ++b1)
      for (int a2 = 0; a2 < ma; ++a2)
        for (int b2 = 0; b2 < mb; ++b2) {
          const int x = a1 * mb + b1, y = a2 * mb + b2;
          meet[x][y] = A.meet(a1, a2) * mb + B.meet(b1, b2);
          join[x][y] = A.join(a1, a2) * mb + B.join(b1, b2);
        }
  return latflow::Lattice::from_tables(m, std::move(meet), std::move(join));
}

inline int pick(std::mt19937_64& rng, int lo, int hi) {  // inclusive bounds
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

}  // namespace testsupport
