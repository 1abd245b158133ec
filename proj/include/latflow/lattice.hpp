#pragma once

#include <string>
#include <utility>
#include <vector>

#include "latflow/error.hpp"

// Finite bounded lattices in three interchangeable representations:
//  - CoverRelation: the Hasse diagram (immediate successors only)
//  - Poset: the full reflexive order as an m x m table
//  - Lattice: meet/join tables with located bottom/top
// Conversions only move "downhill" (cover -> poset -> algebra); the algebra
// constructor re-derives the order, so round-trips are cheap to test.

namespace latflow {

using IndexPair = std::pair<int, int>;

struct CoverRelation {
  int element_count = 0;
  std::vector<IndexPair> covers;  // sorted, unique

  bool operator==(const CoverRelation&) const = default;
};

class Poset {
 public:
  Poset() = default;
  Poset(int element_count, std::vector<char> leq_table);

  int size() const { return element_count_; }
  bool leq(int a, int b) const;

  bool operator==(const Poset&) const = default;

 private:
  int element_count_ = 0;
  std::vector<char> leq_;  // row-major element_count^2
};

class Lattice {
 public:
  Lattice() = default;

  // Validates the full algebra law set (commutativity, associativity,
  // idempotence, absorption), derives the order, locates bottom/top and
  // checks their identities. Throws NotALattice / Unbounded / IndexOutOfRange.
  static Lattice from_tables(int element_count, std::vector<std::vector<int>> meet,
                             std::vector<std::vector<int>> join,
                             std::vector<std::string> names = {});

  int size() const { return element_count_; }
  int meet(int a, int b) const;
  int join(int a, int b) const;
  bool leq(int a, int b) const;  // a meet b == a
  int bottom() const { return bottom_; }
  int top() const { return top_; }
  int height() const { return height_; }  // edge count of the longest chain

  const std::vector<std::string>& names() const { return names_; }
  std::string element_name(int i) const;  // given name, or "l{i+1}"

  Poset derived_poset() const;
  const std::vector<std::vector<int>>& meet_table() const { return meet_; }
  const std::vector<std::vector<int>>& join_table() const { return join_; }

  bool operator==(const Lattice& other) const;

 private:
  int element_count_ = 0;
  std::vector<std::vector<int>> meet_;
  std::vector<std::vector<int>> join_;
  std::vector<char> leq_;
  int bottom_ = -1;
  int top_ = -1;
  int height_ = 0;
  std::vector<std::string> names_;
};

// Checks indices, irreflexivity, acyclicity and that no pair is implied by a
// longer path. Duplicate pairs are collapsed.
CoverRelation validate_cover(int element_count, const std::vector<IndexPair>& pairs);

// Validates reflexivity, antisymmetry and transitivity of an explicit
// relation given as the list of all related pairs. Throws NotAPoset.
Poset make_poset(int element_count, const std::vector<IndexPair>& leq_pairs);

// Reflexive-transitive closure of the cover relation.
Poset cover_to_poset(const CoverRelation& cover);

// Computes meet/join tables from the order, then verifies every entry really
// is the unique greatest lower / least upper bound. Throws NotALattice when
// some pair has no unique bound, Unbounded when a global bottom/top is
// missing.
Lattice poset_to_algebra(const Poset& poset, std::vector<std::string> names = {});

// Fold of binary meet; the empty set yields top.
int meet_of_set(const Lattice& lattice, const std::vector<int>& elements);

Lattice chain_lattice(int element_count);

// A tuple of lattice elements, one per CFG vertex. Non-owning reference to
// the lattice; the system it came from must outlive the tuple.
class TupleValue {
 public:
  TupleValue(const Lattice& lattice, std::vector<int> values);

  const Lattice& lattice() const { return *lattice_; }
  const std::vector<int>& values() const { return values_; }
  int size() const { return static_cast<int>(values_.size()); }
  int operator[](int i) const { return values_[i]; }

  bool operator==(const TupleValue& other) const;

 private:
  const Lattice* lattice_;
  std::vector<int> values_;
};

TupleValue top_tuple(const Lattice& lattice, int length);
TupleValue tuple_meet(const TupleValue& a, const TupleValue& b);
bool tuple_leq(const TupleValue& a, const TupleValue& b);

}  // namespace latflow
