#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "latflow/catalog.hpp"
#include "latflow/lattice.hpp"
#include "support.hpp"

using namespace latflow;
using testsupport::diamond_lattice;
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

}  // namespace

TEST_CASE("validate_cover accepts a two-element chain") {
  const auto c = validate_cover(2, {{0, 1}});
  CHECK(c.element_count == 2);
  CHECK(c.covers == std::vector<IndexPair>{{0, 1}});
}

TEST_CASE("validate_cover collapses duplicate pairs") {
  const auto c = validate_cover(2, {{0, 1}, {0, 1}});
  CHECK(c.covers.size() == 1);
}

TEST_CASE("validate_cover rejects bad input") {
  CHECK(code_of([] { validate_cover(2, {{0, 2}}); }) == ErrorCode::IndexOutOfRange);
  CHECK(code_of([] { validate_cover(2, {{1, 1}}); }) == ErrorCode::ReflexivePair);
  CHECK(code_of([] { validate_cover(2, {{0, 1}, {1, 0}}); }) == ErrorCode::CycleDetected);
  // (0,2) is already implied by (0,1),(1,2)
  CHECK(code_of([] { validate_cover(3, {{0, 1}, {1, 2}, {0, 2}}); }) ==
        ErrorCode::RedundantCover);
}

TEST_CASE("cover_to_poset closes the two-element chain") {
  const auto p = cover_to_poset(validate_cover(2, {{0, 1}}));
  CHECK(p.leq(0, 0));
  CHECK(p.leq(1, 1));
  CHECK(p.leq(0, 1));
  CHECK(!p.leq(1, 0));
}

TEST_CASE("cover_to_poset leaves diamond middles incomparable") {
  const auto p = cover_to_poset(validate_cover(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}));
  CHECK(!p.leq(1, 2));
  CHECK(!p.leq(2, 1));
  CHECK(p.leq(0, 3));  // transitive
  for (int i = 0; i < 4; ++i) CHECK(p.leq(i, i));
}

TEST_CASE("make_poset validates the relation") {
  CHECK(code_of([] { make_poset(2, {{0, 1}}); }) == ErrorCode::NotAPoset);  // not reflexive
  CHECK(code_of([] {
          make_poset(2, {{0, 0}, {1, 1}, {0, 1}, {1, 0}});
        }) == ErrorCode::NotAPoset);  // not antisymmetric
  CHECK(code_of([] {
          make_poset(3, {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 2}});
        }) == ErrorCode::NotAPoset);  // not transitive
  const auto p = make_poset(2, {{0, 0}, {1, 1}, {0, 1}});
  CHECK(p.leq(0, 1));
}

TEST_CASE("poset_to_algebra on the diamond matches the known tables") {
  const auto L = diamond_lattice();
  CHECK(L.meet(1, 2) == 0);
  CHECK(L.join(1, 2) == 3);
  CHECK(L.meet(1, 3) == 1);
  CHECK(L.join(0, 2) == 2);
  CHECK(L.bottom() == 0);
  CHECK(L.top() == 3);
  CHECK(L.height() == 2);
}

TEST_CASE("poset_to_algebra on a chain is min/max") {
  const auto L = chain_lattice(3);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      CHECK(L.meet(a, b) == std::min(a, b));
      CHECK(L.join(a, b) == std::max(a, b));
    }
  CHECK(L.height() == 2);
}

TEST_CASE("poset_to_algebra rejects the four-element relation with two maximal lower bounds") {
  // a,b minimal; c,d maximal; all four cross pairs related. {c,d} has two
  // maximal lower bounds, so no meet exists.
  const auto p = make_poset(4, {{0, 0}, {1, 1}, {2, 2}, {3, 3}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
  CHECK(code_of([&] { poset_to_algebra(p); }) == ErrorCode::NotALattice);
}

TEST_CASE("element meet/join respect bounds") {
  const auto L = diamond_lattice();
  for (int x = 0; x < L.size(); ++x) {
    CHECK(L.meet(x, L.top()) == x);
    CHECK(L.join(x, L.bottom()) == x);
    CHECK(L.meet(x, x) == x);
    CHECK(L.join(x, x) == x);
  }
  CHECK_THROWS_AS((void)L.meet(0, 7), Error);
}

TEST_CASE("meet_of_set folds with empty-set-is-top") {
  const auto L = diamond_lattice();
  CHECK(meet_of_set(L, {}) == L.top());
  CHECK(meet_of_set(L, {2}) == 2);
  CHECK(meet_of_set(L, {1, 2, 3}) == 0);
  // permutation and duplication do not matter
  CHECK(meet_of_set(L, {3, 2, 1, 2}) == 0);
  CHECK(meet_of_set(L, {1, 3}) == meet_of_set(L, {3, 1, 1}));
}

TEST_CASE("tuple operations") {
  const auto L = diamond_lattice();
  const TupleValue x(L, {1, 2, 3});
  const TupleValue t = top_tuple(L, 3);
  CHECK(tuple_meet(x, x) == x);
  CHECK(tuple_meet(x, t) == x);
  CHECK(tuple_leq(x, t));
  CHECK(!tuple_leq(t, x));
  const TupleValue bot(L, {0, 0, 0});
  CHECK(tuple_leq(bot, x));

  const TupleValue y(L, {1, 2});
  CHECK(code_of([&] { (void)tuple_meet(x, y); }) == ErrorCode::LengthMismatch);
  const auto C = chain_lattice(4);
  const TupleValue z(C, {1, 2, 3});
  CHECK(code_of([&] { (void)tuple_meet(x, z); }) == ErrorCode::LatticeMismatch);
  CHECK(code_of([&] { (void)tuple_leq(x, z); }) == ErrorCode::LatticeMismatch);
}

TEST_CASE("lattice_height on chains and the diamond") {
  CHECK(chain_lattice(1).height() == 0);
  CHECK(chain_lattice(2).height() == 1);
  CHECK(chain_lattice(6).height() == 5);
  CHECK(diamond_lattice().height() == 2);
}

TEST_CASE("from_tables rejects broken algebras") {
  // meet not idempotent
  CHECK(code_of([] {
          Lattice::from_tables(2, {{1, 0}, {0, 1}}, {{0, 1}, {1, 1}});
        }) == ErrorCode::NotALattice);
  // meet not commutative
  CHECK(code_of([] {
          Lattice::from_tables(2, {{0, 0}, {1, 1}}, {{0, 1}, {1, 1}});
        }) == ErrorCode::NotALattice);
  // entry out of range
  CHECK(code_of([] {
          Lattice::from_tables(2, {{0, 0}, {0, 5}}, {{0, 1}, {1, 1}});
        }) == ErrorCode::IndexOutOfRange);
}

TEST_CASE("stored corpus round-trips cover to poset to algebra") {
  for (const std::string name :
       {"chain1", "chain2", "chain3", "chain4", "chain5", "chain6", "diamond", "m3", "n5",
        "kite", "grid2x3", "div12"}) {
    CAPTURE(name);
    const auto fx = testsupport::load_json("lattices/" + name + ".json");
    const int m = fx["m"].get<int>();
    const auto cover = validate_cover(m, testsupport::to_pairs(fx["cover"]));
    const auto poset = cover_to_poset(cover);

    // the stored full relation agrees with the closure
    const auto stored_poset = make_poset(m, testsupport::to_pairs(fx["leq"]));
    CHECK(poset == stored_poset);

    const auto L = poset_to_algebra(poset);
    const auto direct = Lattice::from_tables(m, testsupport::to_table(fx["algebra"]["meet"]),
                                             testsupport::to_table(fx["algebra"]["join"]));
    CHECK(L == direct);
    CHECK(L.bottom() == fx["bottom"].get<int>());
    CHECK(L.top() == fx["top"].get<int>());
    CHECK(L.height() == fx["height"].get<int>());
    CHECK(testsupport::laws_hold(L));
    CHECK(testsupport::bounds_are_extremal(L));
  }
}

TEST_CASE("random lattices satisfy the laws and round-trip through the poset") {
  std::mt19937_64 rng(20260816);
  int built = 0;
  for (int iter = 0; iter < 300; ++iter) {
    const int m = pick(rng, 1, 5);
    const auto L = random_lattice(rng, m);
    ++built;
    CHECK(testsupport::laws_hold(L));
    CHECK(testsupport::bounds_are_extremal(L));
    // algebra -> derived poset -> algebra is the identity
    const auto back = poset_to_algebra(L.derived_poset());
    CHECK(back == L);
  }
  CHECK(built == 300);
}

TEST_CASE("structured lattices up to eight elements satisfy the laws") {
  const auto d = diamond_lattice();
  const auto c2 = chain_lattice(2);
  const auto c4 = chain_lattice(4);
  const auto cube = testsupport::product_lattice(c2, testsupport::product_lattice(c2, c2));
  CHECK(cube.size() == 8);
  CHECK(cube.height() == 3);
  const auto d2 = testsupport::product_lattice(d, c2);
  CHECK(d2.size() == 8);
  const auto c8 = testsupport::product_lattice(c4, c2);
  for (const auto* L : {&cube, &d2, &c8}) {
    CHECK(testsupport::laws_hold(*L));
    CHECK(testsupport::bounds_are_extremal(*L));
    CHECK(poset_to_algebra(L->derived_poset()) == *L);
  }
}

TEST_CASE("element names default to one-based labels") {
  const auto L = chain_lattice(2);
  CHECK(L.element_name(0) == "l1");
  CHECK(L.element_name(1) == "l2");
  const auto D = diamond_lattice();
  CHECK(D.element_name(0) == "bot");
  CHECK(D.element_name(3) == "top");
}
