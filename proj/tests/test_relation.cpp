#include <doctest.h>

#include <random>

#include "mvlog/relation.hpp"
#include "test_helpers.hpp"

using namespace mvlog;
using namespace mvlog::testing;

TEST_SUITE_BEGIN("kernel");

TEST_CASE("designated sets contain 1 and exclude 0") {
  Universe u(3);
  CHECK_THROWS_AS(DesignatedSet::make(u, bit(1)), std::invalid_argument);          // no verum
  CHECK_THROWS_AS(DesignatedSet::make(u, bit(0) | bit(2)), std::invalid_argument); // falsum
  CHECK_THROWS_AS(DesignatedSet::make(u, bit(3) | bit(2)), std::invalid_argument); // out of range
  CHECK(DesignatedSet::make(u, bit(2)).bits == bit(2));
}

TEST_CASE("holds_mixed matches the definition") {
  // st relates {1} to {#1}: the conclusion is tolerantly designated
  CHECK(holds_mixed(st3(), bit(2), bit(1)));
  // ts fails reflexivity at #1
  CHECK_FALSE(holds_mixed(ts3(), bit(1), bit(1)));
  // tt member of ss∩tt: #1 does not yield 0
  CHECK_FALSE(holds_mixed(tt3(), bit(1), bit(0)));
  // empty premise and conclusion sets are first-class
  CHECK_FALSE(holds_mixed(ss3(), 0, 0));
  CHECK(holds_mixed(ss3(), bit(0), 0));
  CHECK_THROWS_AS(holds_mixed(ss3(), bit(5), 0), std::invalid_argument);
}

TEST_CASE("extension intersects members") {
  ExtRelation e_ss = extension(rep({ss3()}));
  CHECK_FALSE(e_ss.holds(bit(2), bit(1))); // gamma={1}, delta={#1} under ss

  ExtRelation e_sstt = extension(rep({ss3(), tt3()}));
  CHECK_FALSE(e_sstt.holds(bit(1), bit(0))); // #1 |eq 0 fails
  CHECK(e_sstt.holds(bit(1), bit(1)));       // #1 |eq #1 holds

  ExtRelation e_with_st = extension(rep({ss3(), tt3(), st3()}));
  CHECK(e_with_st == e_sstt); // st plays no role in the representation
}

TEST_CASE("minimal_representation prunes dominated members") {
  Representation m = minimal_representation(rep({ss3(), tt3(), st3()}));
  CHECK(m.members == std::vector<MixedRelation>{ss3(), tt3()});
  CHECK(minimal_representation(rep({st3()})).members == std::vector<MixedRelation>{st3()});
  CHECK(minimal_representation(rep({ss3(), ss3()})).members == std::vector<MixedRelation>{ss3()});
}

TEST_CASE("minimal_representation preserves the extension and is an antichain") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Universe u(trial % 2 == 0 ? 3 : 4);
    Representation r = random_representation(u, rng);
    Representation m = minimal_representation(r);
    CHECK(extension(m) == extension(r));
    CHECK(is_dominance_antichain(m));
    for (std::size_t i = 0; i + 1 < m.members.size(); ++i) CHECK(m.members[i] < m.members[i + 1]);
  }
}

TEST_CASE("extensions are monotone and boundary-valid") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    Universe u(trial % 2 == 0 ? 3 : 4);
    CHECK(well_formed(extension(random_representation(u, rng))));
  }
}

TEST_CASE("role equivalence") {
  ExtRelation e_ss = extension(rep({ss3()}));
  CHECK(role_equivalent(e_ss, 1, 0)); // #1 and 0 interchangeable under ss
  CHECK_FALSE(role_equivalent(e_ss, 2, 1));

  ExtRelation e_st = extension(rep({st3()}));
  for (Value a = 0; a < 3; ++a)
    for (Value b = 0; b < 3; ++b)
      CHECK(role_equivalent(e_st, a, b) == (a == b));

  ExtRelation e_tt = extension(rep({tt3()}));
  CHECK(role_equivalent(e_tt, 2, 2)); // identity is always role-equivalent
}

TEST_CASE("role equivalence is an equivalence relation") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    Universe u(4);
    ExtRelation e = extension(random_representation(u, rng));
    for (Value a = 0; a < 4; ++a) {
      CHECK(role_equivalent(e, a, a));
      for (Value b = 0; b < 4; ++b) {
        CHECK(role_equivalent(e, a, b) == role_equivalent(e, b, a));
        for (Value c = 0; c < 4; ++c)
          if (role_equivalent(e, a, b) && role_equivalent(e, b, c))
            CHECK(role_equivalent(e, a, c));
      }
    }
  }
}

TEST_CASE("reflexivity") {
  CHECK_FALSE(is_reflexive(extension(rep({ts3()}))));
  CHECK(is_reflexive(extension(rep({ss3(), tt3()}))));
  Universe u2(2);
  CHECK(is_reflexive(extension(Representation::make(
      u2, {MixedRelation::make(u2, bit(1), bit(1))}))));
}

TEST_CASE("tautologies and contradictions distinguish the 3-valued relations") {
  CHECK(conclusion_tautologies(extension(rep({ss3()}))) == bit(2));
  CHECK(conclusion_tautologies(extension(rep({ts3()}))) == bit(2));
  CHECK(conclusion_tautologies(extension(rep({st3()}))) == (bit(2) | bit(1)));
  CHECK(premise_contradictions(extension(rep({ss3()}))) == (bit(0) | bit(1)));
  CHECK(premise_contradictions(extension(rep({st3()}))) == (bit(0) | bit(1)));
  CHECK(premise_contradictions(extension(rep({tt3()}))) == bit(0));
}

TEST_CASE("hex serialization orders bit sequences lexicographically") {
  ExtRelation a = extension(rep({ss3()}));
  ExtRelation b = extension(rep({tt3()}));
  CHECK(a.to_hex() != b.to_hex());
  CHECK(a.to_hex().size() == 16); // 2^6 bits -> 16 nibbles

  // identity relabeling is a no-op
  std::vector<Value> id{0, 1, 2};
  CHECK(a.relabeled(id) == a);
}

TEST_CASE("relabeling is a group action on extensions") {
  Universe u(4);
  std::vector<Value> swap{0, 2, 1, 3};
  std::mt19937 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    ExtRelation e = extension(random_representation(u, rng));
    CHECK(e.relabeled(swap).relabeled(swap) == e);
  }
}

TEST_SUITE_END();
