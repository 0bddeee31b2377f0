#include <doctest.h>

#include "mvlog/order.hpp"
#include "mvlog/search.hpp"
#include "test_helpers.hpp"

using namespace mvlog;
using namespace mvlog::testing;

TEST_SUITE_BEGIN("order");

TEST_CASE("the unique 3-valued order relation is ss∩tt") {
  Universe u(3);
  TruthOrder o = parse_order(u, "0<#1<1");
  ExtRelation e = order_relation(o);
  CHECK(e == extension(rep({ss3(), tt3()})));

  Representation upsets = upset_representation(o);
  CHECK(upsets.members == std::vector<MixedRelation>{ss3(), tt3()});
  CHECK(extension(upsets) == e);

  auto cls = classify_order(o);
  CHECK(cls.kind == OrderKind::total);
  CHECK(cls.also_degenerate);
}

TEST_CASE("boundary clauses") {
  Universe u(4);
  TruthOrder chain = parse_order(u, "0<#1<#2<1");
  ExtRelation e = order_relation(chain);
  CHECK(e.holds(bit(0), 0));       // 0 among premises
  CHECK(e.holds(0, bit(3)));       // 1 among conclusions
  CHECK_FALSE(e.holds(0, bit(1))); // nothing else for free

  TruthOrder degenerate = order_from_pairs(u, {});
  ExtRelation d = order_relation(degenerate);
  CHECK_FALSE(d.holds(bit(1), bit(2))); // incomparable indeterminates
  CHECK(e.holds(bit(1), bit(2)));       // comparable under the chain
}

TEST_CASE("upset representations of the 4-valued orders") {
  Universe u(4);
  Bits one = bit(3);

  TruthOrder chain = parse_order(u, "0<#1<#2<1");
  auto chain_sets = upset_representation(chain);
  REQUIRE(chain_sets.members.size() == 3);
  CHECK(chain_sets.members[0].dp.bits == one);
  CHECK(chain_sets.members[1].dp.bits == (one | bit(2)));
  CHECK(chain_sets.members[2].dp.bits == (one | bit(1) | bit(2)));

  TruthOrder degenerate = order_from_pairs(u, {});
  auto deg_sets = upset_representation(degenerate);
  REQUIRE(deg_sets.members.size() == 4);
  for (const auto& m : deg_sets.members) CHECK(m.pure());

  CHECK(extension(chain_sets) == order_relation(chain));
  CHECK(extension(deg_sets) == order_relation(degenerate));
}

TEST_CASE("order classification") {
  Universe u5(5);
  TruthOrder partial = parse_order(u5, "0<#1<#2<1,0<#3<1");
  CHECK(classify_order(partial).kind == OrderKind::other);

  TruthOrder chain5 = parse_order(u5, "0<#1<#2<#3<1");
  CHECK(classify_order(chain5).kind == OrderKind::total);
  CHECK_FALSE(classify_order(chain5).also_degenerate);

  TruthOrder deg5 = order_from_pairs(u5, {});
  CHECK(classify_order(deg5).kind == OrderKind::degenerate);
}

TEST_CASE("order validation") {
  Universe u(4);
  CHECK_THROWS_AS(parse_order(u, "0<#1,#1<0"), std::invalid_argument); // cycle
  CHECK_THROWS_AS(parse_order(u, "0<#9<1"), std::invalid_argument);    // unknown value
  // missing bounds rejected at the raw constructor
  std::vector<Bits> rows{bit(0), bit(1), bit(2), bit(3)};
  CHECK_THROWS_AS(TruthOrder::make(u, rows), std::invalid_argument);
}

TEST_CASE("order enumeration counts") {
  CHECK(all_truth_orders(Universe(3)).size() == 1);
  CHECK(all_truth_orders(Universe(4)).size() == 3);
  CHECK(all_truth_orders(Universe(5)).size() == 19);
}

TEST_CASE("upset intersection equals the order relation for every order up to N=5") {
  for (int n = 3; n <= 5; ++n) {
    Universe u(n);
    for (const auto& o : all_truth_orders(u)) {
      Representation upsets = upset_representation(o);
      CHECK(extension(upsets) == order_relation(o));
    }
  }
}

TEST_CASE("order relations and connectives") {
  for (int n = 3; n <= 5; ++n) {
    Universe u(n);
    for (const auto& o : all_truth_orders(u)) {
      ExtRelation e = order_relation(o);
      Representation minrep = minimal_representation(upset_representation(o));
      auto prof = connective_profile(e, minrep);
      bool total = classify_order(o).kind == OrderKind::total;
      CHECK_FALSE(prof.negation.exists);
      CHECK_FALSE(prof.conditional.exists);
      CHECK(prof.conjunction.exists == total);
      CHECK(prof.disjunction.exists == total);
    }
  }
}

TEST_SUITE_END();
