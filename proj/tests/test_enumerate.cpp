#include <doctest.h>

#include <set>

#include "mvlog/catalog.hpp"
#include "mvlog/enumerate.hpp"
#include "test_helpers.hpp"

using namespace mvlog;
using namespace mvlog::testing;

TEST_SUITE_BEGIN("enumerate");

TEST_CASE("mixed relation universe sizes") {
  CHECK(all_mixed_relations(Universe(2)).size() == 1);
  CHECK(all_mixed_relations(Universe(3)).size() == 4);
  CHECK(all_mixed_relations(Universe(4)).size() == 16);
  CHECK(all_designated_sets(Universe(4)).size() == 4);
}

TEST_CASE("two-valued logic has a single relation") {
  auto catalog = enumerate_relations(Universe(2));
  REQUIRE(catalog.size() == 1);
  CHECK(canonical_name(catalog[0].min_rep) == "classical");
}

TEST_CASE("three-valued logic has exactly five relations") {
  auto catalog = enumerate_relations(Universe(3));
  REQUIRE(catalog.size() == 5);
  std::set<std::string> names;
  for (const auto& entry : catalog) names.insert(canonical_name(entry.min_rep));
  CHECK(names == std::set<std::string>{"ss", "tt", "st", "ts", "ss∩tt"});
  for (const auto& entry : catalog) {
    CHECK(entry.ext_hex == entry.ext.to_hex());
    CHECK(extension(entry.min_rep) == entry.ext);
    CHECK(is_dominance_antichain(entry.min_rep));
  }
  for (std::size_t i = 0; i + 1 < catalog.size(); ++i)
    CHECK(catalog[i].ext_hex < catalog[i + 1].ext_hex);
}

TEST_CASE("the pruned antichain is independent of the generating set") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    Universe u(4);
    Representation r = random_representation(u, rng);
    Representation m = minimal_representation(r);
    // pad with members dominated by existing ones; the pruned form must not move
    auto mixed = all_mixed_relations(u);
    std::vector<MixedRelation> padded = r.members;
    for (const auto& cand : mixed)
      for (const auto& have : r.members)
        if (dominates(have, cand) && padded.size() < 12) padded.push_back(cand);
    Representation m2 = minimal_representation(Representation::make(u, padded));
    CHECK(m2.members == m.members);
  }
}

TEST_CASE("enumeration rejects large universes") {
  CHECK_THROWS_AS(enumerate_relations(Universe(5)), std::invalid_argument);
}

TEST_CASE("all_minimal_representations finds unique minimal representations") {
  auto only = [](const ExtRelation& e) {
    auto reps = all_minimal_representations(e);
    REQUIRE(reps.size() == 1);
    return minimal_representation(reps[0]);
  };
  CHECK(only(extension(rep({st3()}))).members == std::vector<MixedRelation>{st3()});
  CHECK(only(extension(rep({ss3()}))).members == std::vector<MixedRelation>{ss3()});
  CHECK(only(extension(rep({ss3(), tt3()}))).members ==
        std::vector<MixedRelation>{ss3(), tt3()});
}

TEST_CASE("every catalog relation has one minimal representation matching the canonical one") {
  for (const auto& entry : enumerate_relations(Universe(3))) {
    auto reps = all_minimal_representations(entry.ext);
    REQUIRE(reps.size() >= 1);
    std::size_t card = reps.front().members.size();
    for (const auto& r : reps) {
      CHECK(r.members.size() == card);
      CHECK(extension(r) == entry.ext);
      CHECK(minimal_representation(r).members == entry.min_rep.members);
    }
  }
}

TEST_CASE("indeterminate permutations") {
  CHECK(indeterminate_permutations(Universe(2)).size() == 1);
  CHECK(indeterminate_permutations(Universe(3)).size() == 1);
  CHECK(indeterminate_permutations(Universe(4)).size() == 2);
  CHECK(indeterminate_permutations(Universe(5)).size() == 6);
}

TEST_CASE("quotient groups relations that only rename indeterminates") {
  Universe u(4);
  auto catalog = enumerate_relations(u);
  auto q = quotient_by_indeterminate_permutation(catalog, u);

  // |=_{{1,#1},{1,#1}} and |=_{{1,#2},{1,#2}} land in the same class
  Bits d1 = bit(3) | bit(1), d2 = bit(3) | bit(2);
  std::string h1 = extension(MixedRelation::make(u, d1, d1)).to_hex();
  std::string h2 = extension(MixedRelation::make(u, d2, d2)).to_hex();
  int c1 = -1, c2 = -1;
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    if (catalog[i].ext_hex == h1) c1 = q.class_of[i];
    if (catalog[i].ext_hex == h2) c2 = q.class_of[i];
  }
  REQUIRE(c1 != -1);
  CHECK(c1 == c2);

  // every class representative is its own least serialization
  for (std::size_t rep_idx : q.representative) {
    const auto& entry = catalog[rep_idx];
    for (const auto& perm : indeterminate_permutations(u))
      CHECK(entry.ext_hex <= entry.ext.relabeled(perm).to_hex());
  }
}

TEST_CASE("three-valued quotient is trivial") {
  Universe u(3);
  auto catalog = enumerate_relations(u);
  auto q = quotient_by_indeterminate_permutation(catalog, u);
  CHECK(q.representative.size() == 5);
}

TEST_SUITE_END();
