#include <doctest.h>

#include <random>

#include "mvlog/json_io.hpp"
#include "mvlog/rules.hpp"
#include "test_helpers.hpp"

using namespace mvlog;
using namespace mvlog::testing;

TEST_SUITE_BEGIN("rules");

namespace {

ConnectiveTable sk_conj() {
  // min over the index order 0 < #1 < 1
  Universe u(3);
  std::vector<Value> out;
  for (Value a = 0; a < 3; ++a)
    for (Value b = 0; b < 3; ++b) out.push_back(std::min(a, b));
  return ConnectiveTable::make(u, 2, std::move(out));
}

ConnectiveTable sk_cond() {
  // max(1-a, b) with indices scaled to 0,1,2
  Universe u(3);
  std::vector<Value> out;
  for (Value a = 0; a < 3; ++a)
    for (Value b = 0; b < 3; ++b) out.push_back(std::max(2 - a, b));
  return ConnectiveTable::make(u, 2, std::move(out));
}

ConnectiveTable st_cond() {
  return parse_table(json::parse(R"([["1","#1","0"],["1","#1","#1"],["1","1","1"]])"), Universe(3),
                     2);
}

ConnectiveTable godel_cond() {
  return parse_table(json::parse(R"([["1","#1","0"],["1","1","0"],["1","1","1"]])"), Universe(3),
                     2);
}

} // namespace

TEST_CASE("library rules match the classical table") {
  auto neg = library_rule("negation");
  CHECK(neg.premise_side == std::vector<RulePair>{{0, bit(0)}});
  CHECK(neg.conclusion_side == std::vector<RulePair>{{bit(0), 0}});

  auto cond = library_rule("conditional");
  CHECK(cond.conclusion_side == std::vector<RulePair>{{bit(0), bit(1)}});
  CHECK(cond.premise_side == std::vector<RulePair>{{0, bit(0)}, {bit(1), 0}});

  auto top = library_rule("top");
  CHECK(top.arity == 0);
  CHECK(top.premise_side == std::vector<RulePair>{{0, 0}});
  CHECK(top.conclusion_side.empty());

  auto const_p = library_rule("const_p");
  CHECK(const_p.premise_side == std::vector<RulePair>{{0, 0}});
  CHECK(const_p.conclusion_side == std::vector<RulePair>{{0, 0}});
  auto const_c = library_rule("const_c");
  CHECK(const_c.premise_side.empty());
  CHECK(const_c.conclusion_side.empty());

  CHECK(library_rule("conjunction") == library_rule("and"));
  CHECK(library_rule("disjunction") == library_rule("or"));
  CHECK(library_rule("projection:1:2") == library_rule("left"));
  CHECK(binary_rule_names().size() == 16);
  CHECK_THROWS_AS(library_rule("modus_ponens"), std::invalid_argument);
}

TEST_CASE("rule JSON round trip") {
  json j = json::parse(
      R"({"arity":2,"premise":[{"bp":[2],"bc":[]},{"bp":[],"bc":[1]}],"conclusion":[{"bp":[1],"bc":[2]}]})");
  CHECK(parse_rule(j) == library_rule("conditional"));
  CHECK(parse_rule(to_json(library_rule("xor"))) == library_rule("xor"));
}

TEST_CASE("classical rule synthesis") {
  auto not1 = synthesize_classical_rule(ClassicalFunction::parse("10", 1));
  CHECK(not1 == library_rule("negation"));

  auto disj = synthesize_classical_rule(ClassicalFunction::parse("0111", 2));
  CHECK(disj.conclusion_side == std::vector<RulePair>{{0, bit(0) | bit(1)}});
  // rows 01, 10, 11 in canonical order
  CHECK(disj.premise_side ==
        std::vector<RulePair>{{bit(0), bit(1)}, {bit(1), bit(0)}, {bit(0) | bit(1), 0}});

  // classically the CNF rule and the hand-written table rule both hold for
  // the disjunction truth-function, though the rules differ
  Universe u2(2);
  auto classical = MixedRelation::make(u2, bit(1), bit(1));
  ExtRelation ce = extension(classical);
  ConnectiveTable or2 = ConnectiveTable::make(u2, 2, {0, 1, 1, 1});
  CHECK(satisfies_rule_oracle(disj, ce, or2));
  CHECK(satisfies_rule_oracle(library_rule("disjunction"), ce, or2));
  CHECK(disj != library_rule("disjunction"));
}

TEST_CASE("every synthesized classical rule holds for its function") {
  Universe u2(2);
  auto classical = MixedRelation::make(u2, bit(1), bit(1));
  ExtRelation ce = extension(classical);
  for (int arity = 0; arity <= 3; ++arity) {
    for (Bits f = 0; f < (Bits{1} << (1u << arity)); ++f) {
      auto cf = ClassicalFunction::make(arity, f);
      std::vector<Value> outs;
      for (Bits row = 0; row < (Bits{1} << arity); ++row) outs.push_back(cf.at(row) ? 1 : 0);
      CHECK(satisfies_rule_oracle(synthesize_classical_rule(cf), ce,
                                  ConnectiveTable::make(u2, arity, std::move(outs))));
    }
  }
}

TEST_CASE("pointwise admissibility at single cells") {
  // st, conditional, cell (#1, 0) forces #1
  Representation st = rep({st3()});
  Value cell_a[2] = {1, 0};
  CHECK(pointwise_admissible(library_rule("conditional"), st, {cell_a, 2}) == bit(1));

  // ss∩tt admits no negation of #1
  Representation sstt = rep({ss3(), tt3()});
  Value half = 1;
  CHECK(pointwise_admissible(library_rule("negation"), sstt, {&half, 1}) == 0);

  // ss lets conjunction output #1 or 0 at (#1, #1)
  Representation ss = rep({ss3()});
  Value cell_b[2] = {1, 1};
  CHECK(pointwise_admissible(library_rule("conjunction"), ss, {cell_b, 2}) == (bit(0) | bit(1)));
}

TEST_CASE("pointwise compiler rejects non-minimal representations") {
  Representation redundant = rep({ss3(), tt3(), st3()});
  Value cell[2] = {1, 1};
  CHECK_THROWS_AS(pointwise_admissible(library_rule("conjunction"), redundant, {cell, 2}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      satisfies_rule_pointwise(library_rule("conjunction"), redundant, sk_conj()),
      std::invalid_argument);
}

TEST_CASE("rule satisfaction, pointwise") {
  CHECK(satisfies_rule_pointwise(library_rule("conjunction"), rep({st3()}), sk_conj()));
  // the Strong Kleene conditional loses conditional introduction under ss
  CHECK_FALSE(satisfies_rule_pointwise(library_rule("conditional"), rep({ss3()}), sk_cond()));
  // the Gödel conditional is not a full conditional for ss∩tt
  CHECK_FALSE(
      satisfies_rule_pointwise(library_rule("conditional"), rep({ss3(), tt3()}), godel_cond()));
}

TEST_CASE("rule satisfaction, oracle") {
  CHECK(satisfies_rule_oracle(library_rule("conditional"), extension(rep({st3()})), st_cond()));
  for (const auto& m : all_mixed_relations(Universe(3))) {
    ExtRelation e = extension(m);
    Universe u(3);
    std::vector<Value> proj1, proj2;
    for (Value a = 0; a < 3; ++a)
      for (Value b = 0; b < 3; ++b) {
        proj1.push_back(a);
        proj2.push_back(b);
      }
    CHECK(satisfies_rule_oracle(library_rule("left"), e, ConnectiveTable::make(u, 2, proj1)));
    CHECK(satisfies_rule_oracle(library_rule("right"), e, ConnectiveTable::make(u, 2, proj2)));
  }
}

TEST_CASE("oracle and pointwise compiler agree on random inputs") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> pick3(0, 2);
  auto rules = std::vector<std::string>{"negation",  "conjunction", "disjunction", "conditional",
                                        "nand",      "xor",         "iff",         "nor",
                                        "const_p",   "const_c",     "top",         "bottom",
                                        "left",      "nrimp",       "identity"};
  for (int trial = 0; trial < 400; ++trial) {
    Universe u(trial % 2 == 0 ? 3 : 4);
    Representation raw = random_representation(u, rng);
    Representation minrep = minimal_representation(raw);
    ExtRelation ext = extension(raw);
    const auto& rule = library_rule(rules[std::size_t(trial) % rules.size()]);
    std::vector<Value> outs(table_cells(u.n_values, rule.arity));
    std::uniform_int_distribution<int> pick(0, u.n_values - 1);
    for (auto& v : outs) v = pick(rng);
    ConnectiveTable t = ConnectiveTable::make(u, rule.arity, std::move(outs));
    CHECK(satisfies_rule_pointwise(rule, minrep, t) == satisfies_rule_oracle(rule, ext, t));
  }
}

TEST_CASE("single-conclusion checks on the Gödel table") {
  ExtRelation sstt = extension(rep({ss3(), tt3()}));
  CHECK(single_conclusion_check(ScVariant::deduction, sstt, godel_cond()));
  CHECK_FALSE(single_conclusion_check(ScVariant::premise, sstt, godel_cond()));
  CHECK(single_conclusion_check(ScVariant::premise_rtl, sstt, godel_cond()));

  ExtRelation st = extension(rep({st3()}));
  CHECK(single_conclusion_check(ScVariant::deduction, st, st_cond()));
}

TEST_CASE("classical bit-string parsing") {
  CHECK(ClassicalFunction::parse("0111", 2).outputs == 0b1110u);
  CHECK_THROWS_AS(ClassicalFunction::parse("011", 2), std::invalid_argument);
  CHECK_THROWS_AS(ClassicalFunction::parse("01x1", 2), std::invalid_argument);
}

TEST_CASE("table JSON and text rendering") {
  ConnectiveTable t = st_cond();
  CHECK(parse_table(to_json(t), Universe(3), 2) == t);
  std::string text = to_text(t);
  CHECK(text.find("#1") != std::string::npos);
  json j = to_json(t);
  CHECK(j[0][0] == "1"); // row 1, column 1
  CHECK(j[2][0] == "1"); // row 0, column 1
  CHECK(j[0][2] == "0"); // row 1, column 0
}

TEST_SUITE_END();
