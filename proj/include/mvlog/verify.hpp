#pragma once

#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mvlog/algebra.hpp"
#include "mvlog/catalog.hpp"
#include "mvlog/json_io.hpp"
#include "mvlog/order.hpp"
#include "mvlog/search.hpp"

namespace mvlog {

// One executable assertion about published results or engine-level
// properties. `criterion` groups checks for the acceptance suite.
struct NamedCheck {
  std::string name;
  bool pass = false;
  std::string detail;
  int criterion = 0;
};

namespace verify_detail {

inline ConnectiveTable table3(const char* rows_json) {
  return parse_table(json::parse(rows_json), Universe(3), 2);
}

// Reference tables, value headers 1, #1, 0 (rows = first operand).
inline ConnectiveTable strong_kleene_conjunction() {
  return table3(R"([["1","#1","0"],["#1","#1","0"],["0","0","0"]])");
}
inline ConnectiveTable strong_kleene_disjunction() {
  return table3(R"([["1","1","1"],["1","#1","#1"],["1","#1","0"]])");
}
inline ConnectiveTable conditional_ss() {
  return table3(R"([["1","0","0"],["1","1","1"],["1","1","1"]])");
}
inline ConnectiveTable conditional_tt() {
  return table3(R"([["1","1","0"],["1","1","0"],["1","1","1"]])");
}
inline ConnectiveTable conditional_st() {
  return table3(R"([["1","#1","0"],["1","#1","#1"],["1","1","1"]])");
}
inline ConnectiveTable godel_conditional() {
  return table3(R"([["1","#1","0"],["1","1","0"],["1","1","1"]])");
}

// The two 4-valued intersective relations with conditionals, and their
// displayed unique tables (headers 1, #1, #2, 0).
inline Representation pure_pair_relation() { // |=11 ∩ |=22
  Universe u(4);
  return Representation::make(u, {MixedRelation::make(u, bit(3) | bit(1), bit(3) | bit(1)),
                                  MixedRelation::make(u, bit(3) | bit(2), bit(3) | bit(2))});
}
inline Representation crossed_pair_relation() { // |=12 ∩ |=21
  Universe u(4);
  return Representation::make(u, {MixedRelation::make(u, bit(3) | bit(1), bit(3) | bit(2)),
                                  MixedRelation::make(u, bit(3) | bit(2), bit(3) | bit(1))});
}
inline ConnectiveTable conditional_pure_pair() {
  return parse_table(json::parse(R"([["1","#1","#2","0"],
                                     ["1","1","#2","#2"],
                                     ["1","#1","1","#1"],
                                     ["1","1","1","1"]])"),
                     Universe(4), 2);
}
inline ConnectiveTable conditional_crossed_pair() {
  return parse_table(json::parse(R"([["1","#1","#2","0"],
                                     ["1","#1","1","#1"],
                                     ["1","1","#2","#2"],
                                     ["1","1","1","1"]])"),
                     Universe(4), 2);
}

// The 5-valued relation admitting a negation but no conditional, with its
// displayed negation.
inline Representation five_valued_fact_relation() {
  Universe u(5);
  Bits one = bit(4);
  return Representation::make(
      u, {MixedRelation::make(u, one | bit(1) | bit(2), one | bit(1)),
          MixedRelation::make(u, one | bit(1) | bit(3), one | bit(2)),
          MixedRelation::make(u, one | bit(2) | bit(3), one | bit(3))});
}
inline ConnectiveTable five_valued_fact_negation() {
  Universe u(5);
  // 1 -> 0, #3 -> #1, #2 -> #2, #1 -> #3, 0 -> 1
  return ConnectiveTable::make(u, 1, {4, 3, 2, 1, 0});
}

inline std::vector<std::pair<std::string, RegularityRule>> library_rules_all(int max_arity = 3) {
  std::vector<std::pair<std::string, RegularityRule>> out;
  for (const char* n : {"top", "bottom", "const_p", "const_c", "negation", "identity"})
    out.emplace_back(n, library_rule(n));
  for (const auto& n : binary_rule_names()) out.emplace_back(n, library_rule(n));
  if (max_arity >= 3)
    for (int i = 1; i <= 3; ++i) {
      std::string n = "projection:" + std::to_string(i) + ":3";
      out.emplace_back(n, library_rule(n));
    }
  return out;
}

// Role-equivalence classes of the values of a relation, as a class id per value.
inline std::vector<int> role_classes(const ExtRelation& e) {
  const Universe& u = e.universe();
  std::vector<int> cls(std::size_t(u.n_values), -1);
  int next = 0;
  for (Value x = 0; x < u.n_values; ++x) {
    if (cls[std::size_t(x)] != -1) continue;
    cls[std::size_t(x)] = next;
    for (Value y = x + 1; y < u.n_values; ++y)
      if (cls[std::size_t(y)] == -1 && role_equivalent(e, x, y)) cls[std::size_t(y)] = next;
    ++next;
  }
  return cls;
}

inline ConnectiveTable random_table(const Universe& u, int arity, std::mt19937& rng) {
  std::uniform_int_distribution<int> pick(0, u.n_values - 1);
  std::vector<Value> outputs(table_cells(u.n_values, arity));
  for (auto& v : outputs) v = pick(rng);
  return ConnectiveTable::make(u, arity, std::move(outputs));
}

inline void add(std::vector<NamedCheck>& out, int criterion, std::string name, bool pass,
                std::string detail = "") {
  out.push_back(NamedCheck{std::move(name), pass, std::move(detail), criterion});
}

// --- shared sub-suites -----------------------------------------------------

// Structural invariants of every enumerated extension: monotone, boundary
// short-circuits, and role-equivalence behaving as an equivalence relation.
inline void check_extension_invariants(std::vector<NamedCheck>& out,
                                       const CampaignReport& report) {
  bool formed = true, equivalence = true;
  for (const auto& a : report.entries) {
    formed = formed && well_formed(a.entry.ext);
    const Universe& u = a.entry.ext.universe();
    for (Value x = 0; x < u.n_values && equivalence; ++x) {
      equivalence = role_equivalent(a.entry.ext, x, x);
      for (Value y = 0; y < u.n_values && equivalence; ++y) {
        equivalence = role_equivalent(a.entry.ext, x, y) == role_equivalent(a.entry.ext, y, x);
        for (Value z = 0; z < u.n_values && equivalence; ++z)
          if (role_equivalent(a.entry.ext, x, y) && role_equivalent(a.entry.ext, y, z))
            equivalence = role_equivalent(a.entry.ext, x, z);
      }
    }
  }
  std::string n = std::to_string(report.n_values);
  add(out, 9, "kernel/every enumerated extension is monotone with boundary short-circuits (N=" +
      n + ")", formed);
  add(out, 9, "kernel/role-equivalence is an equivalence relation on every relation (N=" + n + ")",
      equivalence);
}

// Algebra conditions against brute-force existence, bit for bit.
inline void check_algebra_vs_search(std::vector<NamedCheck>& out, const CampaignReport& report) {
  bool disj_ok = true, conj_ok = true, dc_ok = true, cond_ok = true, neg_ok = true, agree = true;
  for (const auto& a : report.entries) {
    disj_ok = disj_ok && (a.algebra.disjunction_compatible == a.profile.disjunction.exists);
    conj_ok = conj_ok && (a.algebra.conjunction_compatible == a.profile.conjunction.exists);
    dc_ok = dc_ok && ((a.algebra.dc1 && a.algebra.dc2) ==
                      (a.profile.conjunction.exists && a.profile.disjunction.exists));
    cond_ok = cond_ok && (a.algebra.conditional_decision == a.profile.conditional.exists);
    if (a.profile.negation.exists) neg_ok = neg_ok && a.algebra.n1 && a.algebra.n2;
    agree = agree &&
            (decide_conditional(a.entry.ext, a.entry.min_rep) == a.profile.conditional.exists);
  }
  std::string n = std::to_string(report.n_values);
  add(out, 6, "algebra/disjunction-compatibility matches search (N=" + n + ")", disj_ok);
  add(out, 6, "algebra/conjunction-compatibility matches search (N=" + n + ")", conj_ok);
  add(out, 6, "algebra/DC1+DC2 match conjunction+disjunction existence (N=" + n + ")", dc_ok);
  add(out, 6, "algebra/conditional decision matches search (N=" + n + ")", cond_ok);
  add(out, 6, "algebra/negation-necessity holds wherever a negation exists (N=" + n + ")", neg_ok);
  add(out, 6, "algebra/decide_conditional agrees across minimal representations (N=" + n + ")",
      agree);
}

// Admissible sets are unions of role classes and single role classes when
// nonempty.
inline void check_role_closure(std::vector<NamedCheck>& out, const CampaignReport& report) {
  bool closed = true, single_class = true;
  for (const auto& a : report.entries) {
    auto cls = role_classes(a.entry.ext);
    for (const ConnectiveReport* rep :
         {&a.profile.conjunction, &a.profile.disjunction, &a.profile.negation,
          &a.profile.conditional}) {
      for (Bits adm : rep->cell_admissible) {
        if (adm == 0) continue;
        int the_class = cls[std::size_t(std::countr_zero(adm))];
        for_each_bit(adm, [&](int z) {
          if (cls[std::size_t(z)] != the_class) single_class = false;
        });
        for (Value z = 0; z < a.entry.ext.universe().n_values; ++z)
          if (cls[std::size_t(z)] == the_class && !test_bit(adm, z)) closed = false;
      }
    }
  }
  std::string n = std::to_string(report.n_values);
  add(out, 9, "multiplicity/admissible sets are closed under role-equivalence (N=" + n + ")",
      closed);
  add(out, 9, "multiplicity/nonempty admissible sets are single role classes (N=" + n + ")",
      single_class);
}

// De Morgan, contraposition, reflexivity chain, shared-conditional identity,
// weak bivalence — over one catalog.
inline void check_interaction_suite(std::vector<NamedCheck>& out, const CampaignReport& report) {
  std::string n = std::to_string(report.n_values);
  bool demorgan = true, contraposition = true, reflexivity_chain = true, weak_biv = true;
  for (const auto& a : report.entries) {
    const auto& e = a.entry.ext;
    const auto& prof = a.profile;
    const Universe& u = e.universe();
    if (prof.negation.exists && prof.conjunction.exists) {
      const auto& neg = *prof.negation.witness;
      const auto& conj = *prof.conjunction.witness;
      std::vector<Value> dis;
      for (Value x = 0; x < u.n_values; ++x)
        for (Value y = 0; y < u.n_values; ++y)
          dis.push_back(neg.at1(conj.at2(neg.at1(x), neg.at1(y))));
      demorgan = demorgan && satisfies_rule_oracle(library_rule("disjunction"), e,
                                                   ConnectiveTable::make(u, 2, std::move(dis)));
    }
    if (prof.negation.exists && prof.disjunction.exists) {
      const auto& neg = *prof.negation.witness;
      const auto& disj = *prof.disjunction.witness;
      std::vector<Value> con;
      for (Value x = 0; x < u.n_values; ++x)
        for (Value y = 0; y < u.n_values; ++y)
          con.push_back(neg.at1(disj.at2(neg.at1(x), neg.at1(y))));
      demorgan = demorgan && satisfies_rule_oracle(library_rule("conjunction"), e,
                                                   ConnectiveTable::make(u, 2, std::move(con)));
    }
    if (prof.conditional.exists && prof.negation.exists) {
      const auto& cond = *prof.conditional.witness;
      const auto& neg = *prof.negation.witness;
      std::vector<Value> contra;
      for (Value x = 0; x < u.n_values; ++x)
        for (Value y = 0; y < u.n_values; ++y) contra.push_back(cond.at2(neg.at1(y), neg.at1(x)));
      ConnectiveTable ct = ConnectiveTable::make(u, 2, std::move(contra));
      // same satisfaction verdict under each conditional rule side, and
      // cellwise role-equivalent
      auto crule = library_rule("conditional");
      for (RuleSide side : {RuleSide::premise, RuleSide::conclusion, RuleSide::both})
        contraposition = contraposition && satisfies_rule_oracle(crule, e, ct, side) ==
                                               satisfies_rule_oracle(crule, e, cond, side);
      for (Value x = 0; x < u.n_values && contraposition; ++x)
        for (Value y = 0; y < u.n_values && contraposition; ++y)
          contraposition = role_equivalent(e, cond.at2(x, y), ct.at2(x, y));
    }
    if (prof.conditional.exists && prof.negation.exists && prof.conjunction.exists &&
        prof.disjunction.exists) {
      const auto& cond = *prof.conditional.witness;
      const auto& neg = *prof.negation.witness;
      bool refl = is_reflexive(e);
      bool mp = true, lem = true, explosion = true;
      for (Value x = 0; x < u.n_values; ++x) {
        lem = lem && e.holds(0, bit(x) | bit(neg.at1(x)));
        explosion = explosion && e.holds(bit(x) | bit(neg.at1(x)), 0);
        for (Value y = 0; y < u.n_values; ++y)
          mp = mp && e.holds(bit(x) | bit(cond.at2(x, y)), bit(y));
      }
      reflexivity_chain =
          reflexivity_chain && (mp == refl) && (lem == refl) && (explosion == refl);
    }
    // weak bivalence: for pure relations, bivalencing any witness stays a witness
    if (a.entry.min_rep.members.size() == 1 && a.entry.min_rep.members[0].pure()) {
      Bits d = a.entry.min_rep.members[0].dp.bits;
      for (const auto& [rn, rule] : library_rules_all(2)) {
        auto rep = find_connectives(rule, e, a.entry.min_rep, rn);
        if (!rep.exists) continue;
        std::vector<Value> biv;
        for (Value v : rep.witness->outputs)
          biv.push_back(test_bit(d, v) ? u.verum() : u.falsum());
        weak_biv = weak_biv &&
                   satisfies_rule_oracle(rule, e, ConnectiveTable::make(u, rule.arity, std::move(biv)));
      }
    }
  }

  // No two distinct relations share a conditional witness together with the
  // same conclusion-tautology set.
  bool shared_identity = true;
  for (std::size_t i = 0; i < report.entries.size(); ++i) {
    const auto& ai = report.entries[i];
    if (!ai.profile.conditional.exists) continue;
    for (std::size_t j = i + 1; j < report.entries.size(); ++j) {
      const auto& aj = report.entries[j];
      if (!aj.profile.conditional.exists) continue;
      if (conclusion_tautologies(ai.entry.ext) != conclusion_tautologies(aj.entry.ext)) continue;
      bool common = true;
      for (std::size_t c = 0; c < ai.profile.conditional.cell_admissible.size(); ++c)
        if ((ai.profile.conditional.cell_admissible[c] &
             aj.profile.conditional.cell_admissible[c]) == 0) {
          common = false;
          break;
        }
      if (common) shared_identity = false;
    }
  }

  add(out, 9, "interaction/De Morgan compositions pass the dual rule (N=" + n + ")", demorgan);
  add(out, 9, "interaction/contraposed conditionals behave identically (N=" + n + ")",
      contraposition);
  add(out, 9, "interaction/reflexivity = modus ponens = excluded middle = explosion (N=" + n + ")",
      reflexivity_chain);
  add(out, 9, "interaction/no two relations share a conditional and conclusion-tautologies (N=" +
      n + ")", shared_identity);
  add(out, 9, "bivalence/pure-relation witnesses stay witnesses after bivalencing (N=" + n + ")",
      weak_biv);
}

// Boundary admissibility plus the pointwise/oracle agreement and
// member-inheritance suites: exhaustive over tables for N=3, sampled for
// N=4.
inline void check_compiler_suite(std::vector<NamedCheck>& out, const CampaignReport& report,
                                 bool exhaustive) {
  std::string n = std::to_string(report.n_values);
  const Universe u(report.n_values);
  bool boundary = true;
  for (const auto& a : report.entries) {
    auto conj_rule = library_rule("conjunction");
    auto neg_rule = library_rule("negation");
    for (Value x = 0; x < u.n_values; ++x) {
      Value one = u.verum(), zero = u.falsum();
      Value c1[2] = {one, x}, c0[2] = {zero, x};
      boundary = boundary &&
                 test_bit(pointwise_admissible(conj_rule, a.entry.min_rep, {c1, 2}), x) &&
                 test_bit(pointwise_admissible(conj_rule, a.entry.min_rep, {c0, 2}), zero);
    }
    Value vone = u.verum(), vzero = u.falsum();
    boundary = boundary &&
               test_bit(pointwise_admissible(neg_rule, a.entry.min_rep, {&vone, 1}), vzero) &&
               test_bit(pointwise_admissible(neg_rule, a.entry.min_rep, {&vzero, 1}), vone);
  }
  add(out, 9, "compiler/boundary cells admit the forced classical values (N=" + n + ")", boundary);

  bool agree = true, inherit = true;
  std::mt19937 rng(20240 + std::uint32_t(report.n_values));
  auto rules = library_rules_all(3);
  for (const auto& a : report.entries) {
    std::vector<Representation> member_reps;
    std::vector<ExtRelation> member_exts;
    for (const auto& m : a.entry.min_rep.members) {
      member_reps.push_back(Representation::make(u, {m}));
      member_exts.push_back(extension(m));
    }
    for (const auto& [rn, rule] : rules) {
      auto probe = [&](const ConnectiveTable& t) {
        bool pw = satisfies_rule_pointwise(rule, a.entry.min_rep, t);
        if (pw != satisfies_rule_oracle(rule, a.entry.ext, t)) agree = false;
        bool members = true;
        for (std::size_t k = 0; k < member_reps.size(); ++k)
          members = members && satisfies_rule_pointwise(rule, member_reps[k], t);
        if (pw != members) inherit = false;
      };
      if (exhaustive && rule.arity <= 2) {
        std::size_t cells = table_cells(u.n_values, rule.arity);
        std::vector<Value> outputs(cells, 0);
        for (;;) {
          probe(ConnectiveTable{u, rule.arity, outputs});
          std::size_t i = cells;
          while (i > 0 && outputs[i - 1] == u.n_values - 1) outputs[--i] = 0;
          if (i == 0) break;
          ++outputs[i - 1];
        }
      } else {
        auto rep = find_connectives(rule, a.entry.ext, a.entry.min_rep, rn);
        if (rep.witness) probe(*rep.witness);
        for (int s = 0; s < 12; ++s) probe(random_table(u, rule.arity, rng));
      }
    }
  }
  std::string mode = exhaustive ? "exhaustive" : "sampled";
  add(out, 9, "compiler/pointwise agrees with the full-quantification oracle (N=" + n + ", " +
      mode + ")", agree);
  add(out, 9, "compiler/satisfaction for an intersection = satisfaction for every member (N=" +
      n + ", " + mode + ")", inherit);
}

// Non-pure mixed relations admit exactly the constant rules their designated
// sets allow.
inline void check_constants(std::vector<NamedCheck>& out, int n_values) {
  Universe u(n_values);
  bool ok = true;
  for (const auto& m : all_mixed_relations(u)) {
    Representation rep = Representation::make(u, {m});
    ExtRelation e = extension(m);
    bool constp = find_connectives(library_rule("const_p"), e, rep).exists;
    bool constc = find_connectives(library_rule("const_c"), e, rep).exists;
    ok = ok && constp == ((m.dp.bits & ~m.dc.bits) != 0) && constc == ((m.dc.bits & ~m.dp.bits) != 0);
    ok = ok && find_connectives(library_rule("top"), e, rep).exists &&
         find_connectives(library_rule("bottom"), e, rep).exists;
  }
  add(out, 9, "constants/const_p iff dp\\dc nonempty, const_c iff dc\\dp nonempty (N=" +
      std::to_string(n_values) + ")", ok);
}

// Order-theoretic behavior for one universe size: the upset intersection
// equals the order relation; conjunction/disjunction exist iff the order is
// total; negations and conditionals never exist.
inline void check_orders(std::vector<NamedCheck>& out, int n_values) {
  Universe u(n_values);
  bool upset_eq = true, conn_iff_total = true, no_neg_cond = true, decide_false = true;
  int count = 0;
  for (const auto& o : all_truth_orders(u)) {
    ++count;
    ExtRelation e = order_relation(o);
    Representation rep = upset_representation(o);
    if (!(extension(rep) == e)) upset_eq = false;
    Representation minrep = minimal_representation(rep);
    auto prof = connective_profile(e, minrep);
    bool total = classify_order(o).kind == OrderKind::total;
    if (prof.negation.exists || prof.conditional.exists) no_neg_cond = false;
    if (prof.conjunction.exists != total || prof.disjunction.exists != total)
      conn_iff_total = false;
    if (decide_conditional(e, minrep)) decide_false = false;
    if (n_values == 3) {
      if (!(prof.conjunction.count == 1) || !(prof.disjunction.count == 1)) conn_iff_total = false;
      if (!(*prof.conjunction.witness == strong_kleene_conjunction())) conn_iff_total = false;
      if (!(*prof.disjunction.witness == strong_kleene_disjunction())) conn_iff_total = false;
    }
  }
  std::string n = std::to_string(n_values);
  add(out, 8, "orders/upset intersection equals the order relation (N=" + n + ", " +
      std::to_string(count) + " orders)", upset_eq);
  add(out, 8, "orders/conjunction and disjunction exist iff the order is total (N=" + n + ")",
      conn_iff_total);
  add(out, 8, "orders/no order relation admits a negation or conditional (N=" + n + ")",
      no_neg_cond);
  add(out, 8, "orders/decide_conditional is false on every order relation (N=" + n + ")",
      decide_false);
}

} // namespace verify_detail

// ---------------------------------------------------------------------------
// verify_paper(3)
// ---------------------------------------------------------------------------

inline std::vector<NamedCheck> verify_paper_3() {
  using namespace verify_detail;
  std::vector<NamedCheck> out;
  Universe u(3);
  CampaignReport report = run_campaign(3);

  add(out, 1, "census/exactly five 3-valued intersective mixed relations",
      report.entries.size() == 5, "found " + std::to_string(report.entries.size()));

  std::map<std::string, const RelationAnalysis*> by_name;
  for (const auto& a : report.entries)
    if (!a.name.empty()) by_name[a.name] = &a;
  bool named = by_name.count("ss") && by_name.count("tt") && by_name.count("st") &&
               by_name.count("ts") && by_name.count("ss∩tt");
  add(out, 1, "census/the five are ss, tt, st, ts, ss∩tt", named);
  if (!named || report.entries.size() != 5) return out;

  const auto& ss = *by_name["ss"];
  const auto& tt = *by_name["tt"];
  const auto& st = *by_name["st"];
  const auto& ts = *by_name["ts"];
  const auto& sstt = *by_name["ss∩tt"];

  auto sk_conj = strong_kleene_conjunction();
  auto sk_disj = strong_kleene_disjunction();
  bool sk_all = true;
  for (const auto& a : report.entries) {
    sk_all = sk_all && report_admits(a.profile.conjunction, sk_conj) &&
             satisfies_rule_oracle(library_rule("conjunction"), a.entry.ext, sk_conj);
    sk_all = sk_all && report_admits(a.profile.disjunction, sk_disj) &&
             satisfies_rule_oracle(library_rule("disjunction"), a.entry.ext, sk_disj);
  }
  add(out, 2, "connectives/Strong Kleene conjunction and disjunction pass for all five", sk_all);

  auto count_is = [](const ConnectiveReport& r, std::uint64_t v) { return r.count == v; };
  add(out, 2, "connectives/conjunction counts: ss 2^8, tt 2^4, st/ts/ss∩tt unique",
      count_is(ss.profile.conjunction, 256) && count_is(tt.profile.conjunction, 16) &&
          count_is(st.profile.conjunction, 1) && count_is(ts.profile.conjunction, 1) &&
          count_is(sstt.profile.conjunction, 1));
  add(out, 2, "connectives/disjunction counts: ss 2^4, tt 2^8, st/ts/ss∩tt unique",
      count_is(ss.profile.disjunction, 16) && count_is(tt.profile.disjunction, 256) &&
          count_is(st.profile.disjunction, 1) && count_is(ts.profile.disjunction, 1) &&
          count_is(sstt.profile.disjunction, 1));
  add(out, 2, "connectives/conditional counts: ss 2^2, tt 2^7, st 1, ts 1, ss∩tt 0",
      count_is(ss.profile.conditional, 4) && count_is(tt.profile.conditional, 128) &&
          count_is(st.profile.conditional, 1) && count_is(ts.profile.conditional, 1) &&
          count_is(sstt.profile.conditional, 0));
  add(out, 2, "connectives/ss∩tt admits no negation", count_is(sstt.profile.negation, 0));

  bool displayed = report_admits(ss.profile.conditional, conditional_ss()) &&
                   report_admits(tt.profile.conditional, conditional_tt()) &&
                   report_admits(st.profile.conditional, conditional_st()) &&
                   report_admits(ts.profile.conditional, conditional_st());
  add(out, 2, "connectives/displayed conditional tables are admitted (ss, tt, st, ts)", displayed);
  add(out, 2, "connectives/st and ts conditionals are exactly the displayed table",
      *st.profile.conditional.witness == conditional_st() &&
          *ts.profile.conditional.witness == conditional_st());

  bool neg_implies_cond = true;
  for (const auto& a : report.entries)
    if (a.profile.negation.exists && !a.profile.conditional.exists) neg_implies_cond = false;
  add(out, 2, "connectives/every 3-valued relation with a negation has a conditional",
      neg_implies_cond);

  // single-conclusion results for ss∩tt
  auto sc_ded = sc_search(ScVariant::deduction, sstt.entry.ext);
  add(out, 3, "single-conclusion/ss∩tt deduction-theorem table is unique and Gödel",
      sc_ded.count == 1 && sc_ded.witnesses.size() == 1 &&
          sc_ded.witnesses[0] == godel_conditional());
  auto sc_prem = sc_search(ScVariant::premise, sstt.entry.ext);
  add(out, 3, "single-conclusion/ss∩tt premise variant has no table", sc_prem.count == 0);
  add(out, 3, "single-conclusion/Gödel table passes the premise right-to-left direction",
      single_conclusion_check(ScVariant::premise_rtl, sstt.entry.ext, godel_conditional()));
  auto sc_st = sc_search(ScVariant::deduction, st.entry.ext, false, 20000);
  bool st_in = false;
  for (const auto& w : sc_st.witnesses) st_in = st_in || w == conditional_st();
  add(out, 3, "single-conclusion/st deduction tables include st's full conditional",
      !sc_st.count.is_zero() && st_in);

  check_extension_invariants(out, report);
  check_algebra_vs_search(out, report);
  check_role_closure(out, report);
  check_interaction_suite(out, report);
  check_compiler_suite(out, report, true);
  check_constants(out, 3);
  check_orders(out, 3);

  // constructors over the 3-valued relations
  bool mixed_cond = *st.profile.conditional.witness == conditional_st();
  mixed_cond = mixed_cond && construct_mixed_conditional(st.entry.min_rep.members[0]) ==
                                 conditional_st();
  mixed_cond = mixed_cond && construct_mixed_conditional(ts.entry.min_rep.members[0]) ==
                                 conditional_st();
  add(out, 7, "constructors/mixed-relation conditional reproduces the displayed st/ts table",
      mixed_cond);

  bool derived_ok = true;
  for (const auto* a : {&ss, &tt, &st, &ts}) {
    auto d = derive_from_conditional(a->entry.ext, *a->profile.conditional.witness);
    derived_ok = derived_ok &&
                 satisfies_rule_oracle(library_rule("negation"), a->entry.ext, d.negation) &&
                 satisfies_rule_oracle(library_rule("disjunction"), a->entry.ext, d.disjunction) &&
                 satisfies_rule_oracle(library_rule("conjunction"), a->entry.ext, d.conjunction);
  }
  add(out, 7, "constructors/negation, disjunction, conjunction derived from each conditional pass",
      derived_ok);

  bool cplus_ok = true;
  for (Bits f = 0; f < 16; ++f) {
    auto cf = ClassicalFunction::make(2, f);
    auto rule = synthesize_classical_rule(cf);
    auto t = construct_cplus(rule, *st.profile.conditional.witness,
                             *st.profile.conjunction.witness, *st.profile.disjunction.witness);
    cplus_ok = cplus_ok && satisfies_rule_oracle(rule, st.entry.ext, t, RuleSide::conclusion);
  }
  add(out, 7,
      "constructors/C+ passes its synthesized conclusion rule over st for all 16 binary functions",
      cplus_ok);

  // synthesized classical rules hold classically
  Universe u2(2);
  auto classical = MixedRelation::make(u2, bit(1), bit(1));
  ExtRelation ce = extension(classical);
  Representation crep = Representation::make(u2, {classical});
  bool synth_ok = true;
  for (int arity = 0; arity <= 2; ++arity) {
    for (Bits f = 0; f < (Bits{1} << (1 << arity)); ++f) {
      auto cf = ClassicalFunction::make(arity, f);
      std::vector<Value> outs;
      for (Bits row = 0; row < (Bits{1} << arity); ++row) outs.push_back(cf.at(row) ? 1 : 0);
      // classical row order (first arg most significant over {0,1}) matches table order
      auto t = ConnectiveTable::make(u2, arity, std::move(outs));
      synth_ok = synth_ok && satisfies_rule_oracle(synthesize_classical_rule(cf), ce, t) &&
                 satisfies_rule_pointwise(synthesize_classical_rule(cf), crep, t);
    }
  }
  add(out, 9, "synthesis/every classical function satisfies its synthesized rule classically",
      synth_ok);

  bool disj_rule_check =
      satisfies_rule_oracle(synthesize_classical_rule(ClassicalFunction::parse("0111", 2)), ce,
                            ConnectiveTable::make(u2, 2, {0, 1, 1, 1})) &&
      satisfies_rule_oracle(library_rule("disjunction"), ce,
                            ConnectiveTable::make(u2, 2, {0, 1, 1, 1}));
  add(out, 9, "synthesis/disjunction satisfies both its table rule and its CNF rule classically",
      disj_rule_check);

  return out;
}

// ---------------------------------------------------------------------------
// verify_paper(4)
// ---------------------------------------------------------------------------

inline std::vector<NamedCheck> verify_paper_4() {
  using namespace verify_detail;
  std::vector<NamedCheck> out;
  Universe u(4);
  CampaignReport report = run_campaign(4, CampaignOptions{true, 2, false});

  add(out, 4, "census/167 distinct 4-valued intersective mixed relations",
      report.entries.size() == 167, "found " + std::to_string(report.entries.size()));
  const auto& s = report.summary;
  add(out, 4, "census/profile tallies 18 / 28 / 27 / 27 / 67",
      s.conditional == 18 && s.conj_disj_only == 28 && s.conj_only == 27 && s.disj_only == 27 &&
          s.none == 67,
      "computed " + std::to_string(s.conditional) + "/" + std::to_string(s.conj_disj_only) + "/" +
          std::to_string(s.conj_only) + "/" + std::to_string(s.disj_only) + "/" +
          std::to_string(s.none));
  add(out, 4, "census/97 classes up to indeterminate renaming", report.quotient_class_count == 97,
      "found " + std::to_string(report.quotient_class_count));
  const auto& q = *report.quotient_summary;
  add(out, 4, "census/quotient conditional classes: 12", q.conditional == 12,
      "computed " + std::to_string(q.conditional));
  add(out, 4, "census/quotient conjunction+disjunction classes: 15", q.conj_disj_only == 15,
      "computed " + std::to_string(q.conj_disj_only));
  add(out, 4, "census/quotient conjunction-only classes: 16", q.conj_only == 16,
      "computed " + std::to_string(q.conj_only));
  add(out, 4, "census/quotient disjunction-only classes: published value 27", q.disj_only == 27,
      "computed " + std::to_string(q.disj_only) +
          " (the published bullet conflicts with the published total of 97; see the none-class "
          "and partition checks)");
  add(out, 4, "census/quotient none classes: 38", q.none == 38,
      "computed " + std::to_string(q.none));
  add(out, 4, "census/quotient tallies partition the 97 classes",
      q.conditional + q.conj_disj_only + q.conj_only + q.disj_only + q.none == 97,
      "sum = " + std::to_string(q.conditional + q.conj_disj_only + q.conj_only + q.disj_only +
                                q.none));

  // Independent orbit count: a relation is a fixed point of the indeterminate
  // swap iff swapping #1 and #2 inside its minimal representation reproduces
  // the same member set. Classes per category must equal (raw + fixed)/2.
  {
    std::vector<Value> swap{0, 2, 1, 3};
    std::map<ProfileCategory, int> raw, fixed;
    for (const auto& a : report.entries) {
      ProfileCategory c = category_of(a.profile);
      ++raw[c];
      std::vector<MixedRelation> swapped;
      for (const auto& m : a.entry.min_rep.members)
        swapped.push_back(MixedRelation::make(u, ExtRelation::apply_perm(swap, m.dp.bits),
                                              ExtRelation::apply_perm(swap, m.dc.bits)));
      std::sort(swapped.begin(), swapped.end());
      if (swapped == a.entry.min_rep.members) ++fixed[c];
    }
    auto orbit = [&](ProfileCategory c) { return (raw[c] + fixed[c]) / 2; };
    bool burnside = orbit(ProfileCategory::conditional) == q.conditional &&
                    orbit(ProfileCategory::conj_disj) == q.conj_disj_only &&
                    orbit(ProfileCategory::conj_only) == q.conj_only &&
                    orbit(ProfileCategory::disj_only) == q.disj_only &&
                    orbit(ProfileCategory::none) == q.none;
    add(out, 4, "census/quotient tallies obey orbit counting over the indeterminate swap",
        burnside,
        "fixed points " + std::to_string(fixed[ProfileCategory::conditional]) + "/" +
            std::to_string(fixed[ProfileCategory::conj_disj]) + "/" +
            std::to_string(fixed[ProfileCategory::conj_only]) + "/" +
            std::to_string(fixed[ProfileCategory::disj_only]) + "/" +
            std::to_string(fixed[ProfileCategory::none]));
  }

  // the 18 conditional-bearing relations: all 16 mixed + the two intersective
  auto mixed_all = all_mixed_relations(u);
  std::set<std::string> mixed_hex;
  for (const auto& m : mixed_all) mixed_hex.insert(extension(m).to_hex());
  ExtRelation pure_pair_ext = extension(pure_pair_relation());
  ExtRelation crossed_pair_ext = extension(crossed_pair_relation());
  int mixed_with_cond = 0;
  bool two_found = true;
  const RelationAnalysis* pure_pair_entry = nullptr;
  const RelationAnalysis* crossed_pair_entry = nullptr;
  for (const auto& a : report.entries) {
    if (!a.profile.conditional.exists) continue;
    if (mixed_hex.count(a.entry.ext_hex)) ++mixed_with_cond;
    if (a.entry.ext == pure_pair_ext) pure_pair_entry = &a;
    if (a.entry.ext == crossed_pair_ext) crossed_pair_entry = &a;
  }
  two_found = pure_pair_entry != nullptr && crossed_pair_entry != nullptr;
  add(out, 4, "connectives/the 18 = all 16 mixed relations plus the two displayed intersections",
      mixed_with_cond == 16 && two_found);
  if (two_found) {
    add(out, 4, "connectives/|=11 ∩ |=22 has the displayed unique conditional",
        pure_pair_entry->profile.conditional.count == 1 &&
            *pure_pair_entry->profile.conditional.witness == conditional_pure_pair());
    add(out, 4, "connectives/|=12 ∩ |=21 has the displayed unique conditional",
        crossed_pair_entry->profile.conditional.count == 1 &&
            *crossed_pair_entry->profile.conditional.witness == conditional_crossed_pair());
  }

  bool neg_implies_cond = true;
  for (const auto& a : report.entries)
    if (a.profile.negation.exists && !a.profile.conditional.exists) neg_implies_cond = false;
  add(out, 4, "connectives/every 4-valued relation with a negation has a conditional",
      neg_implies_cond);

  bool unique_minreps = true;
  for (const auto& a : report.entries)
    if (a.minimal_representation_count != 1) unique_minreps = false;
  add(out, 9, "kernel/every 4-valued relation has exactly one minimal representation",
      unique_minreps);

  // members of a quotient class carry identical existence profiles
  bool class_profiles = true;
  std::vector<const RelationAnalysis*> class_rep(std::size_t(report.quotient_class_count), nullptr);
  for (const auto& a : report.entries)
    if (a.quotient_representative) class_rep[std::size_t(a.quotient_class)] = &a;
  for (const auto& a : report.entries) {
    const auto* r = class_rep[std::size_t(a.quotient_class)];
    class_profiles = class_profiles && r != nullptr &&
                     a.profile.conjunction.exists == r->profile.conjunction.exists &&
                     a.profile.disjunction.exists == r->profile.disjunction.exists &&
                     a.profile.negation.exists == r->profile.negation.exists &&
                     a.profile.conditional.exists == r->profile.conditional.exists;
  }
  add(out, 4, "census/quotient classes are profile-homogeneous", class_profiles);

  // the false conjecture's counterexample admits only classical connectives
  if (crossed_pair_entry != nullptr) {
    bool bivalent_ok = true;
    Bits biv = bit(u.falsum()) | bit(u.verum());
    for (const auto& [rn, rule] : library_rules_all(3)) {
      auto rep = find_connectives(rule, crossed_pair_entry->entry.ext,
                                  crossed_pair_entry->entry.min_rep, rn);
      std::size_t cells = rep.cell_admissible.size();
      std::vector<Value> xs(std::size_t(rule.arity));
      for (std::size_t idx = 0; idx < cells; ++idx) {
        decode_cell(idx, u.n_values, rule.arity, xs.data());
        bool bivalent_inputs = true;
        for (Value x : xs) bivalent_inputs = bivalent_inputs && test_bit(biv, x);
        if (bivalent_inputs && (rep.cell_admissible[idx] & ~biv) != 0) bivalent_ok = false;
      }
    }
    add(out, 9, "counterexample/|=12 ∩ |=21 admits only bivalent outputs at bivalent inputs",
        bivalent_ok);
  }

  // canonical 4-valued representation: every library rule has a singleton solution
  bool canonical_ok = true;
  for (const auto& [rn, rule] : library_rules_all(3)) {
    try {
      auto t = synthesize_canonical4(rule);
      ExtRelation ce = extension(canonical4_relation());
      canonical_ok = canonical_ok && satisfies_rule_oracle(rule, ce, t);
    } catch (const std::logic_error&) {
      canonical_ok = false;
    }
  }
  add(out, 9, "canonical4/every library rule is realized by exactly one table under |=_{1#p,1#c}",
      canonical_ok);

  // C+ over the canonical 4-valued relation
  {
    ExtRelation canon_ext = extension(canonical4_relation());
    auto cond = synthesize_canonical4(library_rule("conditional"));
    auto conj = synthesize_canonical4(library_rule("conjunction"));
    auto disj = synthesize_canonical4(library_rule("disjunction"));
    bool cplus_ok = true, synth_full = true;
    for (Bits f = 0; f < 16; ++f) {
      auto rule = synthesize_classical_rule(ClassicalFunction::make(2, f));
      auto t = construct_cplus(rule, cond, conj, disj);
      cplus_ok = cplus_ok && satisfies_rule_oracle(rule, canon_ext, t, RuleSide::conclusion);
      synth_full = synth_full && satisfies_rule_oracle(rule, canon_ext, synthesize_canonical4(rule));
    }
    add(out, 7,
        "constructors/C+ passes its synthesized conclusion rule over |=_{1#p,1#c} for all 16 "
        "functions",
        cplus_ok);
    add(out, 7, "constructors/direct canonical synthesis satisfies both sides of every rule",
        synth_full);
  }

  // derived connectives wherever a conditional exists
  bool derived_ok = true;
  for (const auto& a : report.entries) {
    if (!a.profile.conditional.exists) continue;
    auto d = derive_from_conditional(a.entry.ext, *a.profile.conditional.witness);
    derived_ok = derived_ok &&
                 satisfies_rule_oracle(library_rule("negation"), a.entry.ext, d.negation) &&
                 satisfies_rule_oracle(library_rule("disjunction"), a.entry.ext, d.disjunction) &&
                 satisfies_rule_oracle(library_rule("conjunction"), a.entry.ext, d.conjunction);
  }
  add(out, 7, "constructors/derived negation/disjunction/conjunction pass for all 18 relations",
      derived_ok);

  check_extension_invariants(out, report);
  check_algebra_vs_search(out, report);
  check_role_closure(out, report);
  check_interaction_suite(out, report);
  check_compiler_suite(out, report, false);
  check_constants(out, 4);
  check_orders(out, 4);
  return out;
}

// ---------------------------------------------------------------------------
// verify_paper(5)
// ---------------------------------------------------------------------------

inline std::vector<NamedCheck> verify_paper_5() {
  using namespace verify_detail;
  std::vector<NamedCheck> out;
  Representation fact = five_valued_fact_relation();
  Representation minrep = minimal_representation(fact);
  ExtRelation ext = extension(fact);
  ConnectiveTable neg = five_valued_fact_negation();

  add(out, 5, "fact/the displayed 5-valued negation passes the negation rule",
      satisfies_rule_oracle(library_rule("negation"), ext, neg) &&
          satisfies_rule_pointwise(library_rule("negation"), minrep, neg));
  auto neg_report = find_connectives(library_rule("negation"), ext, minrep, "negation");
  add(out, 5, "fact/a negation exists by search and the displayed table is admitted",
      neg_report.exists && report_admits(neg_report, neg));
  auto cond_report = find_connectives(library_rule("conditional"), ext, minrep, "conditional");
  add(out, 5, "fact/no conditional exists by search", !cond_report.exists);
  add(out, 5, "fact/decide_conditional returns false", !decide_conditional(ext, minrep));
  AlgebraVerdict v = algebra_verdict(minrep);
  add(out, 5, "fact/DC1 is the reported cause of failure",
      !v.dc1 && v.n1 && v.n2,
      std::string("dc1=") + (v.dc1 ? "true" : "false") + " dc2=" + (v.dc2 ? "true" : "false") +
          " n1=" + (v.n1 ? "true" : "false") + " n2=" + (v.n2 ? "true" : "false"));

  check_orders(out, 5);

  // mixed-relation conditional constructor, exhaustive over N <= 6
  bool mixed_ok = true;
  for (int n = 2; n <= 6; ++n) {
    Universe u(n);
    for (const auto& m : all_mixed_relations(u)) {
      auto t = construct_mixed_conditional(m);
      if (!satisfies_rule_oracle(library_rule("conditional"), extension(m), t)) mixed_ok = false;
    }
  }
  add(out, 7, "constructors/the mixed-relation conditional passes for every mixed relation, N<=6",
      mixed_ok);
  return out;
}

inline std::vector<NamedCheck> verify_paper(int n) {
  if (n == 3) return verify_paper_3();
  if (n == 4) return verify_paper_4();
  if (n == 5) return verify_paper_5();
  throw std::invalid_argument("verify_paper supports n in {3, 4, 5}");
}

} // namespace mvlog
