#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mvlog/relation.hpp"

namespace mvlog {

// ---------------------------------------------------------------------------
// Regularity rules.
//
// A rule consists of two families of (Bp, Bc) argument-index pairs. Placed in
// premise position, C(F_1..F_n) is equivalent to the conjunction over the
// premise-side pairs of the sequents  Gamma, {F_i : i in Bp} |- {F_i : i in
// Bc}, Delta;  placed in conclusion position, the conjunction runs over the
// conclusion-side pairs. An empty side is the empty conjunction (always
// true). Index sets are stored as 0-based bitmasks; the JSON form is 1-based.
// ---------------------------------------------------------------------------

struct RulePair {
  Bits bp = 0;
  Bits bc = 0;
  auto operator<=>(const RulePair&) const = default;
};

struct RegularityRule {
  int arity = 0;
  std::vector<RulePair> premise_side;
  std::vector<RulePair> conclusion_side;

  static RegularityRule make(int arity, std::vector<RulePair> premise,
                             std::vector<RulePair> conclusion) {
    if (arity < 0 || arity > 8) throw std::invalid_argument("rule arity out of range");
    Bits args = arity == 0 ? 0 : (bit(arity) - 1);
    auto normalize = [&](std::vector<RulePair>& side) {
      for (const auto& p : side)
        if (!subset(p.bp, args) || !subset(p.bc, args))
          throw std::invalid_argument("rule pair indexes an argument beyond the arity");
      std::sort(side.begin(), side.end());
      side.erase(std::unique(side.begin(), side.end()), side.end());
    };
    normalize(premise);
    normalize(conclusion);
    return RegularityRule{arity, std::move(premise), std::move(conclusion)};
  }

  bool operator==(const RegularityRule&) const = default;
};

// args({i,j}, xs) = {xs[i], xs[j]} as a value set
inline Bits arg_values(Bits idxs, std::span<const Value> xs) {
  Bits out = 0;
  for_each_bit(idxs, [&](int i) { out |= bit(xs[std::size_t(i)]); });
  return out;
}

// ---------------------------------------------------------------------------
// Truth tables.
// ---------------------------------------------------------------------------

inline std::size_t table_cells(int n_values, int arity) {
  std::size_t c = 1;
  for (int i = 0; i < arity; ++i) c *= std::size_t(n_values);
  return c;
}

inline void decode_cell(std::size_t idx, int n_values, int arity, Value* xs) {
  for (int i = arity - 1; i >= 0; --i) {
    xs[i] = Value(idx % std::size_t(n_values));
    idx /= std::size_t(n_values);
  }
}

// A total map V^n -> V. Outputs are stored flat with the first argument as
// the most significant digit, so for binary tables the first argument is the
// row, matching the usual table layout.
struct ConnectiveTable {
  Universe universe;
  int arity = 0;
  std::vector<Value> outputs;

  static ConnectiveTable constant(const Universe& u, int arity, Value v) {
    if (!u.contains(v)) throw std::out_of_range("constant value outside universe");
    return ConnectiveTable{u, arity, std::vector<Value>(table_cells(u.n_values, arity), v)};
  }

  static ConnectiveTable make(const Universe& u, int arity, std::vector<Value> outputs) {
    if (outputs.size() != table_cells(u.n_values, arity))
      throw std::invalid_argument("table size does not match arity");
    for (Value v : outputs)
      if (!u.contains(v)) throw std::out_of_range("table output outside universe");
    return ConnectiveTable{u, arity, std::move(outputs)};
  }

  std::size_t cell_index(std::span<const Value> xs) const {
    std::size_t idx = 0;
    for (Value x : xs) idx = idx * std::size_t(universe.n_values) + std::size_t(x);
    return idx;
  }

  Value at(std::span<const Value> xs) const { return outputs[cell_index(xs)]; }
  Value at1(Value a) const { return outputs[std::size_t(a)]; }
  Value at2(Value a, Value b) const {
    return outputs[std::size_t(a) * std::size_t(universe.n_values) + std::size_t(b)];
  }

  bool operator==(const ConnectiveTable&) const = default;
};

// Text rendering with the value names 1, #1, ..., 0 as headers; rows are the
// first operand. 0-ary tables render as a single value.
inline std::string to_text(const ConnectiveTable& t) {
  const Universe& u = t.universe;
  auto order = u.display_order();
  if (t.arity == 0) return u.value_name(t.outputs[0]);
  if (t.arity == 1) {
    std::string s;
    for (Value a : order) s += u.value_name(a) + " -> " + u.value_name(t.at1(a)) + "\n";
    return s;
  }
  if (t.arity != 2) throw std::invalid_argument("text rendering supports arity <= 2");
  std::size_t w = 2;
  for (Value v = 0; v < u.n_values; ++v) w = std::max(w, u.value_name(v).size());
  auto pad = [&](const std::string& s) {
    return std::string(w + 1 - s.size(), ' ') + s;
  };
  std::string s = std::string(w + 1, ' ') + " |";
  for (Value b : order) s += pad(u.value_name(b));
  s += "\n" + std::string(w + 2, '-') + "+" + std::string((w + 1) * order.size(), '-') + "\n";
  for (Value a : order) {
    s += pad(u.value_name(a)) + " |";
    for (Value b : order) s += pad(u.value_name(t.at2(a, b)));
    s += "\n";
  }
  return s;
}

// ---------------------------------------------------------------------------
// Classical (bivalent) truth functions and rule synthesis.
// ---------------------------------------------------------------------------

struct ClassicalFunction {
  int arity = 0;
  Bits outputs = 0; // bit r = f(row r); rows count up with the first argument most significant

  static ClassicalFunction make(int arity, Bits outputs) {
    if (arity < 0 || arity > 4) throw std::invalid_argument("classical arity out of range");
    if (!subset(outputs, (Bits{1} << (1u << arity)) - 1))
      throw std::invalid_argument("classical output rows beyond 2^arity");
    return ClassicalFunction{arity, outputs};
  }

  // "0111" -> binary disjunction: character j is f at input row j.
  static ClassicalFunction parse(const std::string& bitstring, int arity) {
    if (bitstring.size() != (std::size_t(1) << arity))
      throw std::invalid_argument("classical bit-string length must be 2^arity");
    Bits out = 0;
    for (std::size_t j = 0; j < bitstring.size(); ++j) {
      if (bitstring[j] == '1')
        out |= Bits{1} << j;
      else if (bitstring[j] != '0')
        throw std::invalid_argument("classical bit-string must be over {0,1}");
    }
    return make(arity, out);
  }

  bool at(Bits row) const { return test_bit(outputs, int(row)); }
};

// Row-per-assignment CNF synthesis: falsifying rows become the conclusion
// side, satisfying rows the premise side. Not minimized; in many-valued
// settings the result may differ from the hand-written table rules while
// still agreeing classically.
inline RegularityRule synthesize_classical_rule(const ClassicalFunction& f) {
  std::vector<RulePair> premise, conclusion;
  Bits rows = Bits{1} << f.arity;
  for (Bits r = 0; r < rows; ++r) {
    RulePair pair;
    for (int i = 1; i <= f.arity; ++i) {
      bool ri = (r >> (f.arity - i)) & 1u;
      if (ri)
        pair.bp |= bit(i - 1);
      else
        pair.bc |= bit(i - 1);
    }
    if (f.at(r))
      premise.push_back(pair);
    else
      conclusion.push_back(pair);
  }
  return RegularityRule::make(f.arity, std::move(premise), std::move(conclusion));
}

// ---------------------------------------------------------------------------
// The rule library: the four G-connective rules, the 0-ary rules, projections
// and the sixteen binary classical rules.
// ---------------------------------------------------------------------------

inline RegularityRule projection_rule(int i, int n) {
  if (n < 1 || i < 1 || i > n) throw std::invalid_argument("projection index out of range");
  return RegularityRule::make(n, {{bit(i - 1), 0}}, {{0, bit(i - 1)}});
}

inline const std::vector<std::string>& binary_rule_names() {
  static const std::vector<std::string> names = {
      "top2", "bottom2", "left",  "not_left", "right", "not_right", "or",  "nor",
      "and",  "nand",    "imp",   "nimp",     "rimp",  "nrimp",     "iff", "xor"};
  return names;
}

inline RegularityRule library_rule(const std::string& name) {
  using P = std::vector<RulePair>;
  const Bits a = bit(0), b = bit(1), ab = bit(0) | bit(1);
  // 0-ary
  if (name == "top") return RegularityRule::make(0, P{{0, 0}}, P{});
  if (name == "bottom") return RegularityRule::make(0, P{}, P{{0, 0}});
  if (name == "const_p") return RegularityRule::make(0, P{{0, 0}}, P{{0, 0}});
  if (name == "const_c") return RegularityRule::make(0, P{}, P{});
  // unary
  if (name == "negation") return RegularityRule::make(1, P{{0, a}}, P{{a, 0}});
  if (name == "identity") return projection_rule(1, 1);
  // binary, following the classical table (premise side, conclusion side)
  if (name == "top2") return RegularityRule::make(2, P{{0, 0}}, P{});
  if (name == "bottom2") return RegularityRule::make(2, P{}, P{{0, 0}});
  if (name == "left") return projection_rule(1, 2);
  if (name == "right") return projection_rule(2, 2);
  if (name == "not_left") return RegularityRule::make(2, P{{0, a}}, P{{a, 0}});
  if (name == "not_right") return RegularityRule::make(2, P{{0, b}}, P{{b, 0}});
  if (name == "or" || name == "disjunction")
    return RegularityRule::make(2, P{{a, 0}, {b, 0}}, P{{0, ab}});
  if (name == "nor") return RegularityRule::make(2, P{{0, ab}}, P{{a, 0}, {b, 0}});
  if (name == "and" || name == "conjunction")
    return RegularityRule::make(2, P{{ab, 0}}, P{{0, a}, {0, b}});
  if (name == "nand") return RegularityRule::make(2, P{{0, a}, {0, b}}, P{{ab, 0}});
  if (name == "imp" || name == "conditional")
    return RegularityRule::make(2, P{{b, 0}, {0, a}}, P{{a, b}});
  if (name == "nimp") return RegularityRule::make(2, P{{a, b}}, P{{b, 0}, {0, a}});
  if (name == "rimp") return RegularityRule::make(2, P{{a, 0}, {0, b}}, P{{b, a}});
  if (name == "nrimp") return RegularityRule::make(2, P{{b, a}}, P{{a, 0}, {0, b}});
  if (name == "iff") return RegularityRule::make(2, P{{ab, 0}, {0, ab}}, P{{a, b}, {b, a}});
  if (name == "xor") return RegularityRule::make(2, P{{a, b}, {b, a}}, P{{ab, 0}, {0, ab}});
  if (name.rfind("projection:", 0) == 0) {
    auto rest = name.substr(11);
    auto colon = rest.find(':');
    if (colon != std::string::npos) {
      int i = std::stoi(rest.substr(0, colon));
      int n = std::stoi(rest.substr(colon + 1));
      return projection_rule(i, n);
    }
  }
  throw std::invalid_argument("unknown rule name: " + name);
}

// ---------------------------------------------------------------------------
// The pointwise constraint compiler. For a dominance-minimal representation,
// a table follows a rule iff at every input cell its output value shows the
// per-member membership pattern dictated by the rule: out of Dp_k exactly
// when the premise-side conjunction holds there, inside Dc_k exactly when
// the conclusion-side conjunction does.
// ---------------------------------------------------------------------------

namespace detail {

inline Bits pointwise_admissible_unchecked(const RegularityRule& rule, const Representation& minrep,
                                           std::span<const Value> xs) {
  Bits adm = minrep.universe.all_values();
  for (const auto& m : minrep.members) {
    bool p = true;
    for (const auto& pr : rule.premise_side)
      if (subset(arg_values(pr.bp, xs), m.dp.bits) && (arg_values(pr.bc, xs) & m.dc.bits) == 0) {
        p = false;
        break;
      }
    bool q = true;
    for (const auto& pr : rule.conclusion_side)
      if (subset(arg_values(pr.bp, xs), m.dp.bits) && (arg_values(pr.bc, xs) & m.dc.bits) == 0) {
        q = false;
        break;
      }
    adm &= p ? ~m.dp.bits : m.dp.bits;
    adm &= q ? m.dc.bits : ~m.dc.bits;
    if (adm == 0) break;
  }
  return adm;
}

inline void require_pointwise_inputs(const RegularityRule& rule, const Representation& minrep) {
  if (!is_dominance_antichain(minrep))
    throw std::invalid_argument("pointwise compiler requires a dominance-minimal representation");
  (void)rule;
}

} // namespace detail

inline Bits pointwise_admissible(const RegularityRule& rule, const Representation& minrep,
                                 std::span<const Value> xs) {
  detail::require_pointwise_inputs(rule, minrep);
  if (int(xs.size()) != rule.arity) throw std::invalid_argument("tuple length must equal rule arity");
  for (Value x : xs)
    if (!minrep.universe.contains(x)) throw std::out_of_range("tuple value outside universe");
  return detail::pointwise_admissible_unchecked(rule, minrep, xs);
}

inline bool satisfies_rule_pointwise(const RegularityRule& rule, const Representation& minrep,
                                     const ConnectiveTable& t) {
  detail::require_pointwise_inputs(rule, minrep);
  require_same_universe(minrep.universe, t.universe);
  if (t.arity != rule.arity) throw std::invalid_argument("table arity must equal rule arity");
  std::array<Value, 8> xs{};
  for (std::size_t idx = 0; idx < t.outputs.size(); ++idx) {
    decode_cell(idx, t.universe.n_values, t.arity, xs.data());
    Bits adm = detail::pointwise_admissible_unchecked(rule, minrep, {xs.data(), std::size_t(t.arity)});
    if (!test_bit(adm, t.outputs[idx])) return false;
  }
  return true;
}

enum class RuleSide { premise, conclusion, both };

// Direct full-quantification check of the rule against the extensional
// relation: no minimality assumption, quantifies over every (gamma, delta)
// pair and every input tuple. This is the independent oracle for the
// pointwise compiler. The side parameter restricts the check to one of the
// two biconditionals.
inline bool satisfies_rule_oracle(const RegularityRule& rule, const ExtRelation& e,
                                  const ConnectiveTable& t, RuleSide side = RuleSide::both) {
  require_same_universe(e.universe(), t.universe);
  if (t.arity != rule.arity) throw std::invalid_argument("table arity must equal rule arity");
  const Universe& u = e.universe();
  int nsets = u.subset_count();
  bool check_p = side != RuleSide::conclusion;
  bool check_c = side != RuleSide::premise;
  std::array<Value, 8> xs{};
  std::vector<std::pair<Bits, Bits>> prem, conc;
  for (std::size_t idx = 0; idx < t.outputs.size(); ++idx) {
    decode_cell(idx, u.n_values, t.arity, xs.data());
    std::span<const Value> tup{xs.data(), std::size_t(t.arity)};
    Bits out = bit(t.outputs[idx]);
    prem.clear();
    conc.clear();
    for (const auto& pr : rule.premise_side)
      prem.emplace_back(arg_values(pr.bp, tup), arg_values(pr.bc, tup));
    for (const auto& pr : rule.conclusion_side)
      conc.emplace_back(arg_values(pr.bp, tup), arg_values(pr.bc, tup));
    for (Bits g = 0; g < Bits(nsets); ++g)
      for (Bits d = 0; d < Bits(nsets); ++d) {
        if (check_p) {
          bool rhs_p = true;
          for (const auto& [gp, dp] : prem)
            if (!e.holds(g | gp, dp | d)) {
              rhs_p = false;
              break;
            }
          if (e.holds(g | out, d) != rhs_p) return false;
        }
        if (check_c) {
          bool rhs_c = true;
          for (const auto& [gp, dp] : conc)
            if (!e.holds(g | gp, dp | d)) {
              rhs_c = false;
              break;
            }
          if (e.holds(g, out | d) != rhs_c) return false;
        }
      }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Single-conclusion variants of the conditional rules.
// ---------------------------------------------------------------------------

enum class ScVariant { deduction, premise, premise_rtl };

inline std::optional<ScVariant> parse_sc_variant(const std::string& s) {
  if (s == "sc_deduction") return ScVariant::deduction;
  if (s == "sc_premise") return ScVariant::premise;
  if (s == "sc_premise_rtl") return ScVariant::premise_rtl;
  return std::nullopt;
}

inline bool single_conclusion_check(ScVariant variant, const ExtRelation& e,
                                    const ConnectiveTable& t) {
  require_same_universe(e.universe(), t.universe);
  if (t.arity != 2) throw std::invalid_argument("single-conclusion checks take a binary table");
  const Universe& u = e.universe();
  int nsets = u.subset_count();
  for (Value a = 0; a < u.n_values; ++a)
    for (Value b = 0; b < u.n_values; ++b) {
      Bits ab = bit(t.at2(a, b));
      for (Bits g = 0; g < Bits(nsets); ++g) {
        switch (variant) {
          case ScVariant::deduction:
            if (e.holds(g | bit(a), bit(b)) != e.holds(g, ab)) return false;
            break;
          case ScVariant::premise:
            if (e.holds(g | ab, 0) != (e.holds(g | bit(b), 0) && e.holds(g, bit(a)))) return false;
            break;
          case ScVariant::premise_rtl:
            if (e.holds(g | bit(b), 0) && e.holds(g, bit(a)) && !e.holds(g | ab, 0)) return false;
            break;
        }
      }
    }
  return true;
}

} // namespace mvlog
