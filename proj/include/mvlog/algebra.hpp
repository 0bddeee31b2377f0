#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "mvlog/enumerate.hpp"
#include "mvlog/relation.hpp"
#include "mvlog/rules.hpp"

namespace mvlog {

// ---------------------------------------------------------------------------
// Algebraic existence conditions, evaluated on the pooled designated sets of
// a minimal representation. The pool is the deduplicated list of all premise
// and conclusion sets; a value's "pattern" is the subset of pooled sets it
// belongs to.
// ---------------------------------------------------------------------------

inline std::vector<Bits> pooled_designated_sets(const Representation& minrep) {
  std::vector<Bits> pool;
  for (const auto& m : minrep.members) {
    pool.push_back(m.dp.bits);
    pool.push_back(m.dc.bits);
  }
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  return pool;
}

inline Bits membership_pattern(const std::vector<Bits>& pool, Value x) {
  Bits pat = 0;
  for (std::size_t i = 0; i < pool.size(); ++i)
    if (test_bit(pool[i], x)) pat |= bit(int(i));
  return pat;
}

// For all x, y there must be a z belonging exactly to the sets x or y
// belongs to.
inline bool disjunction_compatible(const Universe& u, const std::vector<Bits>& pool) {
  if (pool.size() > 20) throw std::invalid_argument("pool too large for pattern search");
  std::vector<Bits> pat(std::size_t(u.n_values));
  for (Value v = 0; v < u.n_values; ++v) pat[std::size_t(v)] = membership_pattern(pool, v);
  for (Value x = 0; x < u.n_values; ++x)
    for (Value y = x; y < u.n_values; ++y) {
      Bits want = pat[std::size_t(x)] | pat[std::size_t(y)];
      if (std::find(pat.begin(), pat.end(), want) == pat.end()) return false;
    }
  return true;
}

// Same with intersections of patterns.
inline bool conjunction_compatible(const Universe& u, const std::vector<Bits>& pool) {
  if (pool.size() > 20) throw std::invalid_argument("pool too large for pattern search");
  std::vector<Bits> pat(std::size_t(u.n_values));
  for (Value v = 0; v < u.n_values; ++v) pat[std::size_t(v)] = membership_pattern(pool, v);
  for (Value x = 0; x < u.n_values; ++x)
    for (Value y = x; y < u.n_values; ++y) {
      Bits want = pat[std::size_t(x)] & pat[std::size_t(y)];
      if (std::find(pat.begin(), pat.end(), want) == pat.end()) return false;
    }
  return true;
}

struct DcVerdict {
  bool dc1 = false;
  bool dc2 = false;
};

// DC1: every pooled set has a private value or sits strictly inside another
// pooled set. DC2: every nonempty sub-collection S has a value x with
// x in D_i exactly when some member of S is included in D_i.
inline DcVerdict dc_check(const Universe& u, const std::vector<Bits>& pool) {
  if (pool.size() > 20)
    throw std::invalid_argument("dc_check iterates 2^pool sub-collections; pool too large");
  std::vector<Bits> pat(std::size_t(u.n_values));
  for (Value v = 0; v < u.n_values; ++v) pat[std::size_t(v)] = membership_pattern(pool, v);

  DcVerdict out;
  out.dc1 = true;
  for (std::size_t i = 0; i < pool.size() && out.dc1; ++i) {
    bool private_value = std::find(pat.begin(), pat.end(), bit(int(i))) != pat.end();
    bool included = false;
    for (std::size_t j = 0; j < pool.size() && !included; ++j)
      if (j != i && proper_subset(pool[i], pool[j])) included = true;
    out.dc1 = private_value || included;
  }

  out.dc2 = true;
  Bits nsub = Bits{1} << pool.size();
  for (Bits s = 1; s < nsub && out.dc2; ++s) {
    Bits want = 0;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      bool covered = false;
      for_each_bit(s, [&](int j) {
        if (subset(pool[std::size_t(j)], pool[i])) covered = true;
      });
      if (covered) want |= bit(int(i));
    }
    out.dc2 = std::find(pat.begin(), pat.end(), want) != pat.end();
  }
  return out;
}

struct NegationNecessity {
  bool n1 = false;
  bool n2 = false;
};

// N1: no inclusion between two distinct premise sets nor two distinct
// conclusion sets. N2: inclusions across the premise/conclusion split are
// mirrored between the paired members.
inline NegationNecessity negation_necessity(const Representation& minrep) {
  if (!is_dominance_antichain(minrep))
    throw std::invalid_argument("negation-necessity requires a dominance-minimal representation");
  const auto& ms = minrep.members;
  NegationNecessity out;
  out.n1 = true;
  for (std::size_t i = 0; i < ms.size() && out.n1; ++i)
    for (std::size_t j = 0; j < ms.size() && out.n1; ++j) {
      if (i == j) continue;
      if (subset(ms[i].dp.bits, ms[j].dp.bits)) out.n1 = false;
      if (subset(ms[i].dc.bits, ms[j].dc.bits)) out.n1 = false;
    }
  out.n2 = true;
  for (std::size_t i = 0; i < ms.size() && out.n2; ++i)
    for (std::size_t j = 0; j < ms.size() && out.n2; ++j) {
      if (subset(ms[i].dp.bits, ms[j].dc.bits) && !subset(ms[j].dp.bits, ms[i].dc.bits)) out.n2 = false;
      if (subset(ms[i].dc.bits, ms[j].dp.bits) && !subset(ms[j].dc.bits, ms[i].dp.bits)) out.n2 = false;
    }
  return out;
}

struct AlgebraVerdict {
  bool disjunction_compatible = false;
  bool conjunction_compatible = false;
  bool dc1 = false;
  bool dc2 = false;
  bool n1 = false;
  bool n2 = false;
  bool conditional_decision = false; // dc1 && dc2 && n1 && n2
};

inline AlgebraVerdict algebra_verdict(const Representation& minrep) {
  const Universe& u = minrep.universe;
  auto pool = pooled_designated_sets(minrep);
  AlgebraVerdict v;
  v.disjunction_compatible = disjunction_compatible(u, pool);
  v.conjunction_compatible = conjunction_compatible(u, pool);
  auto dc = dc_check(u, pool);
  v.dc1 = dc.dc1;
  v.dc2 = dc.dc2;
  auto nn = negation_necessity(minrep);
  v.n1 = nn.n1;
  v.n2 = nn.n2;
  v.conditional_decision = v.dc1 && v.dc2 && v.n1 && v.n2;
  return v;
}

// Existence decision for the conditional without any search. For N <= 4 the
// verdict is additionally evaluated on every minimal representation found by
// exhaustive search and any disagreement is an engine bug.
inline bool decide_conditional(const ExtRelation& ext, const Representation& minrep) {
  AlgebraVerdict v = algebra_verdict(minimal_representation(minrep));
  if (ext.universe().n_values <= 4) {
    auto reps = all_minimal_representations(ext);
    for (const auto& r : reps) {
      AlgebraVerdict w = algebra_verdict(minimal_representation(r));
      if (w.conditional_decision != v.conditional_decision)
        throw std::logic_error("minimal representations disagree on the conditional decision");
    }
  }
  return v.conditional_decision;
}

// ---------------------------------------------------------------------------
// Constructive recipes.
// ---------------------------------------------------------------------------

// The conditional every mixed relation admits. Each value is classed by its
// (in Dp, in Dc) pattern; the output cell takes the least value of the
// pattern class the conditional rules demand there:
//   (a -> b) in Dp  iff  a in Dc implies b in Dp
//   (a -> b) in Dc  iff  a in Dp implies b in Dc
inline ConnectiveTable construct_mixed_conditional(const MixedRelation& m) {
  const Universe& u = m.universe;
  std::vector<Value> class_rep(4, -1); // index: in_dp | in_dc<<1
  for (Value v = u.n_values - 1; v >= 0; --v) {
    int cls = (test_bit(m.dp.bits, v) ? 1 : 0) | (test_bit(m.dc.bits, v) ? 2 : 0);
    class_rep[std::size_t(cls)] = v; // descending loop leaves the least index
  }
  std::vector<Value> outputs;
  outputs.reserve(table_cells(u.n_values, 2));
  for (Value a = 0; a < u.n_values; ++a)
    for (Value b = 0; b < u.n_values; ++b) {
      bool in_dp = !test_bit(m.dc.bits, a) || test_bit(m.dp.bits, b);
      bool in_dc = !test_bit(m.dp.bits, a) || test_bit(m.dc.bits, b);
      Value rep = class_rep[std::size_t((in_dp ? 1 : 0) | (in_dc ? 2 : 0))];
      if (rep < 0) throw std::logic_error("required value class is empty: engine bug");
      outputs.push_back(rep);
    }
  return ConnectiveTable::make(u, 2, std::move(outputs));
}

struct DerivedConnectives {
  ConnectiveTable negation;
  ConnectiveTable disjunction;
  ConnectiveTable conjunction;
};

// not x      = x -> 0
// x or y     = (x -> 0) -> y
// x and y    = (x -> (y -> 0)) -> 0
inline DerivedConnectives derive_from_conditional(const ExtRelation& ext,
                                                  const ConnectiveTable& cond) {
  if (cond.arity != 2) throw std::invalid_argument("conditional table must be binary");
  if (!satisfies_rule_oracle(library_rule("conditional"), ext, cond))
    throw std::invalid_argument("table does not satisfy the conditional rule for this relation");
  const Universe& u = cond.universe;
  Value zero = u.falsum();
  std::vector<Value> neg(std::size_t(u.n_values));
  for (Value x = 0; x < u.n_values; ++x) neg[std::size_t(x)] = cond.at2(x, zero);
  std::vector<Value> disj, conj;
  for (Value x = 0; x < u.n_values; ++x)
    for (Value y = 0; y < u.n_values; ++y) {
      disj.push_back(cond.at2(cond.at2(x, zero), y));
      conj.push_back(cond.at2(cond.at2(x, cond.at2(y, zero)), zero));
    }
  return DerivedConnectives{ConnectiveTable::make(u, 1, std::move(neg)),
                            ConnectiveTable::make(u, 2, std::move(disj)),
                            ConnectiveTable::make(u, 2, std::move(conj))};
}

// C+ construction: folds the conclusion side of a classical rule through the
// relation's conditional/conjunction/disjunction witnesses,
//   C+(x) = AND over (Bp,Bc) of [ AND{x_i : i in Bp} -> OR{x_i : i in Bc} ].
// Folds run left to right over ascending indices; empty ANDs are verum,
// empty ORs are falsum.
inline ConnectiveTable construct_cplus(const RegularityRule& classical_rule,
                                       const ConnectiveTable& cond, const ConnectiveTable& conj,
                                       const ConnectiveTable& disj) {
  const Universe& u = cond.universe;
  require_same_universe(u, conj.universe);
  require_same_universe(u, disj.universe);
  if (cond.arity != 2 || conj.arity != 2 || disj.arity != 2)
    throw std::invalid_argument("witness tables must be binary");

  auto fold = [&](const ConnectiveTable& op, Bits idxs, std::span<const Value> xs,
                  Value empty) {
    Value acc = empty;
    bool first = true;
    for_each_bit(idxs, [&](int i) {
      Value v = xs[std::size_t(i)];
      acc = first ? v : op.at2(acc, v);
      first = false;
    });
    return acc;
  };

  int n = classical_rule.arity;
  std::size_t cells = table_cells(u.n_values, n);
  std::vector<Value> outputs(cells);
  std::array<Value, 8> xs{};
  for (std::size_t idx = 0; idx < cells; ++idx) {
    decode_cell(idx, u.n_values, n, xs.data());
    std::span<const Value> tup{xs.data(), std::size_t(n)};
    Value acc = u.verum();
    bool first = true;
    for (const auto& pr : classical_rule.conclusion_side) {
      Value antecedent = fold(conj, pr.bp, tup, u.verum());
      Value consequent = fold(disj, pr.bc, tup, u.falsum());
      Value term = cond.at2(antecedent, consequent);
      acc = first ? term : conj.at2(acc, term);
      first = false;
    }
    outputs[idx] = acc;
  }
  return ConnectiveTable::make(u, n, std::move(outputs));
}

} // namespace mvlog
