#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mvlog/enumerate.hpp"
#include "mvlog/relation.hpp"
#include "mvlog/rules.hpp"

namespace mvlog {

// Connective counts are products over cells of admissible-set sizes and
// overflow 64 bits already at N=4, arity 3. Unsigned, grow-only arithmetic
// is all that is needed.
class BigUint {
public:
  BigUint(std::uint64_t v = 0) {
    while (v != 0) {
      limbs_.push_back(std::uint32_t(v & 0xffffffffu));
      v >>= 32;
    }
  }

  void mul_small(std::uint32_t m) {
    if (m == 0) {
      limbs_.clear();
      return;
    }
    if (limbs_.empty()) return;
    std::uint64_t carry = 0;
    for (auto& l : limbs_) {
      std::uint64_t t = std::uint64_t(l) * m + carry;
      l = std::uint32_t(t & 0xffffffffu);
      carry = t >> 32;
    }
    while (carry != 0) {
      limbs_.push_back(std::uint32_t(carry & 0xffffffffu));
      carry >>= 32;
    }
  }

  bool is_zero() const { return limbs_.empty(); }

  bool operator==(const BigUint&) const = default;
  bool operator==(std::uint64_t v) const { return *this == BigUint(v); }

  std::string to_string() const {
    if (limbs_.empty()) return "0";
    std::vector<std::uint32_t> work(limbs_.rbegin(), limbs_.rend());
    std::string out;
    while (!work.empty()) {
      std::uint64_t rem = 0;
      std::vector<std::uint32_t> next;
      for (std::uint32_t limb : work) {
        std::uint64_t cur = (rem << 32) | limb;
        std::uint32_t q = std::uint32_t(cur / 1000000000u);
        rem = cur % 1000000000u;
        if (!next.empty() || q != 0) next.push_back(q);
      }
      std::string chunk = std::to_string(rem);
      if (!next.empty()) chunk.insert(0, 9 - chunk.size(), '0');
      out.insert(0, chunk);
      work = std::move(next);
    }
    return out;
  }

private:
  std::vector<std::uint32_t> limbs_; // little-endian base 2^32
};

// ---------------------------------------------------------------------------
// Per-relation connective discovery.
// ---------------------------------------------------------------------------

struct ConnectiveReport {
  std::string rule_name; // empty for ad-hoc rules
  RegularityRule rule;
  bool exists = false;
  BigUint count;
  std::optional<ConnectiveTable> witness; // least admissible value per cell
  std::vector<Bits> cell_admissible;      // flat cell order, as in ConnectiveTable
};

inline ConnectiveReport find_connectives(const RegularityRule& rule, const ExtRelation& ext,
                                         const Representation& minrep, std::string rule_name = "",
                                         int max_arity = 3) {
  (void)ext;
  if (rule.arity > max_arity)
    throw std::invalid_argument("rule arity exceeds the configured search bound");
  detail::require_pointwise_inputs(rule, minrep);
  const Universe& u = minrep.universe;

  ConnectiveReport rep;
  rep.rule_name = std::move(rule_name);
  rep.rule = rule;
  rep.exists = true;
  rep.count = BigUint(1);

  std::size_t cells = table_cells(u.n_values, rule.arity);
  rep.cell_admissible.resize(cells);
  std::vector<Value> witness(cells, u.falsum());
  std::array<Value, 8> xs{};
  for (std::size_t idx = 0; idx < cells; ++idx) {
    decode_cell(idx, u.n_values, rule.arity, xs.data());
    Bits adm = detail::pointwise_admissible_unchecked(rule, minrep, {xs.data(), std::size_t(rule.arity)});
    rep.cell_admissible[idx] = adm;
    rep.count.mul_small(std::uint32_t(popcount(adm)));
    if (adm == 0)
      rep.exists = false;
    else
      witness[idx] = Value(std::countr_zero(adm));
  }
  if (rep.exists) rep.witness = ConnectiveTable::make(u, rule.arity, std::move(witness));
  return rep;
}

// True when every cell of t picks from the report's admissible sets, i.e.
// t is itself a solution of the searched rule.
inline bool report_admits(const ConnectiveReport& rep, const ConnectiveTable& t) {
  if (t.outputs.size() != rep.cell_admissible.size()) return false;
  for (std::size_t i = 0; i < t.outputs.size(); ++i)
    if (!test_bit(rep.cell_admissible[i], t.outputs[i])) return false;
  return true;
}

struct ConnectiveProfile {
  ConnectiveReport conjunction;
  ConnectiveReport disjunction;
  ConnectiveReport negation;
  ConnectiveReport conditional;
};

inline ConnectiveProfile connective_profile(const ExtRelation& ext, const Representation& minrep) {
  ConnectiveProfile p{
      find_connectives(library_rule("conjunction"), ext, minrep, "conjunction"),
      find_connectives(library_rule("disjunction"), ext, minrep, "disjunction"),
      find_connectives(library_rule("negation"), ext, minrep, "negation"),
      find_connectives(library_rule("conditional"), ext, minrep, "conditional"),
  };
  if (p.conditional.exists &&
      !(p.negation.exists && p.disjunction.exists && p.conjunction.exists))
    throw std::logic_error("conditional without negation/disjunction/conjunction: engine bug");
  return p;
}

// ---------------------------------------------------------------------------
// Canonical 4-valued synthesis: under |=_{{1,#1},{1,#2}} every rule is
// realized by exactly one truth-function; each admissible set must come out
// a singleton.
// ---------------------------------------------------------------------------

inline MixedRelation canonical4_relation() {
  Universe u(4);
  return MixedRelation::make(u, bit(3) | bit(1), bit(3) | bit(2));
}

inline ConnectiveTable synthesize_canonical4(const RegularityRule& rule) {
  MixedRelation m = canonical4_relation();
  Representation minrep = Representation::make(m.universe, {m});
  ExtRelation ext = extension(m);
  ConnectiveReport rep = find_connectives(rule, ext, minrep, "", 8);
  for (Bits adm : rep.cell_admissible)
    if (popcount(adm) != 1)
      throw std::logic_error("canonical 4-valued synthesis produced a non-singleton cell: engine bug");
  return *rep.witness;
}

// ---------------------------------------------------------------------------
// Exhaustive single-conclusion search over binary tables. 3^9 candidates for
// N=3; larger universes only behind the explicit opt-in.
// ---------------------------------------------------------------------------

struct ScSearchResult {
  BigUint count;
  std::vector<ConnectiveTable> witnesses;
};

inline ScSearchResult sc_search(ScVariant variant, const ExtRelation& ext, bool force_large = false,
                                std::size_t witness_cap = 32) {
  const Universe& u = ext.universe();
  if (u.n_values > 3 && !force_large)
    throw std::invalid_argument("sc_search enumerates N^(N^2) tables; pass the opt-in flag beyond N=3");
  std::size_t cells = table_cells(u.n_values, 2);
  std::vector<Value> outputs(cells, 0);
  ScSearchResult result;
  std::uint64_t found = 0;
  for (;;) {
    ConnectiveTable t{u, 2, outputs};
    if (single_conclusion_check(variant, ext, t)) {
      ++found;
      if (result.witnesses.size() < witness_cap) result.witnesses.push_back(t);
    }
    std::size_t i = cells;
    while (i > 0 && outputs[i - 1] == u.n_values - 1) outputs[--i] = 0;
    if (i == 0) break;
    ++outputs[i - 1];
  }
  result.count = BigUint(found);
  return result;
}

} // namespace mvlog
