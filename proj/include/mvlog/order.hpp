#pragma once

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "mvlog/relation.hpp"

namespace mvlog {

// A partial order on the truth values with 0 as minimum and 1 as maximum.
// Row x of leq holds the values ranked at or above x.
struct TruthOrder {
  Universe universe;
  std::vector<Bits> leq; // leq[x] = { y : x <= y }

  static TruthOrder make(const Universe& u, std::vector<Bits> rows) {
    if (rows.size() != std::size_t(u.n_values))
      throw std::invalid_argument("order must cover every value");
    TruthOrder o{u, std::move(rows)};
    for (Value x = 0; x < u.n_values; ++x) {
      require_value_set(u, o.leq[std::size_t(x)]);
      if (!o.le(x, x)) throw std::invalid_argument("order must be reflexive");
      if (!o.le(u.falsum(), x) || !o.le(x, u.verum()))
        throw std::invalid_argument("0 must be the minimum and 1 the maximum");
    }
    for (Value x = 0; x < u.n_values; ++x)
      for (Value y = 0; y < u.n_values; ++y) {
        if (x != y && o.le(x, y) && o.le(y, x))
          throw std::invalid_argument("order must be antisymmetric");
        if (o.le(x, y) && !subset(o.leq[std::size_t(y)], o.leq[std::size_t(x)]))
          throw std::invalid_argument("order must be transitive");
      }
    return o;
  }

  bool le(Value x, Value y) const { return test_bit(leq[std::size_t(x)], y); }

  bool operator==(const TruthOrder&) const = default;
};

// Build from strict pairs among indeterminates; the 0/1 bounds come free.
// Throws if the transitive closure violates antisymmetry.
inline TruthOrder order_from_pairs(const Universe& u,
                                   const std::vector<std::pair<Value, Value>>& below) {
  std::vector<Bits> rows(std::size_t(u.n_values));
  for (Value x = 0; x < u.n_values; ++x)
    rows[std::size_t(x)] = bit(x) | bit(u.verum());
  for (Value x = 0; x < u.n_values; ++x) rows[0] |= bit(x);
  for (auto [x, y] : below) {
    if (!u.contains(x) || !u.contains(y)) throw std::invalid_argument("order pair outside universe");
    rows[std::size_t(x)] |= bit(y);
  }
  for (int pass = 0; pass < u.n_values; ++pass)
    for (Value x = 0; x < u.n_values; ++x)
      for_each_bit(rows[std::size_t(x)], [&](int y) { rows[std::size_t(x)] |= rows[std::size_t(y)]; });
  return TruthOrder::make(u, std::move(rows));
}

// "0<#1<#2<1" chains, or comma-separated chains ("0<#1,0<#2,#1<1,#2<1").
inline TruthOrder parse_order(const Universe& u, const std::string& spec) {
  std::vector<std::pair<Value, Value>> below;
  std::stringstream chains(spec);
  std::string chain;
  while (std::getline(chains, chain, ',')) {
    std::vector<Value> vals;
    std::stringstream parts(chain);
    std::string part;
    while (std::getline(parts, part, '<')) {
      part.erase(std::remove(part.begin(), part.end(), ' '), part.end());
      auto v = u.parse_value(part);
      if (!v) throw std::invalid_argument("unknown value name in order spec: " + part);
      vals.push_back(*v);
    }
    for (std::size_t i = 0; i + 1 < vals.size(); ++i) below.emplace_back(vals[i], vals[i + 1]);
  }
  return order_from_pairs(u, below);
}

// Premises must sit globally below conclusions:
// holds(gamma, delta) iff some x in gamma is <= some y in delta,
// or 0 in gamma, or 1 in delta.
inline ExtRelation order_relation(const TruthOrder& o) {
  const Universe& u = o.universe;
  ExtRelation e(u);
  int nsets = u.subset_count();
  for (Bits g = 0; g < Bits(nsets); ++g) {
    Bits reachable = 0;
    for_each_bit(g, [&](int x) { reachable |= o.leq[std::size_t(x)]; });
    for (Bits d = 0; d < Bits(nsets); ++d) {
      bool v = test_bit(g, u.falsum()) || test_bit(d, u.verum()) || (reachable & d) != 0;
      if (v) e.set(g, d, true);
    }
  }
  return e;
}

// All pure members (D, D) where D is an upset containing 1 and not 0. Their
// intersection is the order relation.
inline Representation upset_representation(const TruthOrder& o) {
  const Universe& u = o.universe;
  std::vector<MixedRelation> members;
  int nsets = u.subset_count();
  for (Bits d = 0; d < Bits(nsets); ++d) {
    if (!test_bit(d, u.verum()) || test_bit(d, u.falsum())) continue;
    bool upset = true;
    for_each_bit(d, [&](int x) {
      if (!subset(o.leq[std::size_t(x)], d)) upset = false;
    });
    if (upset) members.push_back(MixedRelation::make(u, d, d));
  }
  return Representation::make(u, std::move(members));
}

enum class OrderKind { total, degenerate, other };

struct OrderClass {
  OrderKind kind = OrderKind::other;
  bool also_degenerate = false; // set when total and degenerate coincide (<= 1 indeterminate)
};

inline OrderClass classify_order(const TruthOrder& o) {
  const Universe& u = o.universe;
  bool total = true, degenerate = true;
  for (Value x = 1; x <= u.n_values - 2; ++x)
    for (Value y = x + 1; y <= u.n_values - 2; ++y) {
      bool cmp = o.le(x, y) || o.le(y, x);
      total = total && cmp;
      degenerate = degenerate && !cmp;
    }
  if (total) return OrderClass{OrderKind::total, degenerate};
  if (degenerate) return OrderClass{OrderKind::degenerate, false};
  return OrderClass{OrderKind::other, false};
}

// Every partial order on the universe (brute force over directed pairs of
// indeterminates, filtered to transitive antisymmetric relations).
inline std::vector<TruthOrder> all_truth_orders(const Universe& u) {
  int k = u.indeterminate_count();
  if (k > 4) throw std::invalid_argument("order enumeration is exhaustive and requires N <= 6");
  std::vector<std::pair<Value, Value>> pairs;
  for (Value x = 1; x <= k; ++x)
    for (Value y = 1; y <= k; ++y)
      if (x != y) pairs.emplace_back(x, y);
  std::vector<TruthOrder> out;
  for (Bits mask = 0; mask < (Bits{1} << pairs.size()); ++mask) {
    std::vector<std::pair<Value, Value>> below;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (test_bit(mask, int(i))) below.push_back(pairs[i]);
    try {
      TruthOrder o = order_from_pairs(u, below);
      if (std::find(out.begin(), out.end(), o) == out.end()) out.push_back(std::move(o));
    } catch (const std::invalid_argument&) {
      // closure broke antisymmetry; skip
    }
  }
  return out;
}

} // namespace mvlog
