#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "mvlog/bits.hpp"
#include "mvlog/universe.hpp"

namespace mvlog {

// ---------------------------------------------------------------------------
// Designated sets and mixed consequence relations.
//
// A designated set always contains verum and never falsum. A mixed relation
// is a (premise set, conclusion set) pair; it relates gamma to delta unless
// gamma lies inside the premise set while delta misses the conclusion set.
// ---------------------------------------------------------------------------

struct DesignatedSet {
  Bits bits = 0;

  static bool valid(const Universe& u, Bits b) {
    return subset(b, u.all_values()) && test_bit(b, u.verum()) && !test_bit(b, u.falsum());
  }
  static DesignatedSet make(const Universe& u, Bits b) {
    if (!valid(u, b))
      throw std::invalid_argument("designated set must contain 1, exclude 0 and fit the universe");
    return DesignatedSet{b};
  }

  bool operator==(const DesignatedSet& o) const { return bits == o.bits; }
  auto operator<=>(const DesignatedSet& o) const { return bits <=> o.bits; }
};

struct MixedRelation {
  Universe universe;
  DesignatedSet dp; // premise-designated values
  DesignatedSet dc; // conclusion-designated values

  static MixedRelation make(const Universe& u, Bits dp_bits, Bits dc_bits) {
    return MixedRelation{u, DesignatedSet::make(u, dp_bits), DesignatedSet::make(u, dc_bits)};
  }

  bool pure() const { return dp.bits == dc.bits; }

  bool operator==(const MixedRelation& o) const {
    return universe == o.universe && dp == o.dp && dc == o.dc;
  }
  bool operator<(const MixedRelation& o) const {
    if (dp.bits != o.dp.bits) return dp.bits < o.dp.bits;
    return dc.bits < o.dc.bits;
  }
};

inline bool holds_mixed(const MixedRelation& m, Bits gamma, Bits delta) {
  require_value_set(m.universe, gamma);
  require_value_set(m.universe, delta);
  return !(subset(gamma, m.dp.bits) && (delta & m.dc.bits) == 0);
}

// Member j makes member k redundant: everything k rules out, j rules out too.
inline bool dominates(const MixedRelation& j, const MixedRelation& k) {
  return subset(k.dp.bits, j.dp.bits) && subset(j.dc.bits, k.dc.bits);
}

// A nonempty list of mixed relations over one universe, read as their
// intersection.
struct Representation {
  Universe universe;
  std::vector<MixedRelation> members;

  static Representation make(const Universe& u, std::vector<MixedRelation> ms) {
    if (ms.empty()) throw std::invalid_argument("representation must be nonempty");
    for (const auto& m : ms) require_same_universe(u, m.universe);
    return Representation{u, std::move(ms)};
  }

  bool operator==(const Representation& o) const {
    return universe == o.universe && members == o.members;
  }
};

// ---------------------------------------------------------------------------
// ExtRelation: the extensional truth-relation, a 2^N x 2^N bit matrix over
// (gamma, delta) pairs. This is the canonical identity of a consequence
// relation; two representations denote the same relation iff their
// extensions coincide.
// ---------------------------------------------------------------------------

class ExtRelation {
public:
  explicit ExtRelation(Universe u, bool fill = false) : u_(u) {
    std::size_t nbits = std::size_t(1) << (2 * u.n_values);
    words_.assign((nbits + 63) / 64, fill ? ~std::uint64_t{0} : 0);
    trim();
  }

  const Universe& universe() const { return u_; }

  bool holds(Bits gamma, Bits delta) const {
    std::size_t i = index(gamma, delta);
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }

  void set(Bits gamma, Bits delta, bool v) {
    std::size_t i = index(gamma, delta);
    if (v)
      words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    else
      words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  void intersect_with(const ExtRelation& o) {
    require_same_universe(u_, o.u_);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
  }

  bool operator==(const ExtRelation& o) const {
    return u_ == o.u_ && words_ == o.words_;
  }

  // Hex serialization: bits in increasing (gamma*2^N + delta) order, four per
  // nibble with the lowest index as the nibble's high bit. String comparison
  // of two serializations therefore orders extensions by their bit sequence.
  std::string to_hex() const {
    std::size_t nbits = total_bits();
    std::string out;
    out.reserve((nbits + 3) / 4);
    static const char* digits = "0123456789abcdef";
    for (std::size_t i = 0; i < nbits; i += 4) {
      int nib = 0;
      for (std::size_t j = 0; j < 4 && i + j < nbits; ++j)
        nib |= bit_at(i + j) << (3 - j);
      out.push_back(digits[nib]);
    }
    return out;
  }

  std::size_t hash() const {
    std::uint64_t h = 1469598103934665603ull ^ std::uint64_t(u_.n_values);
    for (auto w : words_) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return std::size_t(h);
  }

  // The relation obtained by renaming value i to perm[i] everywhere.
  // perm must be a bijection on 0..N-1 fixing falsum and verum.
  ExtRelation relabeled(std::span<const Value> perm) const {
    ExtRelation out(u_);
    int nsets = u_.subset_count();
    for (Bits g = 0; g < Bits(nsets); ++g) {
      Bits pg = apply_perm(perm, g);
      for (Bits d = 0; d < Bits(nsets); ++d)
        if (holds(g, d)) out.set(pg, apply_perm(perm, d), true);
    }
    return out;
  }

  static Bits apply_perm(std::span<const Value> perm, Bits s) {
    Bits out = 0;
    for_each_bit(s, [&](int i) { out |= bit(perm[std::size_t(i)]); });
    return out;
  }

private:
  std::size_t index(Bits gamma, Bits delta) const {
    return (std::size_t(gamma) << u_.n_values) | delta;
  }
  std::size_t total_bits() const { return std::size_t(1) << (2 * u_.n_values); }
  int bit_at(std::size_t i) const { return int((words_[i >> 6] >> (i & 63)) & 1u); }
  void trim() {
    // Mask off unused tail bits so equality and hashing stay exact.
    std::size_t nbits = total_bits();
    if (nbits < 64) words_[0] &= (std::uint64_t{1} << nbits) - 1;
  }

  Universe u_;
  std::vector<std::uint64_t> words_;
};

struct ExtRelationHash {
  std::size_t operator()(const ExtRelation& e) const { return e.hash(); }
};

// ---------------------------------------------------------------------------
// Kernel operations.
// ---------------------------------------------------------------------------

inline ExtRelation extension(const MixedRelation& m) {
  ExtRelation e(m.universe, true);
  int nsets = m.universe.subset_count();
  for (Bits g = 0; g < Bits(nsets); ++g) {
    if (!subset(g, m.dp.bits)) continue;
    for (Bits d = 0; d < Bits(nsets); ++d)
      if ((d & m.dc.bits) == 0) e.set(g, d, false);
  }
  return e;
}

inline ExtRelation extension(const Representation& r) {
  if (r.members.empty()) throw std::invalid_argument("representation must be nonempty");
  ExtRelation e = extension(r.members.front());
  for (std::size_t i = 1; i < r.members.size(); ++i) e.intersect_with(extension(r.members[i]));
  return e;
}

// Deduplicates, drops every member dominated by another, sorts canonically.
// The surviving antichain has the same extension as the input.
inline Representation minimal_representation(const Representation& r) {
  std::vector<MixedRelation> ms = r.members;
  std::sort(ms.begin(), ms.end());
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
  std::vector<MixedRelation> kept;
  for (std::size_t k = 0; k < ms.size(); ++k) {
    bool redundant = false;
    for (std::size_t j = 0; j < ms.size() && !redundant; ++j)
      if (j != k && dominates(ms[j], ms[k])) redundant = true;
    if (!redundant) kept.push_back(ms[k]);
  }
  return Representation::make(r.universe, std::move(kept));
}

inline bool is_dominance_antichain(const Representation& r) {
  for (std::size_t j = 0; j < r.members.size(); ++j)
    for (std::size_t k = 0; k < r.members.size(); ++k)
      if (j != k && dominates(r.members[j], r.members[k])) return false;
  return true;
}

inline bool is_reflexive(const ExtRelation& e) {
  for (Value x = 0; x < e.universe().n_values; ++x)
    if (!e.holds(bit(x), bit(x))) return false;
  return true;
}

// True when y1 and y2 can be swapped in any premise or conclusion set
// without changing whether the relation holds.
inline bool role_equivalent(const ExtRelation& e, Value y1, Value y2) {
  const Universe& u = e.universe();
  if (!u.contains(y1) || !u.contains(y2))
    throw std::invalid_argument("value outside universe");
  if (y1 == y2) return true;
  int nsets = u.subset_count();
  for (Bits g = 0; g < Bits(nsets); ++g)
    for (Bits d = 0; d < Bits(nsets); ++d) {
      if (e.holds(g | bit(y1), d) != e.holds(g | bit(y2), d)) return false;
      if (e.holds(g, d | bit(y1)) != e.holds(g, d | bit(y2))) return false;
    }
  return true;
}

// {x : holds(emptyset, {x})}
inline Bits conclusion_tautologies(const ExtRelation& e) {
  Bits out = 0;
  for (Value x = 0; x < e.universe().n_values; ++x)
    if (e.holds(0, bit(x))) out |= bit(x);
  return out;
}

// {x : holds({x}, emptyset)}
inline Bits premise_contradictions(const ExtRelation& e) {
  Bits out = 0;
  for (Value x = 0; x < e.universe().n_values; ++x)
    if (e.holds(bit(x), 0)) out |= bit(x);
  return out;
}

// Checks the two structural ExtRelation invariants: upward monotonicity and
// automatic validity when falsum sits among premises or verum among
// conclusions.
inline bool well_formed(const ExtRelation& e) {
  const Universe& u = e.universe();
  int nsets = u.subset_count();
  for (Bits g = 0; g < Bits(nsets); ++g)
    for (Bits d = 0; d < Bits(nsets); ++d) {
      if ((test_bit(g, u.falsum()) || test_bit(d, u.verum())) && !e.holds(g, d)) return false;
      if (!e.holds(g, d)) continue;
      for (int i = 0; i < u.n_values; ++i) {
        if (!e.holds(g | bit(i), d)) return false;
        if (!e.holds(g, d | bit(i))) return false;
      }
    }
  return true;
}

inline std::string to_string(const MixedRelation& m) {
  auto names = [&](Bits s) {
    std::string out;
    bool first = true;
    for_each_bit(s, [&](int i) {
      if (!first) out += ",";
      out += m.universe.value_name(i);
      first = false;
    });
    return out;
  };
  return "({" + names(m.dp.bits) + "},{" + names(m.dc.bits) + "})";
}

inline std::string to_string(const Representation& r) {
  std::string out;
  for (std::size_t i = 0; i < r.members.size(); ++i) {
    if (i) out += " & ";
    out += to_string(r.members[i]);
  }
  return out;
}

} // namespace mvlog
