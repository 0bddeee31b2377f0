#pragma once

#include <bit>
#include <cstdint>

namespace mvlog {

// Subsets of truth values (and of rule-argument indices) are plain bitmasks.
// Bit i stands for value index i; index 0 is falsum, the top index is verum.
using Bits = std::uint32_t;

inline bool subset(Bits a, Bits b) { return (a & ~b) == 0; }

inline bool proper_subset(Bits a, Bits b) { return a != b && subset(a, b); }

inline int popcount(Bits a) { return std::popcount(a); }

inline bool test_bit(Bits a, int i) { return (a >> i) & 1u; }

inline Bits bit(int i) { return Bits{1} << i; }

// Calls f(i) for every set bit of a, in increasing index order.
template <typename F>
inline void for_each_bit(Bits a, F&& f) {
  while (a != 0) {
    int i = std::countr_zero(a);
    f(i);
    a &= a - 1;
  }
}

} // namespace mvlog
