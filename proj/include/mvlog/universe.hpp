#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mvlog/bits.hpp"

namespace mvlog {

using Value = int;

// An N-element set of truth values. Index 0 is "0" (falsum), index N-1 is
// "1" (verum), and indices 1..N-2 are the indeterminates "#1".."#(N-2)".
struct Universe {
  int n_values = 2;

  explicit Universe(int n = 2) : n_values(n) {
    if (n < 2 || n > 16)
      throw std::invalid_argument("universe size must be between 2 and 16");
  }

  Value falsum() const { return 0; }
  Value verum() const { return n_values - 1; }
  int indeterminate_count() const { return n_values - 2; }

  bool contains(Value v) const { return v >= 0 && v < n_values; }
  Bits all_values() const { return (Bits{1} << n_values) - 1; }
  int subset_count() const { return 1 << n_values; }

  bool operator==(const Universe& o) const { return n_values == o.n_values; }
  bool operator!=(const Universe& o) const { return !(*this == o); }

  std::string value_name(Value v) const {
    if (!contains(v)) throw std::out_of_range("value index out of universe");
    if (v == falsum()) return "0";
    if (v == verum()) return "1";
    return "#" + std::to_string(v);
  }

  std::optional<Value> parse_value(std::string_view s) const {
    if (s == "0") return falsum();
    if (s == "1") return verum();
    if (s.size() >= 2 && s[0] == '#') {
      int k = 0;
      for (char c : s.substr(1)) {
        if (c < '0' || c > '9') return std::nullopt;
        k = k * 10 + (c - '0');
      }
      if (k >= 1 && k <= indeterminate_count()) return Value{k};
    }
    return std::nullopt;
  }

  std::vector<std::string> set_names(Bits s) const {
    std::vector<std::string> out;
    for_each_bit(s, [&](int i) { out.push_back(value_name(i)); });
    return out;
  }

  // Rendering order used by truth tables and reports: 1, #1, ..., #(N-2), 0.
  std::vector<Value> display_order() const {
    std::vector<Value> out;
    out.push_back(verum());
    for (Value v = 1; v <= n_values - 2; ++v) out.push_back(v);
    out.push_back(falsum());
    return out;
  }
};

inline void require_same_universe(const Universe& a, const Universe& b) {
  if (a != b) throw std::invalid_argument("universe mismatch");
}

inline void require_value_set(const Universe& u, Bits s) {
  if (!subset(s, u.all_values()))
    throw std::invalid_argument("value set contains indices outside the universe");
}

} // namespace mvlog
