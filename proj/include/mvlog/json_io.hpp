#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "mvlog/relation.hpp"
#include "mvlog/rules.hpp"

namespace mvlog {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// Relations: a relation is a list of members, each {"dp": [names], "dc":
// [names]} with value names "0", "1", "#1", "#2", ...
// ---------------------------------------------------------------------------

inline json to_json(const MixedRelation& m) {
  return json{{"dp", m.universe.set_names(m.dp.bits)}, {"dc", m.universe.set_names(m.dc.bits)}};
}

inline json to_json(const Representation& r) {
  json members = json::array();
  for (const auto& m : r.members) members.push_back(to_json(m));
  return members;
}

inline Bits parse_value_set(const Universe& u, const json& names) {
  if (!names.is_array()) throw std::invalid_argument("value set must be a JSON array of names");
  Bits out = 0;
  for (const auto& n : names) {
    auto v = u.parse_value(n.get<std::string>());
    if (!v) throw std::invalid_argument("unknown value name: " + n.get<std::string>());
    out |= bit(*v);
  }
  return out;
}

// The universe size may be supplied; otherwise it is the smallest one
// covering every named indeterminate.
inline int infer_n_values(const json& members) {
  int max_indet = 0;
  for (const auto& m : members)
    for (const char* key : {"dp", "dc"})
      for (const auto& n : m.at(key)) {
        std::string s = n.get<std::string>();
        if (s.size() >= 2 && s[0] == '#') max_indet = std::max(max_indet, std::stoi(s.substr(1)));
      }
  return max_indet + 2;
}

inline Representation parse_representation(const json& members, std::optional<int> n_values = {}) {
  if (!members.is_array() || members.empty())
    throw std::invalid_argument("relation must be a nonempty JSON array of members");
  Universe u(n_values.value_or(infer_n_values(members)));
  std::vector<MixedRelation> ms;
  for (const auto& m : members)
    ms.push_back(MixedRelation::make(u, parse_value_set(u, m.at("dp")), parse_value_set(u, m.at("dc"))));
  return Representation::make(u, std::move(ms));
}

// ---------------------------------------------------------------------------
// Rules: {"arity": 2, "premise": [{"bp": [2], "bc": []}, ...], "conclusion":
// [...]} with 1-based argument indices.
// ---------------------------------------------------------------------------

inline json to_json(const RegularityRule& r) {
  auto side = [](const std::vector<RulePair>& pairs) {
    json out = json::array();
    for (const auto& p : pairs) {
      json bp = json::array(), bc = json::array();
      for_each_bit(p.bp, [&](int i) { bp.push_back(i + 1); });
      for_each_bit(p.bc, [&](int i) { bc.push_back(i + 1); });
      out.push_back(json{{"bp", bp}, {"bc", bc}});
    }
    return out;
  };
  return json{{"arity", r.arity}, {"premise", side(r.premise_side)}, {"conclusion", side(r.conclusion_side)}};
}

inline RegularityRule parse_rule(const json& j) {
  int arity = j.at("arity").get<int>();
  auto side = [&](const json& pairs) {
    std::vector<RulePair> out;
    for (const auto& p : pairs) {
      RulePair pair;
      for (const auto& i : p.at("bp")) pair.bp |= bit(i.get<int>() - 1);
      for (const auto& i : p.at("bc")) pair.bc |= bit(i.get<int>() - 1);
      out.push_back(pair);
    }
    return out;
  };
  return RegularityRule::make(arity, side(j.at("premise")), side(j.at("conclusion")));
}

// ---------------------------------------------------------------------------
// Tables: nested arrays, row-major with the first argument as the row, rows
// and columns in display order (1, #1, ..., #k, 0), entries value names.
// Arity 0 serializes as a bare value name.
// ---------------------------------------------------------------------------

namespace detail {

inline json table_slice(const ConnectiveTable& t, std::vector<Value>& prefix, int depth) {
  const Universe& u = t.universe;
  if (depth == t.arity) return u.value_name(t.at(prefix));
  json out = json::array();
  for (Value v : u.display_order()) {
    prefix.push_back(v);
    out.push_back(table_slice(t, prefix, depth + 1));
    prefix.pop_back();
  }
  return out;
}

inline void parse_table_slice(const json& j, const Universe& u, int arity,
                              std::vector<Value>& prefix, std::vector<Value>& outputs,
                              const ConnectiveTable& shape) {
  if (int(prefix.size()) == arity) {
    auto v = u.parse_value(j.get<std::string>());
    if (!v) throw std::invalid_argument("unknown value name in table: " + j.get<std::string>());
    outputs[shape.cell_index(prefix)] = *v;
    return;
  }
  auto order = u.display_order();
  if (!j.is_array() || j.size() != order.size())
    throw std::invalid_argument("table rows must list one entry per value");
  for (std::size_t i = 0; i < order.size(); ++i) {
    prefix.push_back(order[i]);
    parse_table_slice(j[i], u, arity, prefix, outputs, shape);
    prefix.pop_back();
  }
}

} // namespace detail

inline json to_json(const ConnectiveTable& t) {
  std::vector<Value> prefix;
  return detail::table_slice(t, prefix, 0);
}

inline ConnectiveTable parse_table(const json& j, const Universe& u, int arity) {
  ConnectiveTable shape = ConnectiveTable::constant(u, arity, u.falsum());
  std::vector<Value> outputs(table_cells(u.n_values, arity), u.falsum());
  std::vector<Value> prefix;
  detail::parse_table_slice(j, u, arity, prefix, outputs, shape);
  return ConnectiveTable::make(u, arity, std::move(outputs));
}

} // namespace mvlog
