#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "mvlog/relation.hpp"

namespace mvlog {

// All designated sets of the universe, sorted by bit pattern.
inline std::vector<Bits> all_designated_sets(const Universe& u) {
  std::vector<Bits> out;
  Bits base = bit(u.verum());
  int k = u.indeterminate_count();
  for (Bits m = 0; m < (Bits{1} << k); ++m) {
    Bits d = base;
    for (int i = 0; i < k; ++i)
      if (test_bit(m, i)) d |= bit(i + 1);
    out.push_back(d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// All 4^(N-2) mixed relations of the universe, in canonical (dp, dc) order.
inline std::vector<MixedRelation> all_mixed_relations(const Universe& u) {
  std::vector<MixedRelation> out;
  auto ds = all_designated_sets(u);
  for (Bits dp : ds)
    for (Bits dc : ds) out.push_back(MixedRelation::make(u, dp, dc));
  std::sort(out.begin(), out.end());
  return out;
}

struct CatalogEntry {
  ExtRelation ext;
  Representation min_rep; // dominance antichain, canonically sorted
  std::string ext_hex;
};

// Every distinct intersective mixed relation of the universe, one entry per
// extension, ordered by serialized extension. Exhaustive over all nonempty
// subsets of mixed relations, so the universe must stay small.
inline std::vector<CatalogEntry> enumerate_relations(const Universe& u) {
  if (u.n_values > 4)
    throw std::invalid_argument(
        "full enumeration requires N <= 4; larger universes are served by targeted mode "
        "(analyze explicit representations instead)");

  auto mixed = all_mixed_relations(u);
  std::vector<ExtRelation> member_ext;
  member_ext.reserve(mixed.size());
  for (const auto& m : mixed) member_ext.push_back(extension(m));

  std::unordered_map<ExtRelation, std::size_t, ExtRelationHash> seen;
  std::vector<CatalogEntry> entries;
  std::uint64_t nsubsets = std::uint64_t{1} << mixed.size();
  for (std::uint64_t s = 1; s < nsubsets; ++s) {
    int first = std::countr_zero(s);
    ExtRelation e = member_ext[std::size_t(first)];
    std::uint64_t rest = s & (s - 1);
    while (rest != 0) {
      int i = std::countr_zero(rest);
      e.intersect_with(member_ext[std::size_t(i)]);
      rest &= rest - 1;
    }
    if (seen.contains(e)) continue;
    std::vector<MixedRelation> gen;
    for (std::uint64_t t = s; t != 0; t &= t - 1) gen.push_back(mixed[std::size_t(std::countr_zero(t))]);
    Representation minrep = minimal_representation(Representation::make(u, std::move(gen)));
    seen.emplace(e, entries.size());
    entries.push_back(CatalogEntry{e, std::move(minrep), e.to_hex()});
  }
  std::sort(entries.begin(), entries.end(),
            [](const CatalogEntry& a, const CatalogEntry& b) { return a.ext_hex < b.ext_hex; });
  return entries;
}

// Every minimum-cardinality set of mixed relations whose intersection equals
// e, by exhaustive subset search. N <= 4 only.
inline std::vector<Representation> all_minimal_representations(const ExtRelation& e) {
  const Universe& u = e.universe();
  if (u.n_values > 4)
    throw std::invalid_argument("all_minimal_representations is exhaustive and requires N <= 4");
  auto mixed = all_mixed_relations(u);
  std::vector<ExtRelation> member_ext;
  for (const auto& m : mixed) member_ext.push_back(extension(m));

  std::size_t best = mixed.size() + 1;
  std::vector<Representation> out;
  std::uint64_t nsubsets = std::uint64_t{1} << mixed.size();
  for (std::uint64_t s = 1; s < nsubsets; ++s) {
    std::size_t card = std::size_t(std::popcount(s));
    if (card > best) continue;
    int first = std::countr_zero(s);
    ExtRelation cand = member_ext[std::size_t(first)];
    for (std::uint64_t t = s & (s - 1); t != 0; t &= t - 1)
      cand.intersect_with(member_ext[std::size_t(std::countr_zero(t))]);
    if (!(cand == e)) continue;
    std::vector<MixedRelation> gen;
    for (std::uint64_t t = s; t != 0; t &= t - 1) gen.push_back(mixed[std::size_t(std::countr_zero(t))]);
    if (card < best) {
      best = card;
      out.clear();
    }
    out.push_back(Representation::make(u, std::move(gen)));
  }
  return out;
}

// Identity of values under a permutation of the indeterminates only.
inline std::vector<std::vector<Value>> indeterminate_permutations(const Universe& u) {
  std::vector<Value> ids(std::size_t(u.indeterminate_count()));
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = Value(i + 1);
  std::vector<std::vector<Value>> out;
  std::sort(ids.begin(), ids.end());
  do {
    std::vector<Value> perm(std::size_t(u.n_values));
    perm[0] = u.falsum();
    perm[std::size_t(u.verum())] = u.verum();
    for (std::size_t i = 0; i < ids.size(); ++i) perm[i + 1] = ids[i];
    out.push_back(std::move(perm));
  } while (std::next_permutation(ids.begin(), ids.end()));
  return out;
}

struct QuotientClasses {
  // For each catalog entry, the id of its class; ids follow the sorted order
  // of class-representative serializations.
  std::vector<int> class_of;
  // For each class, the catalog index of its representative (the member whose
  // extension serializes least over all indeterminate renamings).
  std::vector<std::size_t> representative;
};

inline QuotientClasses quotient_by_indeterminate_permutation(const std::vector<CatalogEntry>& catalog,
                                                             const Universe& u) {
  auto perms = indeterminate_permutations(u);
  std::vector<std::string> canon(catalog.size());
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    std::string best;
    for (const auto& p : perms) {
      std::string h = catalog[i].ext.relabeled(p).to_hex();
      if (best.empty() || h < best) best = h;
    }
    canon[i] = std::move(best);
  }
  std::map<std::string, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < catalog.size(); ++i) groups[canon[i]].push_back(i);

  QuotientClasses q;
  q.class_of.assign(catalog.size(), -1);
  int id = 0;
  for (const auto& [key, idxs] : groups) {
    std::size_t rep = idxs.front();
    for (std::size_t i : idxs) {
      q.class_of[i] = id;
      if (catalog[i].ext_hex == key) rep = i;
    }
    q.representative.push_back(rep);
    ++id;
  }
  return q;
}

} // namespace mvlog
