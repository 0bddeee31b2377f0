#pragma once

#include <algorithm>
#include <chrono>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "mvlog/algebra.hpp"
#include "mvlog/enumerate.hpp"
#include "mvlog/json_io.hpp"
#include "mvlog/relation.hpp"
#include "mvlog/search.hpp"
#include "mvlog/version.hpp"

namespace mvlog {

enum class ProfileCategory { conditional, conj_disj, conj_only, disj_only, none };

inline ProfileCategory category_of(const ConnectiveProfile& p) {
  if (p.conditional.exists) return ProfileCategory::conditional;
  if (p.conjunction.exists && p.disjunction.exists) return ProfileCategory::conj_disj;
  if (p.conjunction.exists) return ProfileCategory::conj_only;
  if (p.disjunction.exists) return ProfileCategory::disj_only;
  return ProfileCategory::none;
}

inline const char* category_name(ProfileCategory c) {
  switch (c) {
    case ProfileCategory::conditional: return "conditional";
    case ProfileCategory::conj_disj: return "conjunction+disjunction";
    case ProfileCategory::conj_only: return "conjunction only";
    case ProfileCategory::disj_only: return "disjunction only";
    case ProfileCategory::none: return "none";
  }
  return "?";
}

// Canonical short names for the universally known relations.
inline std::string canonical_name(const Representation& minrep) {
  const Universe& u = minrep.universe;
  if (u.n_values == 2 && minrep.members.size() == 1) return "classical";
  if (u.n_values != 3) return "";
  Bits s = bit(2), t = bit(2) | bit(1);
  auto is = [&](const MixedRelation& m, Bits dp, Bits dc) {
    return m.dp.bits == dp && m.dc.bits == dc;
  };
  if (minrep.members.size() == 1) {
    const auto& m = minrep.members[0];
    if (is(m, s, s)) return "ss";
    if (is(m, t, t)) return "tt";
    if (is(m, s, t)) return "st";
    if (is(m, t, s)) return "ts";
  }
  if (minrep.members.size() == 2 && is(minrep.members[0], s, s) && is(minrep.members[1], t, t))
    return "ss∩tt";
  return "";
}

struct RelationAnalysis {
  CatalogEntry entry;
  std::string name; // short name when recognized
  bool reflexive = false;
  ConnectiveProfile profile;
  AlgebraVerdict algebra;
  std::size_t minimal_representation_count = 0;
  int quotient_class = -1;
  bool quotient_representative = false;
};

struct SummaryCounts {
  int total = 0;
  int conditional = 0;
  int conj_disj_only = 0;
  int conj_only = 0;
  int disj_only = 0;
  int none = 0;
};

struct CampaignOptions {
  bool quotient = true;
  int jobs = 1;
  bool timing = false;
};

struct CampaignReport {
  int n_values = 0;
  std::vector<RelationAnalysis> entries;
  SummaryCounts summary;
  std::optional<SummaryCounts> quotient_summary;
  int quotient_class_count = 0;
  std::string version = engine_version;
  std::optional<double> elapsed_seconds;
};

inline RelationAnalysis analyze_relation(CatalogEntry entry) {
  RelationAnalysis a{std::move(entry), "", false, {}, {}, 0, -1, false};
  a.name = canonical_name(a.entry.min_rep);
  a.reflexive = is_reflexive(a.entry.ext);
  a.profile = connective_profile(a.entry.ext, a.entry.min_rep);
  a.algebra = algebra_verdict(a.entry.min_rep);
  if (a.entry.ext.universe().n_values <= 4)
    a.minimal_representation_count = all_minimal_representations(a.entry.ext).size();
  return a;
}

inline SummaryCounts tally(const std::vector<const RelationAnalysis*>& entries) {
  SummaryCounts s;
  s.total = int(entries.size());
  for (const auto* a : entries) {
    switch (category_of(a->profile)) {
      case ProfileCategory::conditional: ++s.conditional; break;
      case ProfileCategory::conj_disj: ++s.conj_disj_only; break;
      case ProfileCategory::conj_only: ++s.conj_only; break;
      case ProfileCategory::disj_only: ++s.disj_only; break;
      case ProfileCategory::none: ++s.none; break;
    }
  }
  return s;
}

inline CampaignReport run_campaign(int n, const CampaignOptions& options = {}) {
  auto t0 = std::chrono::steady_clock::now();
  Universe u(n);
  auto catalog = enumerate_relations(u);

  CampaignReport report;
  report.n_values = n;

  int jobs = std::max(1, options.jobs);
  std::vector<std::optional<RelationAnalysis>> slots(catalog.size());
  auto worker = [&](int offset) {
    for (std::size_t i = std::size_t(offset); i < catalog.size(); i += std::size_t(jobs))
      slots[i] = analyze_relation(catalog[i]);
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int j = 1; j < jobs; ++j) pool.emplace_back(worker, j);
    worker(0);
    for (auto& th : pool) th.join();
  }
  report.entries.reserve(catalog.size());
  for (auto& s : slots) report.entries.push_back(std::move(*s));

  std::vector<CatalogEntry> plain;
  plain.reserve(catalog.size());
  for (const auto& a : report.entries) plain.push_back(a.entry);
  auto q = quotient_by_indeterminate_permutation(plain, u);
  for (std::size_t i = 0; i < report.entries.size(); ++i)
    report.entries[i].quotient_class = q.class_of[i];
  for (std::size_t rep : q.representative) report.entries[rep].quotient_representative = true;
  report.quotient_class_count = int(q.representative.size());

  std::vector<const RelationAnalysis*> all, reps;
  for (const auto& a : report.entries) {
    all.push_back(&a);
    if (a.quotient_representative) reps.push_back(&a);
  }
  report.summary = tally(all);
  if (options.quotient) report.quotient_summary = tally(reps);

  if (options.timing)
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

// ---------------------------------------------------------------------------
// Serialization. Counts are decimal strings throughout.
// ---------------------------------------------------------------------------

inline json to_json(const SummaryCounts& s) {
  return json{{"total", std::to_string(s.total)},
              {"conditional", std::to_string(s.conditional)},
              {"conjunction_disjunction_only", std::to_string(s.conj_disj_only)},
              {"conjunction_only", std::to_string(s.conj_only)},
              {"disjunction_only", std::to_string(s.disj_only)},
              {"none", std::to_string(s.none)}};
}

inline json to_json(const AlgebraVerdict& v) {
  return json{{"disjunction_compatible", v.disjunction_compatible},
              {"conjunction_compatible", v.conjunction_compatible},
              {"dc1", v.dc1},
              {"dc2", v.dc2},
              {"n1", v.n1},
              {"n2", v.n2},
              {"conditional_decision", v.conditional_decision}};
}

inline json to_json(const ConnectiveReport& r) {
  json out{{"exists", r.exists}, {"count", r.count.to_string()}};
  if (r.witness) out["witness"] = to_json(*r.witness);
  return out;
}

inline json to_json(const CampaignReport& r) {
  json entries = json::array();
  for (std::size_t i = 0; i < r.entries.size(); ++i) {
    const auto& a = r.entries[i];
    json e{{"id", i},
           {"extension_hex", a.entry.ext_hex},
           {"minimal_representation", to_json(a.entry.min_rep)},
           {"reflexive", a.reflexive},
           {"connectives",
            json{{"conjunction", to_json(a.profile.conjunction)},
                 {"disjunction", to_json(a.profile.disjunction)},
                 {"negation", to_json(a.profile.negation)},
                 {"conditional", to_json(a.profile.conditional)}}},
           {"algebra", to_json(a.algebra)},
           {"minimal_representation_count", std::to_string(a.minimal_representation_count)},
           {"quotient_class", a.quotient_class},
           {"quotient_representative", a.quotient_representative}};
    if (!a.name.empty()) e["name"] = a.name;
    entries.push_back(std::move(e));
  }
  json out{{"schema_version", schema_version},
           {"engine_version", r.version},
           {"n_values", r.n_values},
           {"relations", std::move(entries)},
           {"summary", to_json(r.summary)},
           {"quotient_class_count", std::to_string(r.quotient_class_count)}};
  if (r.quotient_summary) out["quotient_summary"] = to_json(*r.quotient_summary);
  if (r.elapsed_seconds) out["elapsed_seconds"] = *r.elapsed_seconds;
  return out;
}

inline std::string to_markdown(const CampaignReport& r) {
  std::ostringstream md;
  md << "# " << r.n_values << "-valued intersective mixed consequence relations\n\n";
  md << "Engine " << r.version << ", schema " << schema_version << ".\n\n";
  auto summary_row = [&](const char* label, const SummaryCounts& s) {
    md << "| " << label << " | " << s.total << " | " << s.conditional << " | " << s.conj_disj_only
       << " | " << s.conj_only << " | " << s.disj_only << " | " << s.none << " |\n";
  };
  md << "| view | total | conditional | conj+disj only | conj only | disj only | none |\n";
  md << "|---|---|---|---|---|---|---|\n";
  summary_row("raw", r.summary);
  if (r.quotient_summary) summary_row("up to indeterminate renaming", *r.quotient_summary);
  md << "\n## Relations\n\n";
  md << "| id | name | minimal representation | reflexive | ∧ | ∨ | ¬ | → | decide(→) | class |\n";
  md << "|---|---|---|---|---|---|---|---|---|---|\n";
  for (std::size_t i = 0; i < r.entries.size(); ++i) {
    const auto& a = r.entries[i];
    auto mark = [](const ConnectiveReport& c) {
      return c.exists ? c.count.to_string() : std::string("—");
    };
    md << "| " << i << " | " << (a.name.empty() ? "" : a.name) << " | `"
       << to_string(a.entry.min_rep) << "` | " << (a.reflexive ? "yes" : "no") << " | "
       << mark(a.profile.conjunction) << " | " << mark(a.profile.disjunction) << " | "
       << mark(a.profile.negation) << " | " << mark(a.profile.conditional) << " | "
       << (a.algebra.conditional_decision ? "yes" : "no") << " | " << a.quotient_class << " |\n";
  }
  return md.str();
}

} // namespace mvlog
