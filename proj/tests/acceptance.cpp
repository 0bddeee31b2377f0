// Acceptance suite: runs every published-results criterion and prints one
// pass/fail line per criterion. Exit code 0 only when all criteria hold.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <vector>

#include "mvlog/enumerate.hpp"
#include "mvlog/verify.hpp"

using namespace mvlog;

namespace {

struct Criterion {
  int id;
  const char* title;
  double budget_seconds; // 0 = no bound
};

const Criterion criteria[] = {
    {1, "3-valued census: ss, tt, st, ts, ss∩tt", 1.0},
    {2, "3-valued connectives: tables, counts, uniqueness", 5.0},
    {3, "single-conclusion results for ss∩tt", 0.0},
    {4, "4-valued census: 167 relations, tallies, quotient, unique conditionals", 180.0},
    {5, "5-valued relation with a negation but no conditional", 0.0},
    {6, "algebraic conditions match brute-force search", 0.0},
    {7, "constructors pass their rules", 0.0},
    {8, "order-theoretic relations: upsets, totality, no negations/conditionals", 0.0},
    {9, "property suites: oracle agreement, roles, interactions, bivalence", 0.0},
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace

int main() {
  // the census itself carries its own runtime bound
  auto census_start = std::chrono::steady_clock::now();
  auto census = enumerate_relations(Universe(3));
  double census_time = seconds_since(census_start);

  auto t3_start = std::chrono::steady_clock::now();
  auto checks3 = verify_paper(3);
  double t3 = seconds_since(t3_start);

  auto t4_start = std::chrono::steady_clock::now();
  auto checks4 = verify_paper(4);
  double t4 = seconds_since(t4_start);

  auto checks5 = verify_paper(5);

  std::vector<NamedCheck> all;
  all.insert(all.end(), checks3.begin(), checks3.end());
  all.insert(all.end(), checks4.begin(), checks4.end());
  all.insert(all.end(), checks5.begin(), checks5.end());

  std::map<int, std::vector<const NamedCheck*>> by_criterion;
  for (const auto& c : all) by_criterion[c.criterion].push_back(&c);

  std::map<int, double> elapsed{{1, census_time}, {2, t3}, {4, t4}};

  int failures = 0;
  for (const auto& crit : criteria) {
    bool pass = true;
    int subchecks = 0;
    std::vector<const NamedCheck*> failed;
    for (const NamedCheck* c : by_criterion[crit.id]) {
      ++subchecks;
      if (!c->pass) {
        pass = false;
        failed.push_back(c);
      }
    }
    if (crit.id == 1 && (census.size() != 5 || census_time >= 1.0)) pass = false;
    double time = elapsed.count(crit.id) ? elapsed[crit.id] : 0.0;
    if (crit.budget_seconds > 0 && time >= crit.budget_seconds) pass = false;

    std::printf("%s  criterion %d: %s (%d checks", pass ? "PASS" : "FAIL", crit.id, crit.title,
                subchecks);
    if (crit.budget_seconds > 0) std::printf(", %.2fs of %.0fs budget", time, crit.budget_seconds);
    std::printf(")\n");
    for (const NamedCheck* c : failed) {
      std::printf("      failed: %s", c->name.c_str());
      if (!c->detail.empty()) std::printf("  [%s]", c->detail.c_str());
      std::printf("\n");
    }
    if (!pass) ++failures;
  }

  std::printf("%d/9 criteria passed\n", 9 - failures);
  return failures == 0 ? 0 : 1;
}
