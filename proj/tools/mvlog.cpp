// Command-line front end: enumeration campaigns, connective search, algebraic
// decisions, order-theoretic relations, rule synthesis and the published-
// results verification suite.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "mvlog/catalog.hpp"
#include "mvlog/json_io.hpp"
#include "mvlog/order.hpp"
#include "mvlog/search.hpp"
#include "mvlog/verify.hpp"

namespace {

using namespace mvlog;

Representation parse_relation_arg(const std::string& arg, std::optional<int> n) {
  Universe u3(3);
  Bits s = bit(2), t = bit(2) | bit(1);
  if (arg == "ss") return Representation::make(u3, {MixedRelation::make(u3, s, s)});
  if (arg == "tt") return Representation::make(u3, {MixedRelation::make(u3, t, t)});
  if (arg == "st") return Representation::make(u3, {MixedRelation::make(u3, s, t)});
  if (arg == "ts") return Representation::make(u3, {MixedRelation::make(u3, t, s)});
  if (arg == "sstt" || arg == "ss^tt" || arg == "ss∩tt")
    return Representation::make(
        u3, {MixedRelation::make(u3, s, s), MixedRelation::make(u3, t, t)});
  if (!arg.empty() && (arg[0] == '[' || arg[0] == '{'))
    return parse_representation(json::parse(arg), n);
  std::ifstream in(arg);
  if (!in) throw std::invalid_argument("relation argument is neither a name, JSON nor a readable file");
  json j;
  in >> j;
  return parse_representation(j, n);
}

RegularityRule parse_rule_arg(const std::string& arg) {
  if (!arg.empty() && arg[0] == '{') return parse_rule(json::parse(arg));
  std::ifstream in(arg);
  if (in) {
    json j;
    in >> j;
    return parse_rule(j);
  }
  return library_rule(arg);
}

void write_output(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << text;
}

void print_report(const ConnectiveReport& rep, const Universe& u) {
  std::cout << (rep.rule_name.empty() ? std::string("rule") : rep.rule_name) << ": "
            << (rep.exists ? "exists" : "does not exist") << ", count " << rep.count.to_string()
            << "\n";
  if (rep.witness) {
    std::cout << "witness:\n" << to_text(*rep.witness);
    if (rep.witness->arity == 0 || rep.witness->arity == 1) std::cout << "\n";
  }
  (void)u;
}

int cmd_enumerate(int n, bool quotient, int jobs, bool timing, const std::string& json_path,
                  const std::string& md_path) {
  CampaignOptions opts;
  opts.quotient = quotient;
  opts.jobs = jobs;
  opts.timing = timing;
  CampaignReport report = run_campaign(n, opts);
  if (!json_path.empty()) write_output(json_path, to_json(report).dump(2) + "\n");
  if (!md_path.empty()) write_output(md_path, to_markdown(report));
  if (json_path.empty() && md_path.empty()) {
    std::cout << report.entries.size() << " relations";
    if (quotient) std::cout << ", " << report.quotient_class_count << " up to indeterminate renaming";
    std::cout << "\n";
    const auto& s = report.summary;
    std::cout << "conditional " << s.conditional << ", conj+disj " << s.conj_disj_only
              << ", conj only " << s.conj_only << ", disj only " << s.disj_only << ", none "
              << s.none << "\n";
  }
  return 0;
}

int cmd_verify(int n) {
  auto checks = verify_paper(n);
  int failures = 0;
  for (const auto& c : checks) {
    std::cout << (c.pass ? "PASS" : "FAIL") << "  " << c.name;
    if (!c.detail.empty()) std::cout << "  [" << c.detail << "]";
    std::cout << "\n";
    if (!c.pass) ++failures;
  }
  std::cout << checks.size() - std::size_t(failures) << "/" << checks.size() << " checks passed\n";
  return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-model search and decision engine for many-valued consequence relations"};
  app.require_subcommand(1);

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "enumerate all intersective mixed relations");
  int en_n = 3;
  bool en_quot = false, en_timing = false;
  int en_jobs = 1;
  std::string en_json, en_md;
  enumerate->add_option("--n", en_n, "number of truth values")->required();
  enumerate->add_flag("--quotient", en_quot, "also tally classes up to indeterminate renaming");
  enumerate->add_option("--jobs", en_jobs, "worker threads");
  enumerate->add_flag("--timing", en_timing, "include elapsed time in the report");
  enumerate->add_option("--json", en_json, "write the JSON report here ('-' for stdout)");
  enumerate->add_option("--markdown", en_md, "write the markdown report here ('-' for stdout)");

  // connectives
  auto* conn = app.add_subcommand("connectives", "search connectives for a relation and rule");
  std::string cn_rel, cn_rule;
  std::optional<int> cn_n;
  bool cn_json = false;
  conn->add_option("--relation", cn_rel, "relation: name, JSON or file")->required();
  conn->add_option("--rule", cn_rule, "rule: library name, JSON or file")->required();
  conn->add_option("--n", cn_n, "number of truth values (inferred when omitted)");
  conn->add_flag("--json", cn_json, "emit the report as JSON");

  // decide
  auto* decide = app.add_subcommand("decide", "algebraic existence verdict for a relation");
  std::string dc_rel;
  std::optional<int> dc_n;
  decide->add_option("--relation", dc_rel, "relation: name, JSON or file")->required();
  decide->add_option("--n", dc_n, "number of truth values (inferred when omitted)");

  // order
  auto* order = app.add_subcommand("order", "analyze an order-theoretic relation");
  int or_n = 3;
  std::string or_spec;
  order->add_option("--n", or_n, "number of truth values")->required();
  order->add_option("--order", or_spec, "chains like \"0<#1<#2<1\" or pair lists")->required();

  // synth-rule
  auto* synth = app.add_subcommand("synth-rule", "synthesize the rule of a classical function");
  std::string sy_bits;
  int sy_arity = 2;
  synth->add_option("--classical", sy_bits, "output bit-string in row-major input order")->required();
  synth->add_option("--arity", sy_arity, "function arity")->required();

  // canonical4
  auto* canon = app.add_subcommand("canonical4", "the unique 4-valued table realizing a rule");
  std::string ca_rule;
  canon->add_option("--rule", ca_rule, "rule: library name, JSON or file")->required();

  // sc-search
  auto* sc = app.add_subcommand("sc-search", "exhaustive single-conclusion conditional search");
  std::string sc_rel, sc_variant;
  std::optional<int> sc_n;
  bool sc_force = false;
  sc->add_option("--relation", sc_rel, "relation: name, JSON or file")->required();
  sc->add_option("--variant", sc_variant, "sc_deduction | sc_premise | sc_premise_rtl")->required();
  sc->add_option("--n", sc_n, "number of truth values (inferred when omitted)");
  sc->add_flag("--force-large", sc_force, "allow N > 3 (N^(N^2) tables)");

  // verify-paper
  auto* verify = app.add_subcommand("verify-paper", "run the published-results checklist");
  int vp_n = 3;
  verify->add_option("--n", vp_n, "3, 4 or 5")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*enumerate) return cmd_enumerate(en_n, en_quot, en_jobs, en_timing, en_json, en_md);

    if (*conn) {
      Representation rep = parse_relation_arg(cn_rel, cn_n);
      Representation minrep = minimal_representation(rep);
      ExtRelation ext = extension(rep);
      RegularityRule rule = parse_rule_arg(cn_rule);
      auto report = find_connectives(rule, ext, minrep, cn_rule);
      if (cn_json) {
        std::cout << to_json(report).dump(2) << "\n";
      } else {
        std::cout << "relation: " << to_string(minrep) << "\n";
        print_report(report, minrep.universe);
      }
      return 0;
    }

    if (*decide) {
      Representation rep = parse_relation_arg(dc_rel, dc_n);
      Representation minrep = minimal_representation(rep);
      AlgebraVerdict v = algebra_verdict(minrep);
      json out = to_json(v);
      out["relation"] = to_json(minrep);
      out["minimal_representation"] = to_string(minrep);
      std::cout << out.dump(2) << "\n";
      return 0;
    }

    if (*order) {
      Universe u(or_n);
      TruthOrder o = parse_order(u, or_spec);
      auto cls = classify_order(o);
      Representation rep = upset_representation(o);
      ExtRelation ext = order_relation(o);
      Representation minrep = minimal_representation(rep);
      const char* kind = cls.kind == OrderKind::total ? "total"
                         : cls.kind == OrderKind::degenerate ? "degenerate" : "other";
      std::cout << "order kind: " << kind;
      if (cls.also_degenerate) std::cout << " (also degenerate)";
      std::cout << "\nupset representation: " << to_string(rep) << "\n";
      std::cout << "minimal representation: " << to_string(minrep) << "\n";
      std::cout << "upset intersection equals order relation: "
                << (extension(rep) == ext ? "yes" : "no") << "\n";
      auto prof = connective_profile(ext, minrep);
      for (const auto* r : {&prof.conjunction, &prof.disjunction, &prof.negation, &prof.conditional})
        std::cout << r->rule_name << ": " << (r->exists ? "exists" : "absent") << " (count "
                  << r->count.to_string() << ")\n";
      return 0;
    }

    if (*synth) {
      auto f = ClassicalFunction::parse(sy_bits, sy_arity);
      std::cout << to_json(synthesize_classical_rule(f)).dump(2) << "\n";
      return 0;
    }

    if (*canon) {
      auto t = synthesize_canonical4(parse_rule_arg(ca_rule));
      std::cout << to_text(t);
      if (t.arity < 2) std::cout << "\n";
      return 0;
    }

    if (*sc) {
      auto variant = parse_sc_variant(sc_variant);
      if (!variant) throw CLI::ValidationError("--variant", "unknown single-conclusion variant");
      Representation rep = parse_relation_arg(sc_rel, sc_n);
      auto result = sc_search(*variant, extension(rep), sc_force);
      std::cout << "count " << result.count.to_string() << "\n";
      for (const auto& w : result.witnesses) std::cout << to_text(w) << "\n";
      return 0;
    }

    if (*verify) return cmd_verify(vp_n);
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
