#include "unitlab/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include "unitlab/checks.hpp"

namespace unitlab {

namespace {

int env_cap(std::ostream& err, bool& bad) {
  const char* v = std::getenv("UNITLAB_CAP");
  if (!v) return kDefaultOrderCap;
  char* end = nullptr;
  long cap = std::strtol(v, &end, 10);
  if (end == v || *end != '\0' || cap < 1) {
    err << "invalid UNITLAB_CAP value '" << v << "'\n";
    bad = true;
    return kDefaultOrderCap;
  }
  return static_cast<int>(cap);
}

std::string group_line(const PGroup& g) {
  return "group=" + g.label() + " p=" + std::to_string(g.p()) +
         " order=" + std::to_string(g.order()) + " exponent=" + std::to_string(g.exponent()) +
         " center=" + std::to_string(g.center().order()) +
         " derived=" + std::to_string(g.commutator_subgroup().order()) +
         " agemo=" + std::to_string(g.agemo().order()) +
         " frattini=" + std::to_string(g.frattini().order()) +
         " frattini-cyclic=" + (g.frattini().is_cyclic() ? "yes" : "no") +
         " negative-control=" + (g.negative_control() ? "yes" : "no");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact verification of the power structure of V(F_pG) for small p-groups"};
  app.require_subcommand(0, 1);
  app.fallthrough();  // global options like --cap may follow the subcommand

  bool bad_env = false;
  int cap = env_cap(err, bad_env);
  if (bad_env) return 2;
  app.add_option("--cap", cap, "order cap for constructed groups");

  bool list_checks = false;
  app.add_flag("--list-checks", list_checks, "print the check id -> operations mapping");

  auto* list_cmd = app.add_subcommand("list", "list the built-in group catalog");
  int list_p = 0;
  list_cmd->add_option("--p", list_p, "restrict to one catalog prime");

  auto* build_cmd = app.add_subcommand("build", "build a group from a spec expression");
  std::string build_spec;
  build_cmd->add_option("spec", build_spec, "group spec, e.g. extraspecial(3,p)xcyclic(3,1)")
      ->required();

  auto* inv_cmd = app.add_subcommand("invariants", "print group and unit-group invariants");
  std::string inv_spec;
  inv_cmd->add_option("spec", inv_spec, "group spec")->required();

  auto* verify_cmd = app.add_subcommand("verify", "run verification checks");
  std::vector<std::string> check_ids;
  verify_cmd->add_option("checks", check_ids, "check ids or 'all'")->required();
  int verify_p = 0;
  uint64_t seed = 1;
  int samples = 200;
  verify_cmd->add_option("--p", verify_p, "restrict to one catalog prime");
  verify_cmd->add_option("--seed", seed, "base seed for sampled checks");
  verify_cmd->add_option("--samples", samples, "samples per probabilistic check");

  auto* dist_cmd = app.add_subcommand("distinguish", "compare two groups through V(F_pG)");
  std::string spec_a, spec_b;
  dist_cmd->add_option("specA", spec_a, "first group spec")->required();
  dist_cmd->add_option("specB", spec_b, "second group spec")->required();

  auto* report_cmd = app.add_subcommand("report", "run every check and emit the full report");
  std::string out_file;
  uint64_t report_seed = 1;
  int report_samples = 200;
  report_cmd->add_option("--out", out_file, "write the report to a file");
  report_cmd->add_option("--seed", report_seed, "base seed for sampled checks");
  report_cmd->add_option("--samples", report_samples, "samples per probabilistic check");

  std::vector<const char*> argv;
  argv.push_back("unitlab");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (list_checks) {
      for (const auto& info : check_registry())
        out << "check=" << info.id << " operations=" << info.operations << "\n";
      return 0;
    }
    if (*list_cmd) {
      for (int p : {3, 5, 7}) {
        if (list_p && list_p != p) continue;
        for (const CatalogEntry& entry : builtin_catalog(p, cap))
          out << group_line(evaluate(entry.spec, cap)) << "\n";
      }
      return 0;
    }
    if (*build_cmd) {
      PGroup g = evaluate(parse_group_spec(build_spec), cap);
      out << group_line(g) << "\n";
      for (const auto& [name, id] : g.generators())
        out << "generator " << name << " = g" << id << " (order " << g.element_order(id) << ")\n";
      return 0;
    }
    if (*inv_cmd) {
      PGroup g = evaluate(parse_group_spec(inv_spec), cap);
      GroupInvariants gi = g.invariants();
      out << group_line(g) << "\n";
      out << "invariants order=" << gi.order << " exponent=" << gi.exponent
          << " center-order=" << gi.center_order << " center-exponent=" << gi.center_exponent
          << "\n";
      std::string why;
      if (g.p() > 2 && !g.abelian() && g.commutator_subgroup().order() == g.p()) {
        out << "unit-invariants " << v_invariants(g).str() << "\n";
      } else {
        satisfies_theorem_hypotheses(g, &why);
        out << "unit-invariants not applicable (" << (why.empty() ? "|G'| != p" : why) << ")\n";
      }
      return 0;
    }
    if (*verify_cmd) {
      CheckConfig cfg;
      if (verify_p) cfg.p_filter = verify_p;
      cfg.seed = seed;
      cfg.samples = samples;
      cfg.cap = cap;
      auto reports = run_checks(check_ids, cfg);
      out << render_report(reports);
      return report_exit_code(reports);
    }
    if (*dist_cmd) {
      PGroup a = evaluate(parse_group_spec(spec_a), cap);
      PGroup b = evaluate(parse_group_spec(spec_b), cap);
      DistinguishResult res = distinguish(a, b);
      out << "verdict=" << (res.verdict == Verdict::Distinguished ? "distinguished" : "same-type")
          << " reason=" << res.reason << "\n";
      out << "left " << res.left.str() << "\n";
      out << "right " << res.right.str() << "\n";
      return 0;
    }
    if (*report_cmd) {
      CheckConfig cfg;
      cfg.seed = report_seed;
      cfg.samples = report_samples;
      cfg.cap = cap;
      auto reports = run_checks({"all"}, cfg);
      std::string text = render_report(reports);
      if (!out_file.empty()) {
        std::ofstream f(out_file, std::ios::binary);
        if (!f) {
          err << "cannot open '" << out_file << "' for writing\n";
          return 2;
        }
        f << text;
      } else {
        out << text;
      }
      return report_exit_code(reports);
    }
    out << app.help();
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace unitlab
