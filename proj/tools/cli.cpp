#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "superrr/errors.hpp"
#include "superrr/json_io.hpp"
#include "superrr/suites.hpp"

namespace superrr::cli {

namespace {

using json_io::json;

struct Flags {
  std::string target = "psuper";
  std::optional<long> r, s, d;
  std::optional<std::string> tau, phi_int;
  std::optional<long> g, ns, rr;
  std::uint64_t seed = 42;
  std::optional<long> cases;
  bool json = false;
  std::optional<std::string> csv;
  bool printed_sign = false;
  std::optional<std::string> request;
  std::optional<std::string> bundle;
  std::optional<std::string> deg_l;
};

std::string read_text(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Inline JSON, or @path to read it from a file.
json parse_json_argument(const std::string& value) {
  const std::string text = (!value.empty() && value.front() == '@') ? read_text(value.substr(1)) : value;
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

long require_flag(const std::optional<long>& v, const char* name) {
  if (!v) throw InvalidArgument(std::string("missing required flag --") + name);
  return *v;
}

ModuliParams params_from(const Flags& f) {
  ModuliParams p{f.g.value_or(0), f.ns.value_or(0), f.rr.value_or(0)};
  p.validate();
  return p;
}

TargetSpec target_from(const Flags& f) {
  if (f.target == "psuper") return TargetSpec::psuper(require_flag(f.r, "r"), f.s.value_or(0), f.d.value_or(0));
  if (f.target == "custom") {
    if (!f.tau || !f.phi_int) throw InvalidArgument("custom targets need --tau and --phi-int");
    return TargetSpec::custom(require_flag(f.r, "r"), f.s.value_or(0), parse_rational(*f.tau),
                              parse_rational(*f.phi_int));
  }
  return TargetSpec::point();
}

OddGenusTerm reading_from(const Flags& f) {
  return f.printed_sign ? OddGenusTerm::printed_plus_two : OddGenusTerm::derived;
}

void warn_odd_rr(const ModuliParams& p, std::ostream& err) {
  if (!p.spin_degree_integral())
    err << "warning: n_rr = " << p.n_rr
        << " is odd; deg F = g-1+n_rr/2 is not integral, closed formula evaluated over Q only\n";
}

int cmd_vdim(const Flags& f, std::ostream& out, std::ostream& err) {
  ModuliParams p;
  std::optional<TargetSpec> t;
  if (f.request) {
    const auto req = json_io::decode_vdim_request(parse_json_argument(*f.request));
    p = req.params;
    t = req.target;
  } else {
    p = params_from(f);
    t = target_from(f);
  }
  warn_odd_rr(p, err);
  const VdimReport report = evaluate_vdim(p, *t, reading_from(f));

  if (f.json) {
    out << json_io::encode(report).dump(2) << "\n";
  } else {
    out << "target: " << t->to_string() << "; " << p.to_string() << "\n";
    out << "vdim: " << report.closed.to_string() << "\n";
    out << "assembled: " << (report.assembled ? report.assembled->to_string() : std::string("n/a")) << "\n";
    out << "consistency: " << (report.consistent ? "true" : "false") << "\n";
    if (report.bosonic_dimension) out << "bosonic_dimension: " << to_string(*report.bosonic_dimension) << "\n";
    if (report.properness) out << "properness_hint: " << to_string(*report.properness) << "\n";
  }
  if (!report.consistent) {
    out << report.counterexample_report();
    return identity_failure;
  }
  return ok;
}

int cmd_chi(const Flags& f, std::ostream& out, std::ostream& err) {
  const long g = f.g.value_or(0);
  const long rr = f.rr.value_or(0);
  const SplitSupercurve curve =
      f.deg_l ? SplitSupercurve(g, parse_rational(*f.deg_l)) : SplitSupercurve::susy(g, rr);
  if (!f.deg_l) warn_odd_rr(ModuliParams{g, 0, rr}, err);

  SuperBundle bundle = SuperBundle::zero(curve.model());
  if (f.bundle) {
    bundle = json_io::decode_bundle(parse_json_argument(*f.bundle), curve.model());
  } else if (f.r || f.target != "psuper") {
    bundle = pullback_tangent(curve, target_from(f));
  } else {
    throw InvalidArgument("chi needs --bundle or target flags (--target, --r, ...)");
  }

  const SuperEuler via_grr = chi_super(curve, bundle);
  const SuperEuler via_closed = chi_closed_form(curve, bundle);
  const SuperEuler via_rr = rr_oracle(curve, bundle);
  const bool agree = via_grr == via_closed && via_grr == via_rr;

  if (f.json) {
    json j{{"genus", g},
           {"deg_L", json_io::encode(curve.deg_L())},
           {"bundle", json_io::encode(bundle)},
           {"chi_super", json_io::encode(via_grr.value())},
           {"chi_closed_form", json_io::encode(via_closed.value())},
           {"rr_oracle", json_io::encode(via_rr.value())},
           {"consistency", agree}};
    out << j.dump(2) << "\n";
  } else {
    out << "curve: g=" << g << ", deg L=" << to_string(curve.deg_L()) << "\n";
    out << "chi_super: " << via_grr.to_string() << "\n";
    out << "chi_closed_form: " << via_closed.to_string() << "\n";
    out << "rr_oracle: " << via_rr.to_string() << "\n";
    out << "consistency: " << (agree ? "true" : "false") << "\n";
  }
  return agree ? ok : identity_failure;
}

void print_failure(const suites::SuiteResult& r, std::ostream& out) {
  if (!r.counterexample) return;
  out << "  minimal counterexample: " << r.counterexample->to_string() << "\n";
  if (!r.detail.empty()) out << "  " << r.detail << "\n";
}

int cmd_grr_check(const Flags& f, std::ostream& out) {
  const long cases = f.cases.value_or(1000);
  if (cases < 1) throw InvalidArgument("--cases must be positive");
  const auto result = suites::run_grr_suite(f.seed, cases);
  if (f.json) {
    json j{{"seed", f.seed}, {"cases", result.cases}, {"passed", result.passed}, {"ok", result.ok()}};
    if (result.counterexample) j["counterexample"] = result.counterexample->to_string() + "; " + result.detail;
    out << j.dump(2) << "\n";
  } else {
    out << "seed: " << f.seed << "\n" << result.summary() << "\n";
    print_failure(result, out);
  }
  return result.ok() ? ok : identity_failure;
}

int cmd_identities(const Flags& f, std::ostream& out) {
  const long cases = f.cases.value_or(500);
  if (cases < 1) throw InvalidArgument("--cases must be positive");
  const auto results = suites::run_identity_suites(f.seed, cases);
  bool all_ok = true;
  json suites_json = json::array();
  if (!f.json) out << "seed: " << f.seed << "\n";
  for (const auto& r : results) {
    all_ok = all_ok && r.ok();
    if (f.json) {
      json j{{"name", r.name}, {"cases", r.cases}, {"passed", r.passed}, {"ok", r.ok()}};
      if (r.counterexample) j["counterexample"] = r.counterexample->to_string();
      suites_json.push_back(j);
    } else {
      out << r.summary() << "\n";
      print_failure(r, out);
    }
  }
  if (f.json) out << json{{"seed", f.seed}, {"suites", suites_json}, {"ok", all_ok}}.dump(2) << "\n";
  return all_ok ? ok : identity_failure;
}

std::vector<long> sweep_range(const std::optional<long>& fixed, std::vector<long> defaults) {
  if (fixed) return {*fixed};
  return defaults;
}

int cmd_table(const Flags& f, std::ostream& out, std::ostream& err) {
  if (f.target != "psuper") throw InvalidArgument("table sweeps P^{r|s} targets only");
  const auto gs = sweep_range(f.g, {0, 1, 2, 3});
  const auto nss = sweep_range(f.ns, {0, 1, 2, 3, 4});
  const auto rrs = sweep_range(f.rr, {0, 2, 4, 6});
  const auto rs = sweep_range(f.r, {1, 2, 3, 4});
  const auto ss = sweep_range(f.s, {0, 1, 2, 3});
  const auto ds = sweep_range(f.d, {0, 1, 2, 3});

  std::ostringstream csv;
  csv << "g,n_ns,n_rr,r,s,d,vdim_body,vdim_soul,bosonic_dim,proper\n";
  long rows = 0;
  long inconsistent = 0;
  std::optional<VdimReport> first_bad;
  for (long g : gs)
    for (long ns : nss)
      for (long rr : rrs)
        for (long r : rs)
          for (long s : ss)
            for (long d : ds) {
              const ModuliParams p{g, ns, rr};
              const auto report = evaluate_vdim(p, TargetSpec::psuper(r, s, d), reading_from(f));
              csv << g << "," << ns << "," << rr << "," << r << "," << s << "," << d << ","
                  << to_string(report.closed.body()) << "," << to_string(report.closed.soul()) << ","
                  << to_string(*report.bosonic_dimension) << ","
                  << (*report.properness == Properness::proper ? "true" : "false") << "\n";
              ++rows;
              if (!report.consistent) {
                ++inconsistent;
                if (!first_bad) first_bad = report;
              }
            }

  if (f.csv) {
    std::ofstream file(*f.csv, std::ios::binary);
    if (!file) throw InvalidArgument("cannot write '" + *f.csv + "'");
    file << csv.str();
    out << "wrote " << rows << " rows to " << *f.csv << "\n";
  } else {
    out << csv.str();
  }
  if (inconsistent > 0) {
    err << inconsistent << " of " << rows << " rows fail closed == assembled\n" << first_bad->counterexample_report();
    return identity_failure;
  }
  return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Super Riemann-Roch calculus and virtual dimensions of stable supermaps", "superrr"};
  app.require_subcommand(1);
  Flags f;

  auto add_target_flags = [&f](CLI::App* sub) {
    sub->add_option("--target", f.target, "Target kind")->check(CLI::IsMember({"psuper", "custom", "point"}));
    sub->add_option("--r", f.r, "Even dimension of the target");
    sub->add_option("--s", f.s, "Odd dimension of the target");
    sub->add_option("--d", f.d, "Degree of the curve class in P^r");
    sub->add_option("--tau", f.tau, "Integral of ch_1(T_Y) over beta_0 (custom targets)");
    sub->add_option("--phi-int", f.phi_int, "Integral of ch_1(F_Y) over beta_0 (custom targets)");
  };
  auto add_curve_flags = [&f](CLI::App* sub) {
    sub->add_option("--g", f.g, "Genus");
    sub->add_option("--ns", f.ns, "Neveu-Schwarz punctures");
    sub->add_option("--rr", f.rr, "Ramond-Ramond punctures");
  };

  auto* vdim = app.add_subcommand("vdim", "Virtual dimension, closed form against chi^S assembly");
  add_target_flags(vdim);
  add_curve_flags(vdim);
  vdim->add_flag("--json", f.json, "JSON output");
  vdim->add_flag("--use-paper-dimmod2-sign", f.printed_sign, "Use (1-g)(s+2) in the odd part");
  vdim->add_option("--request", f.request, "JSON request, inline or @path (@- for stdin)");

  auto* chi = app.add_subcommand("chi", "chi^S of a bundle on a split supercurve");
  add_target_flags(chi);
  add_curve_flags(chi);
  chi->add_option("--bundle", f.bundle, "Bundle spec JSON, inline or @path");
  chi->add_option("--deg-l", f.deg_l, "Degree of L (default g-1+n_rr/2)");
  chi->add_flag("--json", f.json, "JSON output");

  auto* grr = app.add_subcommand("grr-check", "Randomized super GRR suite");
  grr->add_option("--seed", f.seed, "PRNG seed");
  grr->add_option("--cases", f.cases, "Number of cases");
  grr->add_flag("--json", f.json, "JSON output");

  auto* table = app.add_subcommand("table", "Sweep P^{r|s} virtual dimensions to CSV");
  add_target_flags(table);
  add_curve_flags(table);
  table->add_option("--csv", f.csv, "Output path (default stdout)");
  table->add_flag("--use-paper-dimmod2-sign", f.printed_sign, "Use (1-g)(s+2) in the odd part");

  auto* identities = app.add_subcommand("identities", "Characteristic class identity suites");
  identities->add_option("--seed", f.seed, "PRNG seed");
  identities->add_option("--cases", f.cases, "Cases per identity");
  identities->add_flag("--json", f.json, "JSON output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return validation_error;
  }

  try {
    if (vdim->parsed()) return cmd_vdim(f, out, err);
    if (chi->parsed()) return cmd_chi(f, out, err);
    if (grr->parsed()) return cmd_grr_check(f, out);
    if (table->parsed()) return cmd_table(f, out, err);
    if (identities->parsed()) return cmd_identities(f, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return validation_error;
  }
  return validation_error;
}

}  // namespace superrr::cli
