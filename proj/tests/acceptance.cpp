// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "superrr/modulidim.hpp"
#include "superrr/suites.hpp"
#include "support/oracles.hpp"

using namespace superrr;

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

void report(int id, const std::string& title, bool pass, const std::string& detail) {
  std::printf("[%s] %d %s: %s\n", pass ? "PASS" : "FAIL", id, title.c_str(), detail.c_str());
  if (!pass) ++failures;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f s", s);
  return buf;
}

// Calls f(g, ns, rr, r, s, d) over the full P^{r|s} sweep.
void sweep(const std::function<void(long, long, long, long, long, long)>& f) {
  for (long g = 0; g <= 3; ++g)
    for (long ns = 0; ns <= 4; ++ns)
      for (long rr = 0; rr <= 6; rr += 2)
        for (long r = 1; r <= 4; ++r)
          for (long s = 0; s <= 3; ++s)
            for (long d = 0; d <= 3; ++d) f(g, ns, rr, r, s, d);
}

void criterion_1() {
  const auto start = Clock::now();
  long points = 0, equal = 0;
  std::string first_bad;
  sweep([&](long g, long ns, long rr, long r, long s, long d) {
    const ModuliParams p{g, ns, rr};
    const auto t = TargetSpec::psuper(r, s, d);
    ++points;
    if (vdim_closed(p, t) == vdim_assembled(p, t)) {
      ++equal;
    } else if (first_bad.empty()) {
      first_bad = "; first mismatch " + p.to_string() + " " + t.to_string();
    }
  });
  const double secs = seconds_since(start);
  const double limit = 10.0;
  report(1, "closed vs assembled virtual dimension", equal == points && secs < limit,
         std::to_string(equal) + "/" + std::to_string(points) + " sweep points exactly equal in " +
             fmt_seconds(secs) + " (limit 10 s)" + first_bad);
}

void criterion_2() {
  bool gauge_ok = true;
  for (long g = 0; g <= 5; ++g) {
    const auto chi = chi_gauge({g, 0, 0});
    gauge_ok = gauge_ok && chi.chi_even() == 3 - 3 * g && chi.chi_odd() == 2 - 2 * g;
  }

  // s = 0, no punctures: (1-g)(r-3) - Pi(2g-2) + (1-Pi) tau, term by term.
  long special_terms = 0, special_ok = 0;
  for (long g = 0; g <= 5; ++g) {
    for (long r = 1; r <= 4; ++r) {
      for (long d = 0; d <= 3; ++d) {
        const auto t = TargetSpec::psuper(r, 0, d);
        const Rational tau = t.tau();
        const Rational lit_body = Rational((1 - g) * (r - 3)) + tau;
        const Rational lit_soul = -Rational(2 * g - 2) - tau;
        for (const auto& v : {vdim_closed({g, 0, 0}, t), vdim_assembled({g, 0, 0}, t)}) {
          special_terms += 2;
          special_ok += (v.body() == lit_body) + (v.soul() == lit_soul);
        }
      }
      for (long tau = -6; tau <= 6; ++tau) {
        const auto t = TargetSpec::custom(r, 0, tau, 0);
        const auto v = vdim_closed({g, 0, 0}, t);
        special_terms += 2;
        special_ok += (v.body() == Rational((1 - g) * (r - 3) + tau)) + (v.soul() == Rational(2 - 2 * g - tau));
      }
    }
  }

  long points = 0, d_ok = 0;
  sweep([&](long g, long ns, long rr, long r, long s, long d) {
    const ModuliParams p{g, ns, rr};
    const auto t = TargetSpec::psuper(r, s, d);
    ++points;
    if (bosonic_dimension(p, t) == vdim_closed(p, t).body()) ++d_ok;
  });

  report(2, "reproduction of printed values",
         gauge_ok && special_ok == special_terms && d_ok == points,
         std::string("gauge Euler data g=0..5 ") + (gauge_ok ? "exact" : "MISMATCH") + "; s=0 specialization " +
             std::to_string(special_ok) + "/" + std::to_string(special_terms) + " terms; D = even part " +
             std::to_string(d_ok) + "/" + std::to_string(points) + " points");
}

void criterion_3() {
  const auto start = Clock::now();
  const auto result = suites::run_grr_suite(20240601, 1000);
  const double secs = seconds_since(start);
  std::string detail = std::to_string(result.passed) + "/" + std::to_string(result.cases) +
                       " random split supercurves, chi_super == rr_oracle, " + fmt_seconds(secs) + " (limit 2 s)";
  if (result.counterexample) detail += "; counterexample " + result.counterexample->to_string();
  report(3, "super GRR on split supercurves", result.ok() && result.cases >= 1000 && secs < 2.0, detail);
}

void criterion_4() {
  const auto start = Clock::now();
  const long cases = 500;
  const auto results = suites::run_identity_suites(777, cases);
  const double secs = seconds_since(start);
  bool ok = secs < 5.0;
  long total = 0;
  std::string failed;
  for (const auto& r : results) {
    total += r.cases;
    if (!r.ok() || r.cases < cases) {
      ok = false;
      failed += "; " + r.summary();
      if (r.counterexample) failed += " at " + r.counterexample->to_string();
    }
  }
  report(4, "characteristic class identity suites", ok,
         std::to_string(results.size()) + " identities x " + std::to_string(cases) + " cases (" +
             std::to_string(total) + " total) in " + fmt_seconds(secs) + " (limit 5 s)" + failed);
}

// C(k + r, r) as the polynomial (k+1)(k+2)...(k+r)/r!, valid for negative k.
Rational binomial_polynomial(long k, long r) {
  Rational num = 1;
  for (long i = 1; i <= r; ++i) num *= Rational(k + i);
  return num / oracle::factorial_oracle(r);
}

void criterion_5() {
  long cases = 0, ok = 0;
  for (long r = 1; r <= 4; ++r) {
    const auto m = ChowModel::proj_space(r);
    // T_{P^r} + O = (r+1) O(1)
    const auto tangent_plus_one = SuperBundle::from_degrees(m, std::vector<Rational>(r + 1, Rational(1)), {});
    const auto td = todd(tangent_plus_one);
    for (long k = -3; k <= 6; ++k) {
      const auto value = integrate(chern_character(SuperBundle::even_line(m, k)) * td);
      ++cases;
      if (value == SuperScalar(binomial_polynomial(k, r)) && value == SuperScalar(oracle::chi_projective_line_bundle(r, k)))
        ++ok;
    }
  }
  report(5, "bosonic Hirzebruch-Riemann-Roch on P^r", ok == cases,
         std::to_string(ok) + "/" + std::to_string(cases) + " pairs (r=1..4, k=-3..6) equal C(k+r, r)");
}

void criterion_6() {
  long failing = 0;
  std::optional<VdimReport> witness;
  sweep([&](long g, long ns, long rr, long r, long s, long d) {
    const auto rep = evaluate_vdim({g, ns, rr}, TargetSpec::psuper(r, s, d), OddGenusTerm::printed_plus_two);
    if (!rep.consistent && g != 1 && s > 0) {
      ++failing;
      if (!witness) witness = rep;
    }
  });
  bool names_both = false;
  if (witness) {
    const auto text = witness->counterexample_report();
    names_both = text.find("(1-g)(s-2)") != std::string::npos && text.find("(1-g)(s+2)") != std::string::npos;
  }

  // The same check through the command line flag.
  std::ostringstream out, err;
  const int code = cli::run({"table", "--g", "0", "--use-paper-dimmod2-sign"}, out, err);
  const bool cli_ok = code == cli::identity_failure && err.str().find("(1-g)(s-2)") != std::string::npos &&
                      err.str().find("(1-g)(s+2)") != std::string::npos;

  std::string detail = std::to_string(failing) + " inconsistent points with g != 1, s > 0";
  if (witness) detail += "; first " + witness->params.to_string() + " " + witness->target.to_string();
  detail += std::string("; report names both readings: ") + (names_both ? "yes" : "no") +
            "; table --use-paper-dimmod2-sign exit " + std::to_string(code);
  report(6, "printed odd genus term regression", failing > 0 && names_both && cli_ok, detail);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  std::printf("%s: %d of 6 criteria failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
