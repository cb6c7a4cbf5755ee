#include "superrr/modulidim.hpp"

#include "superrr/errors.hpp"

namespace superrr {

void ModuliParams::validate() const {
  if (g < 0 || n_ns < 0 || n_rr < 0)
    throw InvalidArgument("g, n_ns and n_rr must be nonnegative (" + to_string() + ")");
}

std::string ModuliParams::to_string() const {
  return "g=" + std::to_string(g) + ", n_ns=" + std::to_string(n_ns) + ", n_rr=" + std::to_string(n_rr);
}

std::string describe(OddGenusTerm reading) {
  switch (reading) {
    case OddGenusTerm::derived:
      return "(1-g)(s-2) [closed formula, matches chi^S(phi^*T) - chi^S(G)]";
    case OddGenusTerm::printed_plus_two:
      return "(1-g)(s+2) [printed P^{r|s} specialization]";
  }
  return "?";
}

SuperEuler chi_gauge(const ModuliParams& p) {
  p.validate();
  const Rational even = Rational(3 - 3 * p.g - p.n_ns - p.n_rr);
  const Rational odd_bracket = Rational(2 - 2 * p.g - p.n_ns) - ratio(p.n_rr, 2);
  return SuperEuler(SuperScalar(even, -odd_bracket));
}

SuperScalar vdim_closed(const ModuliParams& p, const TargetSpec& t, OddGenusTerm reading) {
  p.validate();
  const Rational one_minus_g(1 - p.g);
  const Rational half_rr = ratio(p.n_rr, 2);
  const Rational integral = t.tau() - t.phi_int();
  const long s_shift = reading == OddGenusTerm::derived ? -2 : 2;

  Rational even = Rational(t.r() - 3) * one_minus_g + p.n_ns + Rational(p.n_rr) * (1 + ratio(t.s(), 2)) + integral;
  Rational odd_bracket =
      one_minus_g * Rational(t.s() + s_shift) + p.n_ns + half_rr * Rational(t.r() + 1) + integral;
  return SuperScalar(std::move(even), -odd_bracket);
}

SuperScalar vdim_assembled(const ModuliParams& p, const TargetSpec& t) {
  p.validate();
  if (!p.spin_degree_integral())
    throw NonIntegralTwist("n_rr = " + std::to_string(p.n_rr) + " is odd; deg F = g-1+n_rr/2 is not integral");
  const SplitSupercurve curve = SplitSupercurve::susy(p.g, p.n_rr);
  const SuperEuler tangent = chi_super(curve, pullback_tangent(curve, t));
  return (tangent - chi_gauge(p)).value();
}

namespace {

void require_psuper(const TargetSpec& t, const char* what) {
  if (t.kind() != TargetSpec::Kind::psuper) throw InvalidArgument(std::string(what) + " needs a P^{r|s} target");
}

}  // namespace

Rational spin_maps_dimension(const ModuliParams& p, const TargetSpec& t) {
  require_psuper(t, "spin maps dimension");
  p.validate();
  return Rational(t.r() - 3) * Rational(1 - p.g) + p.n_ns + p.n_rr + Rational(t.d() * (t.r() + 1));
}

Rational bosonic_dimension(const ModuliParams& p, const TargetSpec& t) {
  return spin_maps_dimension(p, t) + Rational(t.s()) * (Rational(t.d()) + ratio(p.n_rr, 2));
}

std::string to_string(Properness p) { return p == Properness::proper ? "proper" : "not_proper"; }

Properness properness_hint(const TargetSpec& t, const ModuliParams& p) {
  require_psuper(t, "properness hint");
  if (t.s() == 0 || (t.d() == 0 && p.n_rr == 0)) return Properness::proper;
  return Properness::not_proper;
}

VdimReport evaluate_vdim(const ModuliParams& p, const TargetSpec& t, OddGenusTerm reading) {
  VdimReport report{p, t, reading, vdim_closed(p, t, reading), {}, {}, {}, true};
  if (p.spin_degree_integral()) {
    report.assembled = vdim_assembled(p, t);
    report.consistent = *report.assembled == report.closed;
  }
  if (t.kind() == TargetSpec::Kind::psuper) {
    report.bosonic_dimension = bosonic_dimension(p, t);
    report.properness = properness_hint(t, p);
  }
  return report;
}

std::string VdimReport::counterexample_report() const {
  std::string out = "counterexample: " + params.to_string() + ", target " + target.to_string() + "\n";
  out += "  closed (" + describe(reading) + "): " + closed.to_string() + "\n";
  if (assembled) out += "  assembled chi^S(phi^*T) - chi^S(G): " + assembled->to_string() + "\n";
  const OddGenusTerm other =
      reading == OddGenusTerm::derived ? OddGenusTerm::printed_plus_two : OddGenusTerm::derived;
  out += "  closed (" + describe(other) + "): " + vdim_closed(params, target, other).to_string() + "\n";
  return out;
}

}  // namespace superrr
