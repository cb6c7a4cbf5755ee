#include "superrr/grr.hpp"

#include "superrr/errors.hpp"

namespace superrr {

SplitSupercurve::SplitSupercurve(long genus, Rational deg_L) : genus_(genus), deg_L_(std::move(deg_L)) {
  if (genus < 0) throw InvalidArgument("genus must be nonnegative");
}

SplitSupercurve SplitSupercurve::susy(long genus, long n_rr) {
  if (n_rr < 0) throw InvalidArgument("number of Ramond punctures must be nonnegative");
  return SplitSupercurve(genus, Rational(genus - 1) + ratio(n_rr, 2));
}

namespace {

void check_inputs(const SplitSupercurve& c, const SuperBundle& u) {
  require_same_model(c.model(), u.model(), "bundle on split supercurve");
  if (!is_integer(c.deg_L()))
    throw NonIntegralTwist("deg L = " + to_string(c.deg_L()) + " is not an integer");
}

}  // namespace

SuperBundle gr_module(const SplitSupercurve& c, const SuperBundle& u) {
  check_inputs(c, u);
  const auto model = c.model();
  const GradedElement twist = GradedElement::monomial(model, 1, SuperScalar(c.deg_L()));

  std::vector<GradedElement> even = u.even_roots();
  std::vector<GradedElement> odd = u.odd_roots();
  for (const auto& e : u.odd_roots()) even.push_back(e + twist);
  for (const auto& d : u.even_roots()) odd.push_back(d + twist);
  return SuperBundle(model, std::move(even), std::move(odd));
}

SuperEuler chi_super(const SplitSupercurve& c, const SuperBundle& u) {
  const SuperBundle gr = gr_module(c, u);
  const NormalData nd = c.normal_data();
  const GradedElement td_super = todd(c.bosonic_tangent()) * todd(nd.normal());
  return SuperEuler(integrate(ch_twisted(KClass::of(gr), nd) * td_super));
}

SuperEuler chi_closed_form(const SplitSupercurve& c, const SuperBundle& u) {
  const GradedElement ch = chern_character(gr_module(c, u));
  return SuperEuler(SuperScalar(Rational(1 - c.genus())) * ch.coeff(0) + ch.coeff(1));
}

SuperEuler rr_oracle(const SplitSupercurve& c, const SuperBundle& u) {
  check_inputs(c, u);
  const Rational one_minus_g(1 - c.genus());
  const auto d = u.even_degrees();
  const auto e = u.odd_degrees();

  // Even part of gr: U0 and L(x)Pi U1; odd part: Pi U1 and L(x)U0.
  Rational chi_even = 0;
  Rational chi_odd = 0;
  for (const auto& x : d) {
    chi_even += x + one_minus_g;
    chi_odd += x + c.deg_L() + one_minus_g;
  }
  for (const auto& x : e) {
    chi_even += x + c.deg_L() + one_minus_g;
    chi_odd += x + one_minus_g;
  }
  return SuperEuler::from_parts(chi_even, chi_odd);
}

bool check_sgrr(const SplitSupercurve& c, const SuperBundle& u) { return chi_super(c, u) == rr_oracle(c, u); }

SuperBundle pullback_tangent(const SplitSupercurve& c, const TargetSpec& t) {
  if (t.r() < 0 || t.s() < 0) throw InvalidRank("target rank must be nonnegative");
  if (t.r() == 0 && t.tau() != 0) throw InvalidRank("rank 0 even part cannot carry degree " + to_string(t.tau()));
  if (t.s() == 0 && t.mu() != 0) throw InvalidRank("rank 0 odd part cannot carry degree " + to_string(t.mu()));

  std::vector<Rational> even(static_cast<std::size_t>(t.r()), Rational(0));
  std::vector<Rational> odd(static_cast<std::size_t>(t.s()), Rational(0));
  if (!even.empty()) even.front() = t.tau();
  if (!odd.empty()) odd.front() = t.mu();
  return SuperBundle::from_degrees(c.model(), even, odd);
}

}  // namespace superrr
