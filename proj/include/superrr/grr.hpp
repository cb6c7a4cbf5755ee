#pragma once

#include <string>

#include "superrr/ktheory.hpp"
#include "superrr/target.hpp"

namespace superrr {

/// Split supercurve of dimension 1|1 with O_𝒳 = O_X + Pi*L over a genus g curve X.
class SplitSupercurve {
 public:
  SplitSupercurve(long genus, Rational deg_L);
  // SUSY curve with n_rr Ramond punctures: deg L = g - 1 + n_rr/2.
  static SplitSupercurve susy(long genus, long n_rr = 0);

  long genus() const { return genus_; }
  const Rational& deg_L() const { return deg_L_; }
  ChowModel model() const { return ChowModel::curve(genus_); }

  // N* = J/J^2 = Pi*L.
  NormalData normal_data() const { return NormalData::from_degrees(model(), {deg_L_}); }
  // T_X, degree 2 - 2g.
  SuperBundle bosonic_tangent() const { return SuperBundle::even_line(model(), Rational(2 - 2 * genus_)); }

 private:
  long genus_;
  Rational deg_L_;
};

/// chi^S(x) = chi(x_+) - Pi * chi(x_-).
class SuperEuler {
 public:
  SuperEuler() = default;
  explicit SuperEuler(SuperScalar value) : value_(std::move(value)) {}
  static SuperEuler from_parts(const Rational& chi_even, const Rational& chi_odd) {
    return SuperEuler(SuperScalar(chi_even, -chi_odd));
  }

  const SuperScalar& value() const { return value_; }
  const Rational& chi_even() const { return value_.body(); }
  Rational chi_odd() const { return -value_.soul(); }

  friend SuperEuler operator+(const SuperEuler& a, const SuperEuler& b) { return SuperEuler(a.value_ + b.value_); }
  friend SuperEuler operator-(const SuperEuler& a, const SuperEuler& b) { return SuperEuler(a.value_ - b.value_); }
  friend bool operator==(const SuperEuler&, const SuperEuler&) = default;

  std::string to_string() const { return value_.to_string(); }

 private:
  SuperScalar value_;
};

// gr E = [U0 + L(x)Pi U1] + Pi[Pi U1 + L(x)U0] for a bundle on 𝒳 with E/JE = U.
// Even roots {d_i} u {e_j + deg L}, odd roots {e_j} u {d_i + deg L}.
// Throws ModelMismatch, NonIntegralTwist.
SuperBundle gr_module(const SplitSupercurve& c, const SuperBundle& u);

// f_*(ch^S(cl gr E) * td(cl^S T_𝒳)), with td(T_𝒳) = td(T_X) * td(N).
SuperEuler chi_super(const SplitSupercurve& c, const SuperBundle& u);

// (1-g) ch_0 + deg ch_1 of the class of gr E.
SuperEuler chi_closed_form(const SplitSupercurve& c, const SuperBundle& u);

// Componentwise Riemann-Roch chi = deg + rank(1-g) on the even and odd
// parts of gr E, computed from the root degrees of U directly.
SuperEuler rr_oracle(const SplitSupercurve& c, const SuperBundle& u);

// chi_super == rr_oracle.
bool check_sgrr(const SplitSupercurve& c, const SuperBundle& u);

// gr model of phi^*T_𝒴 on the curve: r even roots (tau*w, 0, ...) and
// s odd roots (mu*w, 0, ...), mu = -phi_int. A zero rank is allowed only
// with a zero total degree. Throws InvalidRank.
SuperBundle pullback_tangent(const SplitSupercurve& c, const TargetSpec& t);

}  // namespace superrr
