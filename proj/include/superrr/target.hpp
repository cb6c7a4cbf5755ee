#pragma once

#include <string>

#include "superrr/rational.hpp"

namespace superrr {

/// Target superscheme 𝒴 of dimension r|s together with the two integrals
/// over beta_0 that enter the dimension count:
///   tau     = int_{beta_0} ch_1(T_Y)
///   phi_int = int_{beta_0} ch_1(F_𝒴)
class TargetSpec {
 public:
  enum class Kind { psuper, custom, point };

  // P^{r|s} with beta_0 = d*H: tau = d(r+1), phi_int = -s*d.
  static TargetSpec psuper(long r, long s, long d);
  static TargetSpec custom(long r, long s, Rational tau, Rational phi_int);
  // Constant maps to a point: r = s = 0 and both integrals vanish.
  static TargetSpec point();

  Kind kind() const { return kind_; }
  long r() const { return r_; }
  long s() const { return s_; }
  // Degree d; only meaningful for psuper.
  long d() const { return d_; }
  const Rational& tau() const { return tau_; }
  const Rational& phi_int() const { return phi_int_; }
  // Total degree of the odd part of phi^*T_𝒴 on the curve, -phi_int.
  Rational mu() const { return -phi_int_; }

  std::string to_string() const;

 private:
  TargetSpec(Kind kind, long r, long s, long d, Rational tau, Rational phi_int)
      : kind_(kind), r_(r), s_(s), d_(d), tau_(std::move(tau)), phi_int_(std::move(phi_int)) {}

  Kind kind_;
  long r_;
  long s_;
  long d_;
  Rational tau_;
  Rational phi_int_;
};

}  // namespace superrr
