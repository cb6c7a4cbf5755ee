#pragma once

#include <string>
#include <string_view>

#include "superrr/rational.hpp"

namespace superrr {

/// Element body + Pi*soul of Q[Pi] with Pi^2 = 1.
///
/// The supercycle convention m - Pi*n maps to body = m, soul = -n, so
/// beta = (1 - Pi) * d * beta0 is stored as (d, -d).
class SuperScalar {
 public:
  SuperScalar() = default;
  SuperScalar(Rational body, Rational soul = 0) : body_(std::move(body)), soul_(std::move(soul)) {}
  SuperScalar(long body) : body_(body) {}

  static SuperScalar pi() { return {0, 1}; }
  static SuperScalar pi_power(long k) { return (k % 2 == 0) ? SuperScalar(1) : pi(); }

  const Rational& body() const { return body_; }
  const Rational& soul() const { return soul_; }

  bool is_zero() const { return body_ == 0 && soul_ == 0; }
  // An element of Q with no Pi component.
  bool is_plain() const { return soul_ == 0; }

  // a + Pi*b is a unit iff (a+b)(a-b) != 0.
  bool is_invertible() const { return body_ * body_ != soul_ * soul_; }

  // Throws NotInvertible when body^2 == soul^2.
  SuperScalar inverse() const;

  // Image under Pi -> -Pi.
  SuperScalar conjugate() const { return {body_, -soul_}; }

  SuperScalar operator-() const { return {-body_, -soul_}; }

  SuperScalar& operator+=(const SuperScalar& o) {
    body_ += o.body_;
    soul_ += o.soul_;
    return *this;
  }
  SuperScalar& operator-=(const SuperScalar& o) {
    body_ -= o.body_;
    soul_ -= o.soul_;
    return *this;
  }
  SuperScalar& operator*=(const SuperScalar& o);

  friend SuperScalar operator+(SuperScalar a, const SuperScalar& b) { return a += b; }
  friend SuperScalar operator-(SuperScalar a, const SuperScalar& b) { return a -= b; }
  friend SuperScalar operator*(SuperScalar a, const SuperScalar& b) { return a *= b; }

  friend bool operator==(const SuperScalar& a, const SuperScalar& b) {
    return a.body_ == b.body_ && a.soul_ == b.soul_;
  }

  // "A + B*P"; a non-integral Pi coefficient is parenthesized, e.g. "1/2 - (3/4)*P".
  std::string to_string() const;

  // Accepts sums of rational and rational*P terms in any order, e.g.
  // "4 - 2*P", "(1/2)*P", "-P", "3".
  static SuperScalar parse(std::string_view text);

 private:
  Rational body_ = 0;
  Rational soul_ = 0;
};

SuperScalar mul(const SuperScalar& x, const SuperScalar& y);
SuperScalar invert(const SuperScalar& x);

}  // namespace superrr
