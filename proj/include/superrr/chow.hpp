#pragma once

#include <span>
#include <string>
#include <vector>

#include "superrr/superscalar.hpp"

namespace superrr {

/// Truncated graded ring A(X) (x) Q[Pi] for the bosonic reductions in use.
///
/// Each model has a single generator t in degree one with t^(top+1) = 0 and
/// integral of t^top equal to 1:
///   Point         top = 0
///   Curve(g)      t = w, the class of a point, top = 1
///   ProjSpace(r)  t = h, the hyperplane class, top = r
class ChowModel {
 public:
  enum class Kind { point, curve, proj_space };

  static ChowModel point() { return ChowModel(Kind::point, 0, 0); }
  static ChowModel curve(long genus);
  static ChowModel proj_space(long r);

  Kind kind() const { return kind_; }
  long genus() const { return genus_; }
  long dimension() const { return dimension_; }
  long top_degree() const { return dimension_; }

  friend bool operator==(const ChowModel&, const ChowModel&) = default;

  std::string to_string() const;

 private:
  ChowModel(Kind kind, long genus, long dimension) : kind_(kind), genus_(genus), dimension_(dimension) {}

  Kind kind_;
  long genus_;
  long dimension_;
};

// Throws ModelMismatch unless a == b.
void require_same_model(const ChowModel& a, const ChowModel& b, const char* what);

/// An element sum_k c_k t^k of a ChowModel ring, c_k in Q[Pi].
class GradedElement {
 public:
  // Coefficients beyond the top degree vanish in the model and are dropped;
  // missing ones are zero.
  GradedElement(ChowModel model, std::vector<SuperScalar> coeffs);
  explicit GradedElement(ChowModel model) : GradedElement(model, {}) {}

  static GradedElement zero(const ChowModel& model) { return GradedElement(model); }
  static GradedElement constant(const ChowModel& model, const SuperScalar& c) { return GradedElement(model, {c}); }
  static GradedElement one(const ChowModel& model) { return constant(model, 1); }
  // c * t^degree
  static GradedElement monomial(const ChowModel& model, long degree, const SuperScalar& c);

  const ChowModel& model() const { return model_; }
  std::span<const SuperScalar> coeffs() const { return coeffs_; }
  // Coefficient of t^k; zero outside 0..top.
  SuperScalar coeff(long k) const;

  bool is_zero() const;
  // Nonzero only in degree k (the zero element is homogeneous of every degree).
  bool is_homogeneous(long k) const;

  GradedElement operator-() const;
  GradedElement& operator+=(const GradedElement& o);
  GradedElement& operator-=(const GradedElement& o);
  GradedElement& operator*=(const GradedElement& o);
  GradedElement& operator*=(const SuperScalar& s);

  friend GradedElement operator+(GradedElement a, const GradedElement& b) { return a += b; }
  friend GradedElement operator-(GradedElement a, const GradedElement& b) { return a -= b; }
  friend GradedElement operator*(GradedElement a, const GradedElement& b) { return a *= b; }
  friend GradedElement operator*(GradedElement a, const SuperScalar& s) { return a *= s; }
  friend GradedElement operator*(const SuperScalar& s, GradedElement a) { return a *= s; }

  friend bool operator==(const GradedElement& a, const GradedElement& b) {
    return a.model_ == b.model_ && a.coeffs_ == b.coeffs_;
  }

  // e.g. "2 + 0*P + (1 + 0*P) w"
  std::string to_string() const;

 private:
  ChowModel model_;
  std::vector<SuperScalar> coeffs_;  // size top_degree + 1
};

GradedElement ring_mul(const GradedElement& x, const GradedElement& y);

// x^n for n >= 0.
GradedElement power(const GradedElement& x, long n);

// Multiplicative inverse by the truncated geometric series
//   (c + n)^-1 = c^-1 * sum_k (-c^-1 n)^k.
// Throws NotInvertible if the constant term is a zero divisor of Q[Pi].
GradedElement series_invert(const GradedElement& x);

// sum_k x^k / k! for x with zero constant term; throws NotNilpotent otherwise.
GradedElement exp_nilpotent(const GradedElement& x);

// Pushforward to a point: the coefficient of the top-degree generator power.
SuperScalar integrate(const GradedElement& x);

}  // namespace superrr
