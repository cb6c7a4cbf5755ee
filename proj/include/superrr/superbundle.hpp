#pragma once

#include <vector>

#include "superrr/chow.hpp"

namespace superrr {

/// Split super vector bundle E = E0 + E1 given by formal Chern roots.
///
/// even_roots are the roots a_i of E0. odd_roots are the roots m_j of the
/// even bundle Pi*E1 (never the Pi-twisted roots of E1 itself), so every
/// root is a Pi-free degree-one class. The rank is
/// |even_roots| | |odd_roots|.
class SuperBundle {
 public:
  // Throws InvalidArgument for roots that are not plain degree-one classes
  // and ModelMismatch for roots living on another model.
  SuperBundle(ChowModel model, std::vector<GradedElement> even_roots, std::vector<GradedElement> odd_roots);

  // Roots d_i * t and e_j * t, t the degree-one generator of the model.
  static SuperBundle from_degrees(const ChowModel& model, const std::vector<Rational>& even_degrees,
                                  const std::vector<Rational>& odd_degrees);

  // Rank 1|0 line bundle with root d*t.
  static SuperBundle even_line(const ChowModel& model, const Rational& d) { return from_degrees(model, {d}, {}); }
  // Rank 0|1 line bundle Pi*L where L has root d*t.
  static SuperBundle odd_line(const ChowModel& model, const Rational& d) { return from_degrees(model, {}, {d}); }
  static SuperBundle zero(const ChowModel& model) { return SuperBundle(model, {}, {}); }

  const ChowModel& model() const { return model_; }
  const std::vector<GradedElement>& even_roots() const { return even_roots_; }
  const std::vector<GradedElement>& odd_roots() const { return odd_roots_; }
  long even_rank() const { return static_cast<long>(even_roots_.size()); }
  long odd_rank() const { return static_cast<long>(odd_roots_.size()); }

  // Degree-one coefficients of the roots.
  std::vector<Rational> even_degrees() const;
  std::vector<Rational> odd_degrees() const;

  friend bool operator==(const SuperBundle&, const SuperBundle&) = default;

 private:
  ChowModel model_;
  std::vector<GradedElement> even_roots_;
  std::vector<GradedElement> odd_roots_;
};

// ch(E) = sum_i exp(a_i) - Pi * sum_j exp(m_j)
GradedElement chern_character(const SuperBundle& e);

// c(E) = Pi^s * prod_i (1 + a_i) * prod_j (1 + m_j)^-1
GradedElement chern_total(const SuperBundle& e);

// Degree-one part of chern_total, as a homogeneous element.
GradedElement chern_first(const SuperBundle& e);

// td(E) = prod_i [sum_{k>=1} (-a_i)^(k-1)/k!]^-1 * prod_j (1 + exp(-m_j))
GradedElement todd(const SuperBundle& e);

// sigma_1(E) = prod_j (1 + exp(m_j)) for purely odd E; throws NotPurelyOdd.
GradedElement sigma1(const SuperBundle& e);

SuperBundle dual(const SuperBundle& e);
SuperBundle pi_shift(const SuperBundle& e);
SuperBundle direct_sum(const SuperBundle& e, const SuperBundle& f);
SuperBundle tensor(const SuperBundle& e, const SuperBundle& f);

// Todd factor of a single rank 1|0 line with root x, by inverting
// sum_{k>=1} (-x)^(k-1)/k! truncated in the model.
GradedElement todd_even_line(const GradedElement& root);

}  // namespace superrr
