#pragma once

#include <vector>

#include "superrr/superbundle.hpp"

namespace superrr {

/// Conormal data of the embedding X -> 𝒳 of the bosonic reduction.
///
/// normal_roots are the Chern roots of the even bundle Pi*N*; for a split
/// supercurve with O = O_X + Pi*L this is the single root c_1(L).
class NormalData {
 public:
  NormalData(ChowModel model, std::vector<GradedElement> normal_roots);
  static NormalData from_degrees(const ChowModel& model, const std::vector<Rational>& degrees);
  // 𝒳 = X, no odd directions.
  static NormalData bosonic(const ChowModel& model) { return NormalData(model, {}); }

  const ChowModel& model() const { return model_; }
  const std::vector<GradedElement>& normal_roots() const { return normal_roots_; }

  // N* as a purely odd bundle of rank 0|s.
  SuperBundle conormal() const;
  // N = dual of N*.
  SuperBundle normal() const;

 private:
  ChowModel model_;
  std::vector<GradedElement> normal_roots_;
};

/// A class in K_S(X) (x) Q, identified with its Chern character image.
class KClass {
 public:
  explicit KClass(GradedElement ch_image) : ch_image_(std::move(ch_image)) {}
  static KClass of(const SuperBundle& e) { return KClass(chern_character(e)); }
  static KClass one(const ChowModel& model) { return KClass(GradedElement::one(model)); }

  const ChowModel& model() const { return ch_image_.model(); }
  const GradedElement& ch() const { return ch_image_; }

  // Ordinary (tensor) product in K_S(X).
  friend KClass operator*(const KClass& x, const KClass& y) { return KClass(x.ch_image_ * y.ch_image_); }
  friend KClass operator+(const KClass& x, const KClass& y) { return KClass(x.ch_image_ + y.ch_image_); }
  friend bool operator==(const KClass& x, const KClass& y) { return x.ch_image_ == y.ch_image_; }

 private:
  GradedElement ch_image_;
};

// sigma_1(N*) = sum_i cl(Pi^i Sym^i N*), the unit of the *-product.
GradedElement sigma1_normal(const NormalData& nd);

// j(x) = x * sigma_1(N*)
KClass j_map(const KClass& x, const NormalData& nd);

// x * y * sigma_1(N*)^-1
KClass star_product(const KClass& x, const KClass& y, const NormalData& nd);

// ch^S(x) = ch(x * sigma_1(N*)^-1)
GradedElement ch_twisted(const KClass& x, const NormalData& nd);

// i_*(ch(x) * td(-cl^S N)) with td(-cl^S N) = td(N)^-1 computed from the
// Todd character of the normal bundle; i_* is the identity on GK_S(X).
GradedElement embedding_riemann_roch(const KClass& x, const NormalData& nd);

// f_S^! along the structure morphism f: 𝒳 -> point, for x a class on the
// point (which has no odd directions): f^*(x) * sigma_1(N*_𝒳).
KClass structure_pullback(const KClass& x_on_point, const NormalData& nd);

// f^* on GK_S: a scalar becomes a constant class.
GradedElement pullback_from_point(const GradedElement& x_on_point, const ChowModel& target);

}  // namespace superrr
