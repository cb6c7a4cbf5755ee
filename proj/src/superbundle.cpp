#include "superrr/superbundle.hpp"

#include "superrr/errors.hpp"

namespace superrr {

namespace {

void check_root(const ChowModel& model, const GradedElement& root) {
  require_same_model(model, root.model(), "Chern root");
  if (!root.is_homogeneous(1)) throw InvalidArgument("Chern root must be homogeneous of degree 1: " + root.to_string());
  if (!root.coeff(1).is_plain()) throw InvalidArgument("Chern root must be Pi-free: " + root.to_string());
}

GradedElement root_of_degree(const ChowModel& model, const Rational& d) {
  return GradedElement::monomial(model, 1, SuperScalar(d));
}

std::vector<Rational> degrees_of(const std::vector<GradedElement>& roots) {
  std::vector<Rational> out;
  out.reserve(roots.size());
  for (const auto& r : roots) out.push_back(r.coeff(1).body());
  return out;
}

GradedElement sum_of_exponentials(const ChowModel& model, const std::vector<GradedElement>& roots) {
  GradedElement acc = GradedElement::zero(model);
  for (const auto& r : roots) acc += exp_nilpotent(r);
  return acc;
}

GradedElement product_of_one_plus(const ChowModel& model, const std::vector<GradedElement>& roots) {
  GradedElement acc = GradedElement::one(model);
  for (const auto& r : roots) acc *= GradedElement::one(model) + r;
  return acc;
}

}  // namespace

SuperBundle::SuperBundle(ChowModel model, std::vector<GradedElement> even_roots, std::vector<GradedElement> odd_roots)
    : model_(model), even_roots_(std::move(even_roots)), odd_roots_(std::move(odd_roots)) {
  for (const auto& r : even_roots_) check_root(model_, r);
  for (const auto& r : odd_roots_) check_root(model_, r);
}

SuperBundle SuperBundle::from_degrees(const ChowModel& model, const std::vector<Rational>& even_degrees,
                                      const std::vector<Rational>& odd_degrees) {
  std::vector<GradedElement> even;
  std::vector<GradedElement> odd;
  for (const auto& d : even_degrees) even.push_back(root_of_degree(model, d));
  for (const auto& d : odd_degrees) odd.push_back(root_of_degree(model, d));
  return SuperBundle(model, std::move(even), std::move(odd));
}

std::vector<Rational> SuperBundle::even_degrees() const { return degrees_of(even_roots_); }
std::vector<Rational> SuperBundle::odd_degrees() const { return degrees_of(odd_roots_); }

GradedElement chern_character(const SuperBundle& e) {
  const auto& m = e.model();
  return sum_of_exponentials(m, e.even_roots()) - SuperScalar::pi() * sum_of_exponentials(m, e.odd_roots());
}

GradedElement chern_total(const SuperBundle& e) {
  const auto& m = e.model();
  GradedElement c = product_of_one_plus(m, e.even_roots()) * series_invert(product_of_one_plus(m, e.odd_roots()));
  return c * SuperScalar::pi_power(e.odd_rank());
}

GradedElement chern_first(const SuperBundle& e) {
  return GradedElement::monomial(e.model(), 1, chern_total(e).coeff(1));
}

GradedElement todd_even_line(const GradedElement& root) {
  const auto& m = root.model();
  // sum_{k=1}^{top+1} (-x)^(k-1)/k!; higher terms vanish.
  GradedElement series = GradedElement::zero(m);
  GradedElement neg_power = GradedElement::one(m);
  for (long k = 1; k <= m.top_degree() + 1; ++k) {
    series += neg_power * SuperScalar(1 / factorial(k));
    neg_power *= -root;
  }
  return series_invert(series);
}

GradedElement todd(const SuperBundle& e) {
  const auto& m = e.model();
  GradedElement acc = GradedElement::one(m);
  for (const auto& a : e.even_roots()) acc *= todd_even_line(a);
  for (const auto& r : e.odd_roots()) acc *= GradedElement::one(m) + exp_nilpotent(-r);
  return acc;
}

GradedElement sigma1(const SuperBundle& e) {
  if (e.even_rank() != 0)
    throw NotPurelyOdd("sigma_1 needs a purely odd bundle, got rank " + std::to_string(e.even_rank()) + "|" +
                       std::to_string(e.odd_rank()));
  const auto& m = e.model();
  GradedElement acc = GradedElement::one(m);
  for (const auto& r : e.odd_roots()) acc *= GradedElement::one(m) + exp_nilpotent(r);
  return acc;
}

SuperBundle dual(const SuperBundle& e) {
  std::vector<GradedElement> even;
  std::vector<GradedElement> odd;
  for (const auto& r : e.even_roots()) even.push_back(-r);
  for (const auto& r : e.odd_roots()) odd.push_back(-r);
  return SuperBundle(e.model(), std::move(even), std::move(odd));
}

SuperBundle pi_shift(const SuperBundle& e) { return SuperBundle(e.model(), e.odd_roots(), e.even_roots()); }

SuperBundle direct_sum(const SuperBundle& e, const SuperBundle& f) {
  require_same_model(e.model(), f.model(), "direct sum");
  auto even = e.even_roots();
  auto odd = e.odd_roots();
  even.insert(even.end(), f.even_roots().begin(), f.even_roots().end());
  odd.insert(odd.end(), f.odd_roots().begin(), f.odd_roots().end());
  return SuperBundle(e.model(), std::move(even), std::move(odd));
}

SuperBundle tensor(const SuperBundle& e, const SuperBundle& f) {
  require_same_model(e.model(), f.model(), "tensor product");
  std::vector<GradedElement> even;
  std::vector<GradedElement> odd;
  for (const auto& a : e.even_roots()) {
    for (const auto& b : f.even_roots()) even.push_back(a + b);
    for (const auto& b : f.odd_roots()) odd.push_back(a + b);
  }
  for (const auto& a : e.odd_roots()) {
    for (const auto& b : f.even_roots()) odd.push_back(a + b);
    for (const auto& b : f.odd_roots()) even.push_back(a + b);
  }
  return SuperBundle(e.model(), std::move(even), std::move(odd));
}

}  // namespace superrr
