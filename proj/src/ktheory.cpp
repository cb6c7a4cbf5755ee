#include "superrr/ktheory.hpp"

#include "superrr/errors.hpp"

namespace superrr {

NormalData::NormalData(ChowModel model, std::vector<GradedElement> normal_roots)
    : model_(model), normal_roots_(std::move(normal_roots)) {
  // Validates the roots.
  (void)conormal();
}

NormalData NormalData::from_degrees(const ChowModel& model, const std::vector<Rational>& degrees) {
  return NormalData(model, SuperBundle::from_degrees(model, {}, degrees).odd_roots());
}

SuperBundle NormalData::conormal() const { return SuperBundle(model_, {}, normal_roots_); }

SuperBundle NormalData::normal() const { return dual(conormal()); }

GradedElement sigma1_normal(const NormalData& nd) { return sigma1(nd.conormal()); }

KClass j_map(const KClass& x, const NormalData& nd) {
  require_same_model(x.model(), nd.model(), "j map");
  return KClass(x.ch() * sigma1_normal(nd));
}

KClass star_product(const KClass& x, const KClass& y, const NormalData& nd) {
  require_same_model(x.model(), y.model(), "star product");
  require_same_model(x.model(), nd.model(), "star product");
  return KClass(x.ch() * y.ch() * series_invert(sigma1_normal(nd)));
}

GradedElement ch_twisted(const KClass& x, const NormalData& nd) {
  require_same_model(x.model(), nd.model(), "twisted character");
  return x.ch() * series_invert(sigma1_normal(nd));
}

GradedElement embedding_riemann_roch(const KClass& x, const NormalData& nd) {
  require_same_model(x.model(), nd.model(), "embedding Riemann-Roch");
  return x.ch() * series_invert(todd(nd.normal()));
}

GradedElement pullback_from_point(const GradedElement& x_on_point, const ChowModel& target) {
  require_same_model(x_on_point.model(), ChowModel::point(), "pullback from a point");
  return GradedElement::constant(target, x_on_point.coeff(0));
}

KClass structure_pullback(const KClass& x_on_point, const NormalData& nd) {
  return KClass(pullback_from_point(x_on_point.ch(), nd.model()) * sigma1_normal(nd));
}

}  // namespace superrr
