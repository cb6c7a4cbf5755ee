#include "superrr/chow.hpp"

#include "superrr/errors.hpp"

namespace superrr {

ChowModel ChowModel::curve(long genus) {
  if (genus < 0) throw InvalidArgument("curve genus must be nonnegative, got " + std::to_string(genus));
  return ChowModel(Kind::curve, genus, 1);
}

ChowModel ChowModel::proj_space(long r) {
  if (r < 1) throw InvalidArgument("projective space dimension must be positive, got " + std::to_string(r));
  return ChowModel(Kind::proj_space, 0, r);
}

std::string ChowModel::to_string() const {
  switch (kind_) {
    case Kind::point:
      return "Point";
    case Kind::curve:
      return "Curve(g=" + std::to_string(genus_) + ")";
    case Kind::proj_space:
      return "P^" + std::to_string(dimension_);
  }
  return "?";
}

void require_same_model(const ChowModel& a, const ChowModel& b, const char* what) {
  if (!(a == b)) throw ModelMismatch(std::string(what) + ": " + a.to_string() + " vs " + b.to_string());
}

GradedElement::GradedElement(ChowModel model, std::vector<SuperScalar> coeffs)
    : model_(model), coeffs_(std::move(coeffs)) {
  coeffs_.resize(static_cast<std::size_t>(model_.top_degree() + 1));
}

GradedElement GradedElement::monomial(const ChowModel& model, long degree, const SuperScalar& c) {
  GradedElement out(model);
  if (degree >= 0 && degree <= model.top_degree()) out.coeffs_[static_cast<std::size_t>(degree)] = c;
  return out;
}

SuperScalar GradedElement::coeff(long k) const {
  if (k < 0 || k > model_.top_degree()) return {};
  return coeffs_[static_cast<std::size_t>(k)];
}

bool GradedElement::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool GradedElement::is_homogeneous(long k) const {
  for (long i = 0; i <= model_.top_degree(); ++i) {
    if (i != k && !coeffs_[static_cast<std::size_t>(i)].is_zero()) return false;
  }
  return true;
}

GradedElement GradedElement::operator-() const {
  GradedElement out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

GradedElement& GradedElement::operator+=(const GradedElement& o) {
  require_same_model(model_, o.model_, "graded sum");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

GradedElement& GradedElement::operator-=(const GradedElement& o) {
  require_same_model(model_, o.model_, "graded difference");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

GradedElement& GradedElement::operator*=(const GradedElement& o) {
  require_same_model(model_, o.model_, "graded product");
  const std::size_t n = coeffs_.size();
  std::vector<SuperScalar> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < n; ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  return *this;
}

GradedElement& GradedElement::operator*=(const SuperScalar& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

std::string GradedElement::to_string() const {
  const char* gen = model_.kind() == ChowModel::Kind::curve ? "w" : "h";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (k > 0) out += " + ";
    out += "(" + coeffs_[k].to_string() + ")";
    if (k == 1) out += std::string(" ") + gen;
    if (k > 1) out += std::string(" ") + gen + "^" + std::to_string(k);
  }
  return out;
}

GradedElement ring_mul(const GradedElement& x, const GradedElement& y) { return x * y; }

GradedElement power(const GradedElement& x, long n) {
  GradedElement acc = GradedElement::one(x.model());
  for (long i = 0; i < n; ++i) acc *= x;
  return acc;
}

GradedElement series_invert(const GradedElement& x) {
  const SuperScalar lead = x.coeff(0);
  if (!lead.is_invertible())
    throw NotInvertible("constant term " + lead.to_string() + " is not a unit of Q[Pi]");
  const SuperScalar lead_inv = lead.inverse();

  // u = c^-1 * (x - c) is nilpotent of order top + 1.
  GradedElement u = x - GradedElement::constant(x.model(), lead);
  u *= lead_inv;
  GradedElement sum = GradedElement::one(x.model());
  GradedElement term = GradedElement::one(x.model());
  for (long k = 1; k <= x.model().top_degree(); ++k) {
    term *= u;
    term = -term;
    sum += term;
  }
  return sum * lead_inv;
}

GradedElement exp_nilpotent(const GradedElement& x) {
  if (!x.coeff(0).is_zero())
    throw NotNilpotent("exp needs a zero constant term, got " + x.coeff(0).to_string());
  GradedElement sum = GradedElement::one(x.model());
  GradedElement term = GradedElement::one(x.model());
  for (long k = 1; k <= x.model().top_degree(); ++k) {
    term *= x;
    term *= SuperScalar(ratio(1, k));
    sum += term;
  }
  return sum;
}

SuperScalar integrate(const GradedElement& x) { return x.coeff(x.model().top_degree()); }

}  // namespace superrr
