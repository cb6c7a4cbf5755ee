#include "superrr/json_io.hpp"

#include "superrr/errors.hpp"

namespace superrr::json_io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

long integer_field(const json& j, const char* key, std::optional<long> fallback = std::nullopt) {
  if (!j.is_object() || !j.contains(key)) {
    if (fallback) return *fallback;
    throw ParseError(std::string("missing field '") + key + "'");
  }
  const json& v = j.at(key);
  if (!v.is_number_integer()) throw ParseError(std::string("field '") + key + "' must be an integer");
  return v.get<long>();
}

std::vector<GradedElement> decode_roots(const json& j, const ChowModel& model) {
  if (!j.is_array()) throw ParseError("roots must be an array");
  std::vector<GradedElement> roots;
  for (const auto& r : j) {
    Rational d;
    if (r.is_array()) {
      if (r.size() != 1) throw ParseError("a root lists exactly one degree-one coefficient");
      d = decode_rational(r.front());
    } else {
      d = decode_rational(r);
    }
    roots.push_back(GradedElement::monomial(model, 1, SuperScalar(d)));
  }
  return roots;
}

json encode_roots(const std::vector<GradedElement>& roots) {
  json out = json::array();
  for (const auto& r : roots) out.push_back(json::array({encode(r.coeff(1).body())}));
  return out;
}

std::vector<SuperScalar> decode_coeffs(const json& j) {
  if (!j.is_array()) throw ParseError("coeffs must be an array");
  std::vector<SuperScalar> out;
  for (const auto& c : j) out.push_back(decode_superscalar(c));
  return out;
}

json encode_coeffs(const GradedElement& x) {
  json out = json::array();
  for (const auto& c : x.coeffs()) out.push_back(encode(c));
  return out;
}

std::vector<Rational> decode_degrees(const json& j) {
  if (!j.is_array()) throw ParseError("degree list must be an array");
  std::vector<Rational> out;
  for (const auto& d : j) out.push_back(decode_rational(d));
  return out;
}

}  // namespace

json encode(const Rational& q) { return to_string(q); }

Rational decode_rational(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ParseError("expected a rational as string or integer, got " + j.dump());
}

json encode(const SuperScalar& x) { return json{{"body", encode(x.body())}, {"soul", encode(x.soul())}}; }

SuperScalar decode_superscalar(const json& j) {
  if (j.is_string()) return SuperScalar::parse(j.get<std::string>());
  if (j.is_number_integer()) return SuperScalar(j.get<long>());
  return SuperScalar(decode_rational(field(j, "body")), decode_rational(field(j, "soul")));
}

json encode(const ChowModel& m) {
  switch (m.kind()) {
    case ChowModel::Kind::point:
      return json{{"kind", "point"}};
    case ChowModel::Kind::curve:
      return json{{"kind", "curve"}, {"genus", m.genus()}};
    case ChowModel::Kind::proj_space:
      return json{{"kind", "proj_space"}, {"r", m.dimension()}};
  }
  return {};
}

ChowModel decode_model(const json& j) {
  const json& kind = field(j, "kind");
  if (!kind.is_string()) throw ParseError("model kind must be a string");
  const auto k = kind.get<std::string>();
  if (k == "point") return ChowModel::point();
  if (k == "curve") return ChowModel::curve(integer_field(j, "genus"));
  if (k == "proj_space") return ChowModel::proj_space(integer_field(j, "r"));
  throw ParseError("unknown model kind '" + k + "'");
}

json encode(const GradedElement& x) { return json{{"model", encode(x.model())}, {"coeffs", encode_coeffs(x)}}; }

GradedElement decode_element(const json& j) {
  const ChowModel model = decode_model(field(j, "model"));
  auto coeffs = decode_coeffs(field(j, "coeffs"));
  if (static_cast<long>(coeffs.size()) > model.top_degree() + 1)
    throw ParseError("too many coefficients for " + model.to_string());
  return GradedElement(model, std::move(coeffs));
}

json encode(const SuperBundle& e) {
  return json{{"model", encode(e.model())},
              {"even_roots", encode_roots(e.even_roots())},
              {"odd_roots", encode_roots(e.odd_roots())}};
}

SuperBundle decode_bundle(const json& j, const std::optional<ChowModel>& default_model) {
  if (!j.is_object()) throw ParseError("bundle spec must be an object");
  std::optional<ChowModel> model = default_model;
  if (j.contains("model")) model = decode_model(j.at("model"));
  if (!model) throw ParseError("bundle spec needs a model");

  const bool shorthand = j.contains("even_degs") || j.contains("odd_degs");
  if (shorthand) {
    if (j.contains("even_roots") || j.contains("odd_roots"))
      throw ParseError("bundle spec mixes roots and degree shorthand");
    if (model->kind() != ChowModel::Kind::curve) throw ParseError("degree shorthand is for curve models");
    const auto even = j.contains("even_degs") ? decode_degrees(j.at("even_degs")) : std::vector<Rational>{};
    const auto odd = j.contains("odd_degs") ? decode_degrees(j.at("odd_degs")) : std::vector<Rational>{};
    return SuperBundle::from_degrees(*model, even, odd);
  }
  auto even = j.contains("even_roots") ? decode_roots(j.at("even_roots"), *model) : std::vector<GradedElement>{};
  auto odd = j.contains("odd_roots") ? decode_roots(j.at("odd_roots"), *model) : std::vector<GradedElement>{};
  return SuperBundle(*model, std::move(even), std::move(odd));
}

json encode(const KClass& x) { return json{{"model", encode(x.model())}, {"ch", encode_coeffs(x.ch())}}; }

KClass decode_kclass(const json& j) {
  const ChowModel model = decode_model(field(j, "model"));
  auto coeffs = decode_coeffs(field(j, "ch"));
  if (static_cast<long>(coeffs.size()) > model.top_degree() + 1)
    throw ParseError("too many coefficients for " + model.to_string());
  return KClass(GradedElement(model, std::move(coeffs)));
}

json encode(const NormalData& nd) {
  return json{{"model", encode(nd.model())}, {"normal_roots", encode_roots(nd.normal_roots())}};
}

NormalData decode_normal_data(const json& j) {
  const ChowModel model = decode_model(field(j, "model"));
  return NormalData(model, decode_roots(field(j, "normal_roots"), model));
}

VdimRequest decode_vdim_request(const json& j) {
  const json& p = field(j, "params");
  ModuliParams params{integer_field(p, "g"), integer_field(p, "n_ns", 0), integer_field(p, "n_rr", 0)};
  params.validate();

  const json& t = field(j, "target");
  const json& kind = field(t, "kind");
  if (!kind.is_string()) throw ParseError("target kind must be a string");
  const auto k = kind.get<std::string>();
  if (k == "psuper")
    return {params, TargetSpec::psuper(integer_field(t, "r"), integer_field(t, "s", 0), integer_field(t, "d"))};
  if (k == "custom")
    return {params, TargetSpec::custom(integer_field(t, "r"), integer_field(t, "s", 0),
                                       decode_rational(field(t, "tau")), decode_rational(field(t, "phi_int")))};
  if (k == "point") return {params, TargetSpec::point()};
  throw ParseError("unknown target kind '" + k + "'");
}

json encode(const VdimRequest& request) {
  const auto& t = request.target;
  json target;
  switch (t.kind()) {
    case TargetSpec::Kind::psuper:
      target = json{{"kind", "psuper"}, {"r", t.r()}, {"s", t.s()}, {"d", t.d()}};
      break;
    case TargetSpec::Kind::custom:
      target = json{{"kind", "custom"}, {"r", t.r()}, {"s", t.s()}, {"tau", encode(t.tau())},
                    {"phi_int", encode(t.phi_int())}};
      break;
    case TargetSpec::Kind::point:
      target = json{{"kind", "point"}};
      break;
  }
  const auto& p = request.params;
  return json{{"params", {{"g", p.g}, {"n_ns", p.n_ns}, {"n_rr", p.n_rr}}}, {"target", target}};
}

json encode(const VdimReport& report) {
  json out = encode(VdimRequest{report.params, report.target});
  out["odd_genus_term"] = describe(report.reading);
  out["closed"] = encode(report.closed);
  out["closed_text"] = report.closed.to_string();
  out["assembled"] = report.assembled ? encode(*report.assembled) : json(nullptr);
  out["bosonic_dimension"] = report.bosonic_dimension ? encode(*report.bosonic_dimension) : json(nullptr);
  out["properness_hint"] = report.properness ? json(to_string(*report.properness)) : json(nullptr);
  out["consistency"] = report.consistent;
  return out;
}

}  // namespace superrr::json_io
