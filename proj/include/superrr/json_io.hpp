#pragma once

#include <optional>

#include <json.hpp>

#include "superrr/ktheory.hpp"
#include "superrr/modulidim.hpp"

namespace superrr::json_io {

using json = nlohmann::json;

// Rationals are written as strings "p/q"; integers are also accepted on input.
json encode(const Rational& q);
Rational decode_rational(const json& j);

// {"body":"p/q","soul":"r/s"}. A bare string is parsed as text ("4 - 2*P").
json encode(const SuperScalar& x);
SuperScalar decode_superscalar(const json& j);

// {"kind":"point"} | {"kind":"curve","genus":g} | {"kind":"proj_space","r":r}
json encode(const ChowModel& m);
ChowModel decode_model(const json& j);

// {"model":{...},"coeffs":[SuperScalar...]}
json encode(const GradedElement& x);
GradedElement decode_element(const json& j);

// {"model":{...},"even_roots":[["d"]...],"odd_roots":[["e"]...]}; each root
// lists its degree-one coefficient. Curve shorthand:
// {"even_degs":[d...],"odd_degs":[e...]} with the model taken from the
// object or, when absent, from default_model.
json encode(const SuperBundle& e);
SuperBundle decode_bundle(const json& j, const std::optional<ChowModel>& default_model = std::nullopt);

// {"model":{...},"ch":[SuperScalar...]}
json encode(const KClass& x);
KClass decode_kclass(const json& j);

// {"model":{...},"normal_roots":[["d"]...]}
json encode(const NormalData& nd);
NormalData decode_normal_data(const json& j);

// {"params":{"g":..,"n_ns":..,"n_rr":..},"target":{"kind":"psuper","r":..,"s":..,"d":..}}
// Custom targets carry "tau" and "phi_int" instead of "d".
struct VdimRequest {
  ModuliParams params;
  TargetSpec target;
};
VdimRequest decode_vdim_request(const json& j);
json encode(const VdimRequest& request);

// {"closed":..,"assembled":..|null,"bosonic_dimension":..|null,
//  "properness_hint":"proper"|"not_proper"|null,"consistency":bool, ...}
json encode(const VdimReport& report);

}  // namespace superrr::json_io
