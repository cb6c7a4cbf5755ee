#include "superrr/target.hpp"

#include "superrr/errors.hpp"

namespace superrr {

TargetSpec TargetSpec::psuper(long r, long s, long d) {
  if (r < 1 || s < 0) throw InvalidRank("P^{r|s} needs r >= 1 and s >= 0");
  if (d < 0) throw InvalidArgument("curve class degree must be nonnegative");
  return TargetSpec(Kind::psuper, r, s, d, Rational(d * (r + 1)), Rational(-s * d));
}

TargetSpec TargetSpec::custom(long r, long s, Rational tau, Rational phi_int) {
  if (r < 0 || s < 0) throw InvalidRank("target rank must be nonnegative");
  return TargetSpec(Kind::custom, r, s, 0, std::move(tau), std::move(phi_int));
}

TargetSpec TargetSpec::point() { return TargetSpec(Kind::point, 0, 0, 0, 0, 0); }

std::string TargetSpec::to_string() const {
  switch (kind_) {
    case Kind::psuper:
      return "P^{" + std::to_string(r_) + "|" + std::to_string(s_) + "}, d=" + std::to_string(d_);
    case Kind::custom:
      return "custom r|s=" + std::to_string(r_) + "|" + std::to_string(s_) + ", tau=" + superrr::to_string(tau_) +
             ", phi_int=" + superrr::to_string(phi_int_);
    case Kind::point:
      return "point";
  }
  return "?";
}

}  // namespace superrr
