#pragma once

#include <optional>
#include <string>

#include "superrr/grr.hpp"

namespace superrr {

struct ModuliParams {
  long g = 0;
  long n_ns = 0;
  long n_rr = 0;

  // deg F_𝒳 = g - 1 + n_rr/2 is integral.
  bool spin_degree_integral() const { return n_rr % 2 == 0; }
  void validate() const;
  std::string to_string() const;
};

/// beta = (1 - Pi) * d * beta_0, stored as the coefficient (d, -d).
struct SuperCycleClass {
  long d = 0;
  SuperScalar coefficient() const { return SuperScalar(Rational(d), Rational(-d)); }
};

/// Which printed form of the odd genus term to use in the closed formula.
///   derived:           (1-g)(s-2), forced by chi^S(phi^*T) - chi^S(G)
///   printed_plus_two:  (1-g)(s+2), as printed in the P^{r|s} specialization
enum class OddGenusTerm { derived, printed_plus_two };

std::string describe(OddGenusTerm reading);

// chi^S(G_𝒳) = (3-3g-n_ns-n_rr) - Pi(2-2g-n_ns-n_rr/2); h^0 = 0.
SuperEuler chi_gauge(const ModuliParams& p);

// Closed virtual dimension. Rational output for odd n_rr.
SuperScalar vdim_closed(const ModuliParams& p, const TargetSpec& t, OddGenusTerm reading = OddGenusTerm::derived);

// chi^S(phi^*T_𝒴) - chi^S(G_𝒳) on the SUSY curve with deg L = g-1+n_rr/2.
// Throws NonIntegralTwist for odd n_rr.
SuperScalar vdim_assembled(const ModuliParams& p, const TargetSpec& t);

// dim M^spin_{g,n_ns,n_rr}(P^r, d) + s(d + n_rr/2); psuper targets only.
Rational spin_maps_dimension(const ModuliParams& p, const TargetSpec& t);
Rational bosonic_dimension(const ModuliParams& p, const TargetSpec& t);

enum class Properness { proper, not_proper };
std::string to_string(Properness p);

// Proper iff s = 0 or d = n_rr = 0; psuper targets only.
Properness properness_hint(const TargetSpec& t, const ModuliParams& p);

struct VdimReport {
  ModuliParams params;
  TargetSpec target;
  OddGenusTerm reading = OddGenusTerm::derived;
  SuperScalar closed;
  std::optional<SuperScalar> assembled;  // absent for odd n_rr
  std::optional<Rational> bosonic_dimension;  // psuper only
  std::optional<Properness> properness;  // psuper only
  bool consistent = true;  // closed == assembled whenever the latter exists

  // Names both printed readings of the odd genus term and the mismatch.
  std::string counterexample_report() const;
};

VdimReport evaluate_vdim(const ModuliParams& p, const TargetSpec& t, OddGenusTerm reading = OddGenusTerm::derived);

}  // namespace superrr
