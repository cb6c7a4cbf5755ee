#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "superrr/grr.hpp"

namespace superrr::suites {

/// Integer root degrees of a split bundle on a model.
struct DegreeList {
  std::vector<long> even;
  std::vector<long> odd;
};

/// One randomized instance: a model, up to two bundles, conormal roots and,
/// for the GRR suite, the degree of L.
struct Case {
  ChowModel model = ChowModel::point();
  DegreeList first;
  DegreeList second;
  std::vector<long> normal;
  long deg_L = 0;

  SuperBundle bundle_first() const;
  SuperBundle bundle_second() const;
  NormalData normal_data() const;
  std::string to_string() const;
};

struct SuiteResult {
  std::string name;
  long cases = 0;
  long passed = 0;
  std::optional<Case> counterexample;  // shrunk
  std::string detail;                  // failure description for the counterexample

  bool ok() const { return passed == cases; }
  std::string summary() const;
};

using Predicate = std::function<bool(const Case&)>;

struct Generator {
  long max_even_rank = 3;
  long max_odd_rank = 3;
  long max_abs_degree = 5;
  long max_genus = 3;
  long max_proj_dim = 4;
  bool curves_only = false;

  Case operator()(std::mt19937_64& rng) const;
};

// Greedy shrink towards fewer roots and smaller degrees while pred fails.
Case shrink(Case c, const Predicate& pred);

SuiteResult run_property(const std::string& name, const Generator& gen, const Predicate& pred, std::uint64_t seed,
                         long cases);

// check_sgrr on random split supercurves (g <= 3, ranks <= 3|3, degrees in -5..5).
SuiteResult run_grr_suite(std::uint64_t seed, long cases);

// Whitney, ch additivity and multiplicativity, Pi-shift and dual rules,
// Todd multiplicativity and Todd = ch sigma_1(dual), j and *-product
// compatibilities, embedding Riemann-Roch.
std::vector<SuiteResult> run_identity_suites(std::uint64_t seed, long cases);

}  // namespace superrr::suites
