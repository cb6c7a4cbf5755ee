#include <doctest.h>

#include "superrr/errors.hpp"
#include "superrr/grr.hpp"
#include "support/random.hpp"

using namespace superrr;

namespace {

std::vector<Rational> degs(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

}  // namespace

TEST_CASE("gr_module on small bundles") {
  for (long g = 0; g <= 3; ++g) {
    const auto c = SplitSupercurve::susy(g);
    const auto m = c.model();
    const auto o = SuperBundle::even_line(m, 0);
    CHECK(gr_module(c, o) == SuperBundle::from_degrees(m, degs({0}), degs({g - 1})));
    CHECK(gr_module(c, pi_shift(o)) == SuperBundle::from_degrees(m, degs({g - 1}), degs({0})));
  }
  const SplitSupercurve c(2, 1);
  const auto u = SuperBundle::from_degrees(c.model(), degs({2}), degs({3}));
  const auto gr = gr_module(c, u);
  CHECK(gr.even_degrees() == degs({2, 4}));
  CHECK(gr.odd_degrees() == degs({3, 3}));

  CHECK_THROWS_AS(gr_module(c, SuperBundle::zero(ChowModel::curve(1))), ModelMismatch);
  CHECK_THROWS_AS(gr_module(SplitSupercurve(1, ratio(1, 2)), SuperBundle::zero(ChowModel::curve(1))),
                  NonIntegralTwist);
  CHECK_THROWS_AS(gr_module(SplitSupercurve::susy(1, 1), SuperBundle::zero(ChowModel::curve(1))), NonIntegralTwist);
}

TEST_CASE("chi_super on small bundles") {
  for (long g = 0; g <= 4; ++g) {
    const auto c = SplitSupercurve::susy(g);
    const auto m = c.model();
    CHECK(chi_super(c, SuperBundle::even_line(m, 0)) == SuperEuler(SuperScalar(1 - g)));
    CHECK(chi_super(c, SuperBundle::odd_line(m, 0)) == SuperEuler(SuperScalar(0, -(1 - g))));
    for (long d = -3; d <= 3; ++d) {
      CHECK(chi_super(c, SuperBundle::even_line(m, d)) == SuperEuler::from_parts(d + 1 - g, d));
    }
  }
  const SuperEuler e = SuperEuler::from_parts(3, 5);
  CHECK(e.chi_even() == 3);
  CHECK(e.chi_odd() == 5);
}

TEST_CASE("super GRR on random split supercurves") {
  std::mt19937_64 rng(1001);
  for (int i = 0; i < 2000; ++i) {
    const long g = testing::uniform(rng, 0, 4);
    const SplitSupercurve c(g, testing::uniform(rng, -5, 5));
    const auto u = testing::random_bundle(rng, c.model());
    const auto v = testing::random_bundle(rng, c.model());
    REQUIRE(check_sgrr(c, u));
    REQUIRE(chi_super(c, u) == chi_closed_form(c, u));
    REQUIRE(chi_super(c, direct_sum(u, v)) == chi_super(c, u) + chi_super(c, v));
  }
}

TEST_CASE("pullback_tangent") {
  const auto c = SplitSupercurve::susy(0);
  const auto t = TargetSpec::custom(1, 1, 2, -1);
  const auto b = pullback_tangent(c, t);
  CHECK(b.even_degrees() == degs({2}));
  CHECK(b.odd_degrees() == degs({1}));
  CHECK(chi_super(c, b) == SuperEuler(SuperScalar(4, -4)));

  const auto p = pullback_tangent(c, TargetSpec::psuper(3, 2, 1));
  CHECK(p.even_degrees() == degs({4, 0, 0}));
  CHECK(p.odd_degrees() == degs({2, 0}));

  CHECK(pullback_tangent(c, TargetSpec::point()) == SuperBundle::zero(c.model()));
  CHECK_THROWS_AS(pullback_tangent(c, TargetSpec::custom(0, 1, 3, 0)), InvalidRank);
  CHECK_THROWS_AS(pullback_tangent(c, TargetSpec::custom(1, 0, 0, 2)), InvalidRank);
  CHECK_NOTHROW(pullback_tangent(c, TargetSpec::custom(0, 0, 0, 0)));
}

TEST_CASE("chi of the pulled back tangent matches the closed expression") {
  // (1-g)(r - Pi s) + (n/2)(s - Pi r) + (1 - Pi)(tau + mu)
  long checked = 0;
  for (long g = 0; g <= 3; ++g) {
    for (long n = 0; n <= 6; n += 2) {
      const auto c = SplitSupercurve::susy(g, n);
      for (long r = 1; r <= 4; ++r) {
        for (long s = 0; s <= 3; ++s) {
          for (long tau = -6; tau <= 6; ++tau) {
            for (long mu = -6; mu <= 6; ++mu) {
              if (s == 0 && mu != 0) continue;
              const auto t = TargetSpec::custom(r, s, tau, -mu);
              const SuperScalar expected = SuperScalar(1 - g) * SuperScalar(r, -s) +
                                           SuperScalar(ratio(n, 2)) * SuperScalar(s, -r) +
                                           SuperScalar(1, -1) * SuperScalar(tau + mu);
              REQUIRE(chi_super(c, pullback_tangent(c, t)).value() == expected);
              ++checked;
            }
          }
        }
      }
    }
  }
  CHECK(checked > 10000);
}
