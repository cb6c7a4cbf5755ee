#include <doctest.h>

#include "superrr/errors.hpp"
#include "superrr/superbundle.hpp"
#include "support/random.hpp"

using namespace superrr;

namespace {

const ChowModel kCurve = ChowModel::curve(2);

GradedElement w_elem(SuperScalar c0, SuperScalar c1) { return GradedElement(kCurve, {c0, c1}); }

}  // namespace

TEST_CASE("roots are validated") {
  const auto m = ChowModel::proj_space(2);
  CHECK_THROWS_AS(SuperBundle(m, {GradedElement::one(m)}, {}), InvalidArgument);
  CHECK_THROWS_AS(SuperBundle(m, {}, {GradedElement::monomial(m, 2, 1)}), InvalidArgument);
  CHECK_THROWS_AS(SuperBundle(m, {GradedElement::monomial(m, 1, SuperScalar::pi())}, {}), InvalidArgument);
  CHECK_THROWS_AS(SuperBundle(m, {GradedElement::monomial(kCurve, 1, 1)}, {}), ModelMismatch);
  const auto e = SuperBundle::from_degrees(m, {1, 2}, {3});
  CHECK(e.even_rank() == 2);
  CHECK(e.odd_rank() == 1);
}

TEST_CASE("chern_character") {
  const auto pt = ChowModel::point();
  CHECK(chern_character(SuperBundle::even_line(pt, 0)) == GradedElement::one(pt));
  CHECK(chern_character(SuperBundle::odd_line(pt, 0)) == GradedElement::constant(pt, SuperScalar(0, -1)));
  // rank 1|1 with roots d w, e w: (1 - Pi) + (d - Pi e) w
  const long d = 4, e = -3;
  CHECK(chern_character(SuperBundle::from_degrees(kCurve, {d}, {e})) == w_elem(SuperScalar(1, -1), SuperScalar(d, -e)));
}

TEST_CASE("chern_total") {
  const auto x = Rational(5);
  CHECK(chern_total(SuperBundle::even_line(kCurve, x)) == w_elem(1, SuperScalar(x)));
  // Pi (1 + x)^-1 = Pi - Pi x w
  CHECK(chern_total(SuperBundle::odd_line(kCurve, x)) == w_elem(SuperScalar::pi(), SuperScalar(0, -x)));
  CHECK(chern_first(SuperBundle::odd_line(kCurve, x)) == w_elem(0, SuperScalar(0, -x)));
  CHECK(chern_total(SuperBundle::zero(kCurve)) == GradedElement::one(kCurve));
  // c_0 = Pi^s
  const auto p3 = ChowModel::proj_space(3);
  CHECK(chern_total(SuperBundle::from_degrees(p3, {1, 2}, {1, -1, 2})).coeff(0) == SuperScalar::pi());
  // Two odd lines on P^3 with roots h, -h: (1+h)^-1 (1-h)^-1 = 1 + h^2
  CHECK(chern_total(SuperBundle::from_degrees(p3, {}, {1, -1})) == GradedElement(p3, {1, 0, 1, 0}));
}

TEST_CASE("todd") {
  // T_X on a genus g curve has degree 2 - 2g: td = 1 + (1 - g) w.
  for (long g = 0; g <= 5; ++g) {
    const auto m = ChowModel::curve(g);
    CHECK(todd(SuperBundle::even_line(m, 2 - 2 * g)) == GradedElement(m, {1, 1 - g}));
  }
  CHECK(todd(SuperBundle::odd_line(ChowModel::point(), 0)) == GradedElement::constant(ChowModel::point(), 2));
  CHECK(todd(SuperBundle::zero(kCurve)) == GradedElement::one(kCurve));
  // odd line with root m: 1 + e^{-m} = 2 - m w
  CHECK(todd(SuperBundle::odd_line(kCurve, 3)) == w_elem(2, -3));
}

TEST_CASE("sigma1") {
  CHECK(sigma1(SuperBundle::odd_line(ChowModel::point(), 0)) == GradedElement::constant(ChowModel::point(), 2));
  CHECK(sigma1(SuperBundle::odd_line(kCurve, 7)) == w_elem(2, 7));
  const long l1 = 2, l2 = -5;
  CHECK(sigma1(SuperBundle::from_degrees(kCurve, {}, {l1, l2})) == w_elem(4, 2 * (l1 + l2)));
  CHECK_THROWS_AS(sigma1(SuperBundle::from_degrees(kCurve, {1}, {1})), NotPurelyOdd);
}

TEST_CASE("dual, pi_shift, direct_sum, tensor") {
  const auto p2 = ChowModel::proj_space(2);
  const auto e = SuperBundle::from_degrees(p2, {1, -2}, {3});
  CHECK(pi_shift(pi_shift(e)) == e);
  CHECK(dual(dual(e)) == e);
  CHECK(pi_shift(e) == SuperBundle::from_degrees(p2, {3}, {1, -2}));
  CHECK(dual(e) == SuperBundle::from_degrees(p2, {-1, 2}, {-3}));

  const auto h = GradedElement::monomial(p2, 1, 1);
  const Rational x(2), y(-1);
  const auto lx = SuperBundle::even_line(p2, x);
  const auto ly = SuperBundle::even_line(p2, y);
  CHECK(chern_character(tensor(lx, ly)) == exp_nilpotent(h * SuperScalar(x + y)));
  // (-Pi e^x)(-Pi e^y) = e^{x+y}: odd (x) odd is even.
  const auto t = tensor(pi_shift(lx), pi_shift(ly));
  CHECK(t.even_rank() == 1);
  CHECK(t.odd_rank() == 0);
  CHECK(chern_character(t) == exp_nilpotent(h * SuperScalar(x + y)));
  // even (x) odd is odd
  const auto mixed = tensor(lx, pi_shift(ly));
  CHECK(mixed.even_rank() == 0);
  CHECK(mixed.odd_rank() == 1);

  CHECK_THROWS_AS(direct_sum(e, SuperBundle::zero(kCurve)), ModelMismatch);
  CHECK_THROWS_AS(tensor(e, SuperBundle::zero(kCurve)), ModelMismatch);
}

TEST_CASE("characteristic class identities on random split bundles") {
  std::mt19937_64 rng(31337);
  for (int i = 0; i < 600; ++i) {
    const auto m = testing::random_model(rng);
    const auto e = testing::random_bundle(rng, m);
    const auto f = testing::random_bundle(rng, m);
    REQUIRE(chern_total(direct_sum(e, f)) == chern_total(e) * chern_total(f));
    REQUIRE(chern_character(direct_sum(e, f)) == chern_character(e) + chern_character(f));
    REQUIRE(chern_character(tensor(e, f)) == chern_character(e) * chern_character(f));
    REQUIRE(chern_character(pi_shift(e)) == -SuperScalar::pi() * chern_character(e));
    REQUIRE(chern_first(pi_shift(e)) == -(chern_first(e) * SuperScalar::pi_power(e.even_rank() + e.odd_rank())));
    REQUIRE(todd(direct_sum(e, f)) == todd(e) * todd(f));

    const auto odd_part = SuperBundle(m, {}, e.odd_roots());
    REQUIRE(todd(odd_part) == sigma1(dual(odd_part)));

    for (const auto& line : {SuperBundle(m, {f.even_roots().empty() ? GradedElement(m) : f.even_roots()[0]}, {}),
                             SuperBundle(m, {}, {f.odd_roots().empty() ? GradedElement(m) : f.odd_roots()[0]})}) {
      REQUIRE(chern_first(dual(line)) == -chern_first(line));
    }
  }
}
