#include <doctest.h>

#include "superrr/suites.hpp"

using namespace superrr;

TEST_CASE("shrinking a synthetic failure") {
  // Fails whenever some even degree of the first bundle is at least 2.
  const suites::Predicate pred = [](const suites::Case& c) {
    for (long d : c.first.even)
      if (d >= 2) return false;
    return true;
  };
  suites::Case c;
  c.model = ChowModel::curve(3);
  c.first = {{-4, 5, 1}, {3, -2}};
  c.second = {{2}, {1, 1}};
  c.normal = {4, -1};
  const auto small = suites::shrink(c, pred);
  CHECK_FALSE(pred(small));
  CHECK(small.first.even == std::vector<long>{2});
  CHECK(small.first.odd.empty());
  CHECK(small.second.even.empty());
  CHECK(small.normal.empty());
  CHECK(small.model == ChowModel::curve(0));
  CHECK(small.second.odd.empty());
  CHECK(small.to_string().find("E even [2]") != std::string::npos);
}

TEST_CASE("run_property reports a shrunk counterexample") {
  suites::Generator gen;
  gen.curves_only = true;
  const auto res = suites::run_property(
      "odd rank at most one", gen, [](const suites::Case& c) { return c.first.odd.size() <= 1; }, 9, 200);
  CHECK_FALSE(res.ok());
  REQUIRE(res.counterexample.has_value());
  CHECK(res.counterexample->first.odd.size() == 2);
  CHECK(res.counterexample->first.even.empty());

  const auto good = suites::run_property("trivial", gen, [](const suites::Case&) { return true; }, 9, 50);
  CHECK(good.ok());
  CHECK(good.summary() == "trivial: 50/50 pass");
}

TEST_CASE("built-in suites are reproducible and pass") {
  const auto a = suites::run_grr_suite(42, 300);
  const auto b = suites::run_grr_suite(42, 300);
  CHECK(a.ok());
  CHECK(a.summary() == b.summary());
  const auto ids = suites::run_identity_suites(3, 100);
  CHECK(ids.size() == 13);
  for (const auto& r : ids) CHECK_MESSAGE(r.ok(), r.summary());
}
