#include <doctest.h>

#include <random>

#include "cmreg/oracle.hpp"
#include "cmreg/staircase.hpp"
#include "support/oracles.hpp"

using namespace cmreg;

TEST_CASE("a_def: monomial-curve family") {
  const auto J = testsupport::curve_family_initial(5, 2);
  const auto level0 = a_def(J, 0, default_a_ceiling(J, 0));
  CHECK_FALSE(level0.infinite);
  CHECK(level0.value.is_minus_infinity());
  CHECK(level0.trace.empty());

  const auto level1 = a_def(J, 1, default_a_ceiling(J, 1));
  CHECK_FALSE(level1.infinite);
  CHECK(level1.value == ExtendedDegree(4));
  // J~_1 / J_1 is spanned by x1^3, x1^4, x1^3 x3 ... in degrees 3 and 4.
  REQUIRE_FALSE(level1.trace.empty());
  CHECK(level1.trace.back().first == 4);
}

TEST_CASE("a_def: infinite level") {
  const MonomialIdeal J(2, {{1, 1}});
  const auto level0 = a_def(J, 0, default_a_ceiling(J, 0));
  CHECK(level0.infinite);
  CHECK(level0.value.is_minus_infinity());
}

TEST_CASE("a_def: argument checks") {
  const auto J = testsupport::curve_family_initial(5, 2);
  CHECK_THROWS(a_def(J, 1, 0));
  CHECK_THROWS(a_def(J, 4, 100));
  CHECK(min_a_ceiling(J, 1) == 10);
}

TEST_CASE("r_def") {
  CHECK(r_def(MonomialIdeal(2, {{1, 1}, {0, 5}, {5, 0}}), 20) == 4);
  CHECK(r_def(MonomialIdeal(2, {{2, 0}, {0, 3}}), 10) == 3);
  CHECK(r_def(MonomialIdeal(0), 0) == 0);
  CHECK_THROWS_AS(r_def(MonomialIdeal(2, {{1, 1}}), 10), NotArtinian);
  CHECK_THROWS_AS(r_def(MonomialIdeal(2, {{2, 0}, {0, 3}}), 4), std::invalid_argument);
  CHECK_THROWS_AS(r_def(MonomialIdeal(2, {{0, 0}}), 4), std::invalid_argument);
}

TEST_CASE("strongly stable generator") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto J = gen_strongly_stable(seed, 2 + seed % 3, 5);
    REQUIRE(is_strongly_stable(J));
    REQUIRE_FALSE(J.is_zero());
    REQUIRE(gen_strongly_stable(seed, 2 + seed % 3, 5) == J);
  }
  CHECK_FALSE(is_strongly_stable(MonomialIdeal(2, {{0, 1}})));
  CHECK(is_strongly_stable(MonomialIdeal(2, {{1, 0}})));
  CHECK_THROWS(gen_strongly_stable(0, 1, 3));
}

TEST_CASE("cross_check on random ideals") {
  std::mt19937_64 engine(42);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + engine() % 4;
    const auto J = testsupport::random_monomial_ideal(engine, n, 6, 4);
    if (J.is_unit()) continue;
    CAPTURE(J);
    const auto check = cross_check(J);
    REQUIRE(check.match);
  }
}

TEST_CASE("cross_check on the family and through Buchberger") {
  CHECK(cross_check(testsupport::curve_family_initial(7, 3)).match);
  const auto check = cross_check(testsupport::curve_family_initial(5, 2));
  REQUIRE(check.levels.size() == 2);
  CHECK(check.r == 4);
  CHECK(check.r_def == 4);
}

TEST_CASE("borel_closure examples") {
  const std::vector<ExponentVector> a{{0, 2}};
  CHECK(borel_closure(2, a) == MonomialIdeal(2, {{2, 0}, {1, 1}, {0, 2}}));
  const std::vector<ExponentVector> b{{1, 1, 0}};
  CHECK(borel_closure(3, b) == MonomialIdeal(3, {{2, 0, 0}, {1, 1, 0}}));
}

TEST_CASE("colon by one power and saturation differ in the same top degree") {
  std::mt19937_64 engine(77);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + engine() % 4;
    const auto J = testsupport::random_monomial_ideal(engine, n, 6, 4);
    const auto oracle = a_def(J, 0, default_a_ceiling(J, 0));
    if (oracle.infinite) continue;
    StandardMonomialCounter base(J), colon(colon_by_var(J, n - 1));
    ExtendedDegree top;
    for (std::size_t r = 0; r <= oracle.ceiling; ++r)
      if (base.count(r) != colon.count(r)) top = ExtendedDegree(static_cast<int>(r));
    CAPTURE(J);
    REQUIRE(top == oracle.value);
  }
}

TEST_CASE("cross_check: whole family and a hypersurface") {
  for (int alpha = 3; alpha <= 7; ++alpha)
    for (int beta = 1; beta < alpha; ++beta) REQUIRE(cross_check(testsupport::curve_family_initial(alpha, beta)).match);
  const auto hyper = cross_check(MonomialIdeal(3, {{3, 0, 0}}));
  CHECK(hyper.match);
  for (const auto& level : hyper.levels) CHECK(level.c.is_minus_infinity());
  CHECK(hyper.r == 2);
}
