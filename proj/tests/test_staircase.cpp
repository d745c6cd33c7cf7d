#include <doctest.h>

#include <random>

#include "cmreg/oracle.hpp"
#include "cmreg/staircase.hpp"
#include "support/oracles.hpp"

using namespace cmreg;

namespace {

MonomialIdeal level(std::size_t i) {
  return evaluate_zero(testsupport::curve_family_initial(5, 2), i);
}

ExtendedDegree certified_c(const MonomialIdeal& J) {
  const auto certificate = certify_finite(J);
  REQUIRE(certificate.has_value());
  return c_value(J, *certificate);
}

}  // namespace

TEST_CASE("exponent_set") {
  CHECK(exponent_set(level(1)) ==
        PointSet(3, {{1, 1, 0}, {0, 5, 0}, {3, 0, 2}, {4, 0, 1}, {5, 0, 0}}));
  CHECK(exponent_set(level(2)) == PointSet(2, {{1, 1}, {0, 5}, {5, 0}}));
  CHECK(exponent_set(MonomialIdeal(3)).empty());
}

TEST_CASE("project") {
  CHECK(project(exponent_set(level(1)), 2) == PointSet(2, {{1, 1}, {0, 5}, {3, 0}, {4, 0}, {5, 0}}));
  CHECK(project(PointSet(2, {{2, 3}}), 0) == PointSet(1, {{3}}));
  CHECK(project(PointSet(2), 1).empty());
  CHECK_THROWS(project(PointSet(2), 2));
}

TEST_CASE("is_c_finite") {
  CHECK(is_c_finite(exponent_set(level(1)), exponent_set(level(2))));
  CHECK_FALSE(is_c_finite(PointSet(2, {{1, 1}}), PointSet(1)));
  // Every generator survives the evaluation.
  CHECK(is_c_finite(PointSet(2, {{2, 0}, {1, 0}}), PointSet(1, {{1}})));
  CHECK_THROWS(is_c_finite(PointSet(2), PointSet(2)));
}

TEST_CASE("corners") {
  CHECK(corners(level(2)) == PointSet(2, {{0, 4}, {4, 0}}));
  CHECK(corners(level(1)) == PointSet(3, {{3, 0, 1}, {4, 0, 0}}));
  CHECK(corners(MonomialIdeal(2)).empty());
  CHECK(corners(MonomialIdeal(2, {{1, 0}})).empty());
  CHECK(corners(MonomialIdeal(0)) == PointSet(0, {ExponentVector{}}));
  CHECK(corners(MonomialIdeal(2, {{2, 0}, {0, 3}})) == PointSet(2, {{1, 2}}));
}

TEST_CASE("c_value") {
  CHECK(certified_c(level(1)) == ExtendedDegree(4));
  CHECK(certified_c(evaluate_zero(testsupport::curve_family_initial(3, 2), 1)).is_minus_infinity());
  CHECK(certified_c(level(0)).is_minus_infinity());
  CHECK(certified_c(MonomialIdeal(3)).is_minus_infinity());

  const auto certificate = certify_finite(level(1));
  REQUIRE(certificate);
  CHECK_THROWS(c_value(level(2), *certificate));
  CHECK_FALSE(certify_finite(MonomialIdeal(2, {{1, 1}})).has_value());
}

TEST_CASE("r_value") {
  CHECK(r_value(level(2)) == 4);
  CHECK(r_value(MonomialIdeal(2, {{2, 0}, {0, 3}})) == 3);
  CHECK(r_value(MonomialIdeal(2, {{1, 0}, {0, 1}})) == 0);
  CHECK(r_value(MonomialIdeal(0)) == 0);
  CHECK_THROWS_AS(r_value(MonomialIdeal(2, {{1, 1}})), InfiniteReductionNumber);
  CHECK_THROWS_AS(r_value(MonomialIdeal(2, {{0, 0}})), std::invalid_argument);
}

TEST_CASE("corners are socle elements and match the family construction") {
  std::mt19937_64 engine(3);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + engine() % 4;
    const auto J = testsupport::random_monomial_ideal(engine, n, 5, 4);
    CAPTURE(J);
    const auto F = corners(J);
    for (const auto& a : F.points()) {
      REQUIRE(testsupport::is_socle_element(J, a));
      for (const auto& v : J.generators()) REQUIRE_FALSE(divides(v, a));
    }
    REQUIRE(testsupport::as_set(F) == testsupport::box_socle(J));
    REQUIRE(testsupport::as_set(F) == testsupport::family_corners(J));
  }
}

TEST_CASE("c_value and r_value agree with counting") {
  std::mt19937_64 engine(8);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + engine() % 4;
    const auto J = testsupport::random_monomial_ideal(engine, n, 5, 4);
    CAPTURE(J);
    const auto certificate = certify_finite(J);
    const auto oracle = a_def(J, 0, default_a_ceiling(J, 0));
    // Finiteness agrees with eventual vanishing of the counting difference.
    REQUIRE(certificate.has_value() == !oracle.infinite);
    if (certificate) REQUIRE(c_value(J, *certificate) == oracle.value);
    if (J.is_artinian() && !J.is_unit()) {
      StandardMonomialCounter counter(J);
      const int r = r_value(J);
      REQUIRE(counter.count(static_cast<std::size_t>(r)) > 0);
      for (std::size_t u = static_cast<std::size_t>(r) + 1; u <= static_cast<std::size_t>(r) + 6; ++u)
        REQUIRE(counter.count(u) == 0);
    }
  }
}
