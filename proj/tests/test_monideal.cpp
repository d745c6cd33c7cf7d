#include <doctest.h>

#include <random>

#include "cmreg/monideal.hpp"
#include "support/oracles.hpp"

using namespace cmreg;

namespace {

MonomialIdeal curve_initial() { return testsupport::curve_family_initial(5, 2); }

}  // namespace

TEST_CASE("minimalize") {
  CHECK(minimalize(2, std::vector<ExponentVector>{{1, 1}, {2, 1}, {0, 5}}).generators().size() == 2);
  CHECK(MonomialIdeal(2, {{1, 1}, {2, 1}, {0, 5}}) == MonomialIdeal(2, {{0, 5}, {1, 1}}));
  CHECK(MonomialIdeal(2, {{2, 0}, {0, 2}, {1, 1}}).size() == 3);
  CHECK(MonomialIdeal(3, {{1, 1, 0}, {0, 5, 0}, {3, 0, 0}, {4, 0, 0}, {5, 0, 0}}) ==
        MonomialIdeal(3, {{1, 1, 0}, {0, 5, 0}, {3, 0, 0}}));
  CHECK(MonomialIdeal(2, {{1, 1}, {1, 1}}).size() == 1);
}

TEST_CASE("contains") {
  const MonomialIdeal J(2, {{1, 1}});
  CHECK(contains(J, {3, 1}));
  CHECK_FALSE(contains(J, {4, 0}));
  const auto J1 = evaluate_zero(curve_initial(), 1);
  CHECK_FALSE(contains(J1, {4, 0, 0}));
  CHECK_FALSE(contains(MonomialIdeal(2), {0, 0}));
  CHECK(contains(MonomialIdeal(2, {{0, 0}}), {0, 0}));
}

TEST_CASE("evaluate_zero") {
  const auto J = curve_initial();
  CHECK(evaluate_zero(J, 2) == MonomialIdeal(2, {{1, 1}, {0, 5}, {5, 0}}));
  CHECK(evaluate_zero(J, 0) == J);
  CHECK(evaluate_zero(MonomialIdeal(2, {{1, 1}}), 1) == MonomialIdeal(1));
  CHECK(evaluate_zero(J, 1) ==
        MonomialIdeal(3, {{1, 1, 0}, {0, 5, 0}, {3, 0, 2}, {4, 0, 1}, {5, 0, 0}}));
  CHECK(evaluate_zero(J, 4).num_vars() == 0);
  CHECK_THROWS(evaluate_zero(J, 5));
}

TEST_CASE("evaluate_one") {
  const auto J1 = evaluate_zero(curve_initial(), 1);
  CHECK(evaluate_one(J1) == MonomialIdeal(3, {{1, 1, 0}, {0, 5, 0}, {3, 0, 0}}));
  const MonomialIdeal free_of_last(2, {{2, 0}, {1, 0}});
  CHECK(evaluate_one(free_of_last) == free_of_last);
  CHECK(evaluate_one(MonomialIdeal(3)) == MonomialIdeal(3));
  CHECK_THROWS(evaluate_one(MonomialIdeal(0)));
}

TEST_CASE("graded_dim_quotient") {
  const MonomialIdeal J2(2, {{1, 1}, {0, 5}, {5, 0}});
  CHECK(graded_dim_quotient(J2, 4) == 2);
  CHECK(graded_dim_quotient(J2, 5) == 0);
  CHECK(graded_dim_quotient(MonomialIdeal(2), 3) == 4);
  CHECK(graded_dim_quotient(MonomialIdeal(2, {{0, 0}}), 0) == 0);
  CHECK(graded_dim_quotient(MonomialIdeal(2, {{0, 0}}), 7) == 0);
  CHECK(graded_dim_quotient(MonomialIdeal(0), 0) == 1);
  CHECK(graded_dim_quotient(MonomialIdeal(0), 1) == 0);
}

TEST_CASE("graded_dim_quotient: zero ideal gives binomial coefficients") {
  for (std::size_t s = 1; s <= 6; ++s)
    for (std::size_t r = 0; r <= 12; ++r)
      REQUIRE(graded_dim_quotient(MonomialIdeal(s), r) == binomial(r + s - 1, s - 1));
}

TEST_CASE("graded_dim_quotient agrees with naive enumeration") {
  std::mt19937_64 engine(11);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + engine() % 4;
    const auto J = testsupport::random_monomial_ideal(engine, n, 6, 4);
    StandardMonomialCounter counter(J);
    for (std::size_t r = 0; r <= 12; ++r) {
      const auto want = testsupport::naive_count(J, r);
      REQUIRE(graded_dim_quotient(J, r) == want);
      REQUIRE(counter.count(r) == want);
    }
  }
}

TEST_CASE("krull_dim") {
  CHECK(krull_dim(curve_initial()) == 2);
  CHECK(krull_dim(MonomialIdeal(5)) == 5);
  CHECK(krull_dim(MonomialIdeal(2, {{2, 0}, {0, 3}})) == 0);
  CHECK(krull_dim(MonomialIdeal(3, {{1, 1, 0}})) == 2);
  CHECK(krull_dim(MonomialIdeal(2, {{0, 0}})) == -1);
}

TEST_CASE("lcm_gens") {
  const auto J = curve_initial();
  const auto g1 = lcm_gens(J, 1);
  REQUIRE(g1.has_value());
  CHECK(*g1 == ExponentVector{5, 5, 2});
  CHECK(g1->degree() == 12);
  CHECK(lcm_gens(MonomialIdeal(2, {{1, 3}}), 0) == ExponentVector{1, 3});
  CHECK(lcm_gens(MonomialIdeal(2, {{2, 0}, {0, 3}}), 0) == ExponentVector{2, 3});
  CHECK_FALSE(lcm_gens(MonomialIdeal(2, {{1, 1}}), 1).has_value());
}

TEST_CASE("colon and saturation by a variable") {
  const MonomialIdeal J(2, {{1, 1}});
  CHECK(colon_by_var(J, 1) == MonomialIdeal(2, {{1, 0}}));
  CHECK(saturate_by_var(J, 1) == MonomialIdeal(2, {{1, 0}}));
  CHECK(colon_by_var(MonomialIdeal(2, {{2, 0}, {0, 3}}), 0) == MonomialIdeal(2, {{1, 0}, {0, 3}}));
  const auto J1 = evaluate_zero(curve_initial(), 1);
  CHECK(saturate_by_var(J1, 2) == evaluate_one(J1));
}

TEST_CASE("properties on random ideals") {
  std::mt19937_64 engine(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + engine() % 4;
    const auto J = testsupport::random_monomial_ideal(engine, n, 6, 4);
    CAPTURE(J);

    // evaluate_zero composes.
    for (std::size_t i = 0; i <= n; ++i)
      for (std::size_t j = 0; i + j <= n; ++j)
        REQUIRE(evaluate_zero(evaluate_zero(J, i), j) == evaluate_zero(J, i + j));

    // J is contained in J~ on the box.
    const auto Jt = evaluate_one(J);
    for (std::size_t r = 0; r <= 6; ++r)
      testsupport::for_each_monomial(n, r, [&](const ExponentVector& m) {
        if (contains(J, m)) REQUIRE(contains(Jt, m));
      });

    // Saturation is idempotent and is the limit of colons.
    for (std::size_t v = 0; v < n; ++v) {
      const auto sat = saturate_by_var(J, v);
      REQUIRE(saturate_by_var(sat, v) == sat);
      MonomialIdeal colon = J;
      for (int step = 0; step < 5; ++step) colon = colon_by_var(colon, v);
      REQUIRE(colon == sat);
    }
    REQUIRE(saturate_by_var(J, n - 1) == Jt);

    // Dimension drops by at most one per evaluation.
    const int d = krull_dim(J);
    for (std::size_t i = 0; i <= n; ++i)
      REQUIRE(krull_dim(evaluate_zero(J, i)) >= d - static_cast<int>(i));
  }
}

TEST_CASE("krull_dim agrees with Hilbert polynomial growth") {
  // dim S/J = 1 + degree of the Hilbert polynomial, read off from counts at
  // large degree: a degree-(d-1) polynomial grows like r^(d-1).
  std::mt19937_64 engine(99);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + engine() % 3;
    const auto J = testsupport::random_monomial_ideal(engine, n, 4, 3);
    StandardMonomialCounter counter(J);
    const int d = krull_dim(J);
    const auto a = counter.count(40), b = counter.count(80);
    if (d <= 0) {
      REQUIRE(a == 0);
    } else if (d == 1) {
      REQUIRE(a == b);
      REQUIRE(a > 0);
    } else {
      // Doubling r multiplies a degree-(d-1) polynomial by about 2^(d-1).
      const double ratio = static_cast<double>(b) / static_cast<double>(a);
      REQUIRE(ratio > (1 << (d - 1)) * 0.8);
      REQUIRE(ratio < (1 << (d - 1)) * 1.25);
    }
  }
}
