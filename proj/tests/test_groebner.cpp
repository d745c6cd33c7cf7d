#include <doctest.h>

#include <algorithm>
#include <random>

#include "cmreg/groebner.hpp"
#include "cmreg/input.hpp"
#include "support/oracles.hpp"

using namespace cmreg;

namespace {

std::vector<Polynomial> parse_all(const RingPtr& R, std::initializer_list<const char*> lines) {
  std::vector<Polynomial> out;
  for (const auto* line : lines) out.push_back(parse_polynomial(line, R));
  return out;
}

RingPtr y_ring() { return Ring::make(std::vector<std::string>{"y1", "y2", "y3", "y4"}); }

std::vector<Polynomial> twisted_cubic(const RingPtr& R) {
  return parse_all(R, {"y1^2 - y2*y3", "y2^2 - y1*y4", "y1*y2 - y3*y4"});
}

Polynomial random_homogeneous(std::mt19937_64& engine, const RingPtr& R, std::size_t degree,
                              std::size_t terms) {
  std::vector<Term> out;
  for (std::size_t k = 0; k < terms; ++k) {
    ExponentVector e(R->num_vars());
    for (std::size_t u = 0; u < degree; ++u) ++e[engine() % R->num_vars()];
    out.push_back({e, static_cast<Coefficient>(1 + engine() % (R->characteristic() - 1))});
  }
  return Polynomial(R, out);
}

std::vector<Polynomial> random_system(std::mt19937_64& engine, const RingPtr& R) {
  std::vector<Polynomial> gens;
  const std::size_t count = 2 + engine() % 2;
  while (gens.size() < count) {
    auto f = random_homogeneous(engine, R, 2 + engine() % 2, 2 + engine() % 3);
    if (!f.is_zero()) gens.push_back(std::move(f));
  }
  return gens;
}

}  // namespace

TEST_CASE("s_polynomial") {
  auto R = Ring::make(2);
  const auto f = parse_polynomial("x1^2", R), g = parse_polynomial("x2^3", R);
  CHECK(reduce(s_polynomial(f, g), std::vector<Polynomial>{f, g}).is_zero());
  CHECK(s_polynomial(f, f).is_zero());
  CHECK_THROWS(s_polynomial(Polynomial(R), f));
}

TEST_CASE("s_polynomial: twisted cubic pair in the original coordinates") {
  auto R = Ring::make(4);
  const auto basis = parse_all(R, {"x2^2 - x1*x3", "x2*x3 - x1*x4", "x3^2 - x2*x4"});
  CHECK(reduce(s_polynomial(basis[0], basis[1]), basis).is_zero());
  CHECK(satisfies_buchberger_criterion(GroebnerBasis(R, basis)));
}

TEST_CASE("reduce") {
  auto R = Ring::make(4);
  const auto f = parse_polynomial("x1*x2 - x3*x4", R);
  CHECK(reduce(f, std::vector<Polynomial>{f}).is_zero());
  CHECK(reduce(parse_polynomial("x1^2*x2", R), parse_all(R, {"x1*x2"})).is_zero());
  CHECK(reduce(f, std::vector<Polynomial>{}) == f);
  const auto Y = y_ring();
  const auto tc = twisted_cubic(Y);
  CHECK(reduce(parse_polynomial("y1^3*y4 - y2^3*y3", Y), tc).is_zero());
  CHECK(reduce(s_polynomial(tc[0], tc[1]), tc).is_zero());
  // The remainder has no term divisible by a leading term.
  const auto r = reduce(parse_polynomial("y1^3 + y2^2*y3 + y3^3", Y), tc);
  for (const auto& t : r.terms())
    for (const auto& g : tc) CHECK_FALSE(divides(g.leading_exponent(), t.exponent));
}

TEST_CASE("buchberger: monomial-curve family") {
  const auto spec = parse_input(testsupport::curve_family_input(5, 2));
  const auto basis = buchberger(spec.generators);
  CHECK(satisfies_buchberger_criterion(basis));
  CHECK(initial_ideal(basis) ==
        MonomialIdeal(4, {{1, 1, 0, 0}, {0, 5, 0, 0}, {3, 0, 2, 0}, {4, 0, 1, 0}, {5, 0, 0, 0}}));
}

TEST_CASE("buchberger: already reduced inputs come back unchanged") {
  auto R = Ring::make(2);
  // Sorted by descending leading term.
  CHECK(buchberger(parse_all(R, {"x1^2", "x2^3"})).elements() == parse_all(R, {"x2^3", "x1^2"}));
  const auto Y = y_ring();
  const auto tc = twisted_cubic(Y);
  const auto basis = buchberger(tc);
  CHECK(basis.size() == 3);
  for (const auto& g : tc)
    CHECK(std::find(basis.elements().begin(), basis.elements().end(), g) != basis.elements().end());
  CHECK(initial_ideal(basis) == MonomialIdeal(4, {{2, 0, 0, 0}, {1, 1, 0, 0}, {0, 2, 0, 0}}));
  CHECK(initial_ideal(buchberger(parse_all(R, {"x1^2"}))) == MonomialIdeal(2, {{2, 0}}));
}

TEST_CASE("buchberger: input validation") {
  auto R = Ring::make(2);
  CHECK_THROWS_AS(buchberger(parse_all(R, {"x1^2 - x2"})), NonHomogeneousError);
  CHECK_THROWS(buchberger(std::vector<Polynomial>{}));
  CHECK_THROWS(buchberger(std::vector<Polynomial>{Polynomial::variable(R, 0),
                                                  Polynomial::variable(Ring::make(3), 0)}));
}

TEST_CASE("buchberger: unit ideal") {
  auto R = Ring::make(2);
  const auto basis = buchberger(std::vector<Polynomial>{Polynomial::constant(R, 3)});
  CHECK(initial_ideal(basis).is_unit());
}

TEST_CASE("buchberger: properties on random systems") {
  std::mt19937_64 engine(2024);
  for (int trial = 0; trial < 40; ++trial) {
    auto R = Ring::make(3 + engine() % 2, 32003);
    const auto gens = random_system(engine, R);
    const auto basis = buchberger(gens);
    REQUIRE(satisfies_buchberger_criterion(basis));
    for (const auto& g : basis.elements()) {
      REQUIRE(g.is_homogeneous());
      REQUIRE(g.leading_coefficient() == 1);
    }
    // Every generator reduces to zero.
    for (const auto& f : gens) REQUIRE(reduce(f, basis.elements()).is_zero());
    // Reducedness.
    for (const auto& g : basis.elements())
      for (const auto& h : basis.elements())
        if (!(g == h))
          for (const auto& t : g.terms()) REQUIRE_FALSE(divides(h.leading_exponent(), t.exponent));

    auto shuffled = gens;
    std::shuffle(shuffled.begin(), shuffled.end(), engine);
    REQUIRE(buchberger(shuffled) == basis);

    std::vector<Polynomial> scaled;
    for (const auto& f : gens) scaled.push_back(f.scaled(static_cast<Coefficient>(2 + engine() % 1000)));
    REQUIRE(initial_ideal(buchberger(scaled)) == initial_ideal(basis));

    REQUIRE(buchberger(gens, GroebnerOptions{true}) == basis);
  }
}

TEST_CASE("coordinate change") {
  auto R = Ring::make(2);
  const auto gens = parse_all(R, {"x1*x2"});
  const auto changed = random_linear_change(gens, 2, 0);
  CHECK(initial_ideal(buchberger(changed)) == MonomialIdeal(2, {{2, 0}}));

  const auto id = CoordinateChange::identity(R, 2);
  CHECK(id.apply(gens[0]) == gens[0]);

  auto R4 = Ring::make(4);
  const auto f = parse_polynomial("x3*x4 + x4^2 + x1*x2", R4);
  const auto change = CoordinateChange::sample(R4, 2, 17);
  const auto g = change.apply(f);
  CHECK(g.ring() == f.ring());
  // Terms free of x1, x2 are untouched.
  for (const auto& t : f.terms())
    if (t.exponent[0] == 0 && t.exponent[1] == 0)
      CHECK(std::find(g.terms().begin(), g.terms().end(), t) != g.terms().end());

  const auto& M = change.matrix();
  REQUIRE(M.size() == 2);
  CHECK(M[0][1] == 0);
  CHECK(M[0][0] != 0);
  CHECK(M[1][1] != 0);
}

TEST_CASE("coordinate change: deterministic digest") {
  auto R = Ring::make(3);
  CHECK(CoordinateChange::sample(R, 3, 5).digest() == CoordinateChange::sample(R, 3, 5).digest());
  CHECK(CoordinateChange::sample(R, 3, 5).digest() != CoordinateChange::sample(R, 3, 6).digest());
  CHECK(CoordinateChange::sample(R, 3, 5).digest().size() == 16);
  CHECK_THROWS(CoordinateChange::sample(R, 4, 5));
  CHECK_THROWS(CoordinateChange::sample(R, 0, 5));
}
