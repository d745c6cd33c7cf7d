#pragma once

// Monomial ideals given by their minimal generators, and the operations the
// regularity computation needs on them: evaluations of variables to 0 and 1,
// Hilbert-function counting, Krull dimension, colon and saturation by a
// variable and lcm data.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <tuple>
#include <vector>

#include "cmreg/ring.hpp"

namespace cmreg {

/// A monomial ideal in s variables, stored as its minimal generators.
///
/// Generators form an antichain under divisibility and are kept in
/// decreasing revlex order. No generators means the zero ideal; the single
/// generator (0,...,0) is the unit ideal.
class MonomialIdeal {
public:
  explicit MonomialIdeal(std::size_t num_vars) : num_vars_(num_vars) {}
  /// Minimalizes the given monomials.
  MonomialIdeal(std::size_t num_vars, std::vector<ExponentVector> monomials);

  std::size_t num_vars() const { return num_vars_; }
  const std::vector<ExponentVector>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;
  /// Every variable has a pure power among the generators, i.e. S/J has
  /// finite length. The zero ideal in zero variables counts as Artinian.
  bool is_artinian() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;
  friend MonomialIdeal minimalize(std::size_t num_vars,
                                  std::span<const ExponentVector> monomials);

private:
  std::size_t num_vars_;
  std::vector<ExponentVector> gens_;
};

std::ostream& operator<<(std::ostream& os, const MonomialIdeal& J);

/// The divisibility-minimal elements of a set of monomials.
MonomialIdeal minimalize(std::size_t num_vars,
                         std::span<const ExponentVector> monomials);

/// x^m lies in J.
bool contains(const MonomialIdeal& J, const ExponentVector& m);

/// J_i: keep generators free of the last i variables, drop those variables.
MonomialIdeal evaluate_zero(const MonomialIdeal& J, std::size_t i);

/// J~: set the last variable to 1 and minimalize. The ambient variable count
/// is kept (the last coordinate is simply 0 everywhere), so J is a subset of
/// the result.
MonomialIdeal evaluate_one(const MonomialIdeal& J);

/// J : x_var (0-based variable index).
MonomialIdeal colon_by_var(const MonomialIdeal& J, std::size_t var);
/// J : x_var^infinity.
MonomialIdeal saturate_by_var(const MonomialIdeal& J, std::size_t var);

/// Number of monomials of degree r outside J.
std::uint64_t graded_dim_quotient(const MonomialIdeal& J, std::size_t r);

/// Memoized standard-monomial counter for repeated queries on one ideal.
///
/// Walks the variables in order, keeping the set of generators that can
/// still divide the partial monomial; branches with no live generator are
/// counted by a binomial, branches already inside J are cut.
class StandardMonomialCounter {
public:
  explicit StandardMonomialCounter(MonomialIdeal J);
  std::uint64_t count(std::size_t degree);

private:
  using Mask = std::vector<std::uint64_t>;
  std::uint64_t count_from(std::size_t var, const Mask& live, std::size_t rem);

  MonomialIdeal ideal_;
  std::map<std::tuple<std::size_t, std::size_t, Mask>, std::uint64_t> memo_;
};

/// C(n, k) with 128-bit intermediates.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// dim S/J: s minus the size of a minimum set of variables meeting the
/// support of every generator. The zero ideal gives s; the unit ideal -1.
int krull_dim(const MonomialIdeal& J);

/// Componentwise maximum of the generators of evaluate_zero(J, i); nullopt
/// when no generator survives.
std::optional<ExponentVector> lcm_gens(const MonomialIdeal& J, std::size_t i);

}  // namespace cmreg
