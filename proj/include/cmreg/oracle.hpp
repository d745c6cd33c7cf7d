#pragma once

// Definitional counterparts of c_i and r computed by graded counting on the
// initial ideal, plus a generator of strongly stable test ideals.
//
// Nothing here uses the staircase corners; the level values come from
// comparing Hilbert functions of J_i and its saturation by the last
// variable, degree by degree.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "cmreg/extended_degree.hpp"
#include "cmreg/monideal.hpp"
#include "cmreg/ring.hpp"

namespace cmreg {

/// Largest degree where J_i and J_i : x_{n-i}^infinity differ.
struct LevelOracle {
  std::size_t level = 0;
  /// Meaningful only when !infinite.
  ExtendedDegree value;
  bool infinite = false;
  std::size_t ceiling = 0;
  /// (degree, dim of the difference) for every degree with a difference.
  std::vector<std::pair<std::size_t, std::uint64_t>> trace;
};

struct OracleOutcome {
  std::vector<LevelOracle> levels;
  /// Empty when S_d / J_d is not Artinian within the ceiling.
  std::optional<int> r_def;
  std::size_t r_ceiling = 0;
};

class NotArtinian : public std::runtime_error {
public:
  NotArtinian() : std::runtime_error("not Artinian: standard monomials persist at the ceiling") {}
};

/// Smallest ceiling a_def accepts for level i: deg g_i - (n - i) + 1.
std::size_t min_a_ceiling(const MonomialIdeal& J, std::size_t level);
/// Default search ceiling: twice the level lcm degree plus the variable count.
std::size_t default_a_ceiling(const MonomialIdeal& J, std::size_t level);

/// a_z^i for z = x_n, x_{n-1}, ... computed on J = In(I) by counting.
///
/// A difference in any degree above deg g_i - (n - i), the largest possible
/// finite value, marks the level infinite. Throws std::invalid_argument if
/// ceiling < min_a_ceiling(J, level).
LevelOracle a_def(const MonomialIdeal& J, std::size_t level, std::size_t ceiling);

/// Largest r <= ceiling with standard monomials of degree r outside J_d.
/// Throws NotArtinian if they persist at the ceiling and
/// std::invalid_argument if ceiling < |lcm of the generators|.
int r_def(const MonomialIdeal& J_d, std::size_t ceiling);
std::size_t default_r_ceiling(const MonomialIdeal& J_d);

/// Borel closure: the smallest strongly stable set of monomials containing
/// the given ones, then minimalized.
MonomialIdeal borel_closure(std::size_t num_vars, std::span<const ExponentVector> monomials);

/// For every generator m, x_j | m implies m x_h / x_j in J for all h < j.
bool is_strongly_stable(const MonomialIdeal& J);

/// Borel closure of a few random monomials of degree 1..max_degree.
MonomialIdeal gen_strongly_stable(std::uint64_t seed, std::size_t num_vars,
                                  std::size_t max_degree);

struct LevelComparison {
  std::size_t level = 0;
  bool finite = false;          // staircase finiteness test
  ExtendedDegree c;             // staircase value, when finite
  LevelOracle oracle;
  bool match = false;
};

struct CrossCheck {
  std::vector<LevelComparison> levels;
  std::optional<int> r;         // staircase r, when J_d is Artinian
  std::optional<int> r_def;     // counting r, when Artinian within the ceiling
  bool r_match = false;
  bool match = false;
};

/// Compares the staircase values with the counting oracle on every level
/// 0..d-1 of In(I) in the given coordinates (no coordinate change). A level
/// failing the finiteness test matches when the oracle reports it infinite.
CrossCheck cross_check(const MonomialIdeal& initial);
CrossCheck cross_check(std::span<const Polynomial> gens);

}  // namespace cmreg
