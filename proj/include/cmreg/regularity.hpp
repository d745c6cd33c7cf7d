#pragma once

// Castelnuovo-Mumford regularity and partial regularities of S/I from the
// revlex initial ideal of I, level by level, with random coordinate changes
// when a level fails the finiteness test. Also the projective-curve report.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cmreg/extended_degree.hpp"
#include "cmreg/groebner.hpp"
#include "cmreg/monideal.hpp"
#include "cmreg/staircase.hpp"

namespace cmreg {

struct RegularityOptions {
  std::uint64_t seed = 0;
  int max_retries = 10;
  GroebnerOptions groebner;
};

/// One coordinate change performed at a level that failed the finiteness
/// test. `seed` is the derived seed handed to CoordinateChange::sample, with
/// k = n - level.
struct RetryRecord {
  std::size_t level = 0;
  int attempt = 0;
  std::uint64_t seed = 0;
  std::string digest;

  friend bool operator==(const RetryRecord&, const RetryRecord&) = default;
};

struct RegularityReport {
  std::size_t n = 0;
  std::uint32_t p = 0;
  int d = 0;
  /// c_0 .. c_d.
  std::vector<ExtendedDegree> c;
  /// F_0 .. F_d.
  std::vector<CornerSet> corners;
  int r = 0;
  int reg = 0;
  /// reg_t for t = 0..d; reg_t coincides with the (n - t)-regularity.
  std::vector<ExtendedDegree> reg_t;
  /// max{deg g_i - n + i : i <= t} over the level ideals actually used.
  std::vector<ExtendedDegree> bound;
  /// Smallest t with c_t = max{c_0..c_d}; empty if every c_i is -infinity.
  std::optional<std::size_t> attained_t;
  std::vector<RetryRecord> retries;
  /// revlex initial ideal of the input, before any coordinate change.
  MonomialIdeal initial_ideal{0};
  /// J_0 .. J_d as used for the level values (after any coordinate change).
  std::vector<MonomialIdeal> level_ideals;

  friend bool operator==(const RegularityReport&, const RegularityReport&) = default;
};

/// Raised when a level stays infinite after max_retries coordinate changes.
class RetriesExhausted : public std::runtime_error {
public:
  RetriesExhausted(std::size_t level, ExponentSet E_level, ExponentSet E_next);
  std::size_t level() const { return level_; }
  const ExponentSet& exponent_set() const { return E_level_; }
  const ExponentSet& next_exponent_set() const { return E_next_; }

private:
  std::size_t level_;
  ExponentSet E_level_;
  ExponentSet E_next_;
};

/// Seed for the coordinate change at (level, attempt): splitmix64 over the
/// base seed, level and attempt.
std::uint64_t retry_seed(std::uint64_t base, std::size_t level, int attempt);

/// reg(S/I), reg_t(S/I), c_0..c_d and r(I) for the homogeneous ideal
/// generated by gens.
///
/// Throws NonHomogeneousError, std::invalid_argument for the unit ideal,
/// RetriesExhausted, or InfiniteReductionNumber.
RegularityReport compute_report(std::span<const Polynomial> gens,
                                const RegularityOptions& options = {});

/// Same pipeline with no Buchberger step: the monomial ideal is its own
/// initial ideal. Retries still go through polynomial coordinate changes in
/// `ring`.
RegularityReport compute_report(const MonomialIdeal& J, const RingPtr& ring,
                                const RegularityOptions& options = {});

/// max{deg g_i - n + i : i = 0..t} with g_i the lcm of the generators of J
/// free of the last i variables; a level without such generators takes
/// g_i = 1 and contributes i - n.
ExtendedDegree reg_bound(const MonomialIdeal& J, std::size_t t);

struct ZerodivisorFlags {
  /// Level i: x_{n-i} is a nonzerodivisor on S/(I, x_n, ..., x_{n-i+1}).
  std::vector<bool> nonzerodivisor;
  /// x_n, ..., x_{n-d+1} is filter-regular (all checked levels finite).
  bool filter_regular = true;
};

/// One flag per level 0..d-1.
ZerodivisorFlags zerodivisor_flags(const RegularityReport& report);

struct CurveReport {
  std::size_t n = 0;
  /// d = 2, n >= 3 and S_2 / J_2 has finite length.
  bool noether_ok = false;
  /// Set when the curve formulas are withheld.
  std::string diagnostic;
  ExtendedDegree c1;
  std::optional<int> r;
  std::optional<int> reg;
  /// H(E) = r + 1; reported for arithmetically Cohen-Macaulay curves only.
  std::optional<int> H_E;
  /// H(R) = max{0, c1}, cross-checked against direct counting.
  std::optional<int> H_Re;
  /// c1 + n - 1 when c1 is finite; empty for the Cohen-Macaulay case.
  std::optional<int> last_shift;

  bool formulas_available() const { return reg.has_value(); }
  bool cohen_macaulay() const { return reg && c1.is_minus_infinity(); }
};

/// Curve formulas in the given coordinates (no coordinate change). The input
/// is assumed to be the saturated ideal of a curve; this is not verified.
/// If x_n is a zerodivisor or level 1 is infinite, the formulas are withheld
/// with a diagnostic.
CurveReport curve_report(std::span<const Polynomial> gens,
                         const GroebnerOptions& options = {});
CurveReport curve_report(const MonomialIdeal& J);

/// Smallest r such that s -> sum_{u <= s} dim (J~_1 / J_1)_u is constant for
/// s >= r, counted up to `ceiling`.
int stabilization_degree(const MonomialIdeal& J_1, std::size_t ceiling);

}  // namespace cmreg
