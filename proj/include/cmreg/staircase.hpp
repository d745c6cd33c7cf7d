#pragma once

// Lattice combinatorics of a level ideal J_i: its exponent set, coordinate
// projections, the finiteness test for J~_i / J_i, staircase corners and the
// resulting values c_i and r.

#include <optional>
#include <stdexcept>
#include <vector>

#include "cmreg/extended_degree.hpp"
#include "cmreg/monideal.hpp"

namespace cmreg {

/// A finite set of points in N^s, kept sorted and duplicate free.
class PointSet {
public:
  explicit PointSet(std::size_t num_vars) : num_vars_(num_vars) {}
  PointSet(std::size_t num_vars, std::vector<ExponentVector> points);

  std::size_t num_vars() const { return num_vars_; }
  const std::vector<ExponentVector>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  bool contains(const ExponentVector& v) const;

  friend bool operator==(const PointSet&, const PointSet&) = default;

private:
  std::size_t num_vars_;
  std::vector<ExponentVector> points_;
};

/// E_i: exponents of the minimal generators of a level ideal.
using ExponentSet = PointSet;
/// F_i: the corners of the staircase left of a level ideal.
using CornerSet = PointSet;

/// Raised when S_d / J_d has infinite length.
class InfiniteReductionNumber : public std::runtime_error {
public:
  InfiniteReductionNumber()
      : std::runtime_error(
            "r(I) infinite: evaluations not in general position") {}
};

ExponentSet exponent_set(const MonomialIdeal& J);

/// Deletes coordinate j (0-based) from every point. Not minimalized.
ExponentSet project(const ExponentSet& E, std::size_t j);

/// Finiteness criterion for J~_i / J_i in terms of E_i (s coordinates) and
/// E_{i+1} (s - 1 coordinates): every a in p_s(E_i) \ E_{i+1} must dominate,
/// after deleting coordinate j, some element of E_{i+1} with coordinate j
/// deleted, for each j < s - 1.
bool is_c_finite(const ExponentSet& E_i, const ExponentSet& E_next);

/// Socle points of S/J: a with x^a outside J and x_j x^a inside J for all j.
///
/// Enumerated over the box a_j < max_j (the largest j-th generator
/// exponent), descending only through standard monomials.
CornerSet corners(const MonomialIdeal& J);

/// Proof that J~ / J has finite length for one level ideal J. Only
/// certify_finite issues these.
class FinitenessCertificate {
public:
  const MonomialIdeal& ideal() const { return ideal_; }

private:
  explicit FinitenessCertificate(MonomialIdeal J) : ideal_(std::move(J)) {}
  friend std::optional<FinitenessCertificate> certify_finite(const MonomialIdeal&);
  MonomialIdeal ideal_;
};

/// Runs is_c_finite on J and J evaluated one step further. A level with no
/// variables left is trivially finite.
std::optional<FinitenessCertificate> certify_finite(const MonomialIdeal& J);

/// c_i = max |a| over the corners of J_i, or -infinity without corners.
/// Throws std::invalid_argument if the certificate belongs to another ideal.
ExtendedDegree c_value(const MonomialIdeal& J_i,
                       const FinitenessCertificate& certificate);

/// r = max |a| over the corners of an Artinian J_d.
/// Throws InfiniteReductionNumber if S_d / J_d is not of finite length and
/// std::invalid_argument for the unit ideal.
int r_value(const MonomialIdeal& J_d);

}  // namespace cmreg
