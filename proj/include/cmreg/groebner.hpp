#pragma once

// Buchberger's algorithm under revlex, reduced Groebner bases, initial
// ideals and deterministic random linear coordinate changes.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cmreg/monideal.hpp"
#include "cmreg/ring.hpp"

namespace cmreg {

/// Raised when an input generator is not homogeneous.
class NonHomogeneousError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct GroebnerOptions {
  /// Buchberger's chain criterion in addition to the coprime criterion.
  bool chain_criterion = false;
};

/// A reduced Groebner basis: monic elements, no term of any element divisible
/// by another element's leading exponent, sorted by decreasing leading
/// exponent.
class GroebnerBasis {
public:
  GroebnerBasis(RingPtr ring, std::vector<Polynomial> elements)
      : ring_(std::move(ring)), elements_(std::move(elements)) {}

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }

  friend bool operator==(const GroebnerBasis&, const GroebnerBasis&) = default;

private:
  RingPtr ring_;
  std::vector<Polynomial> elements_;
};

/// (lcm/lt(f)) f - (lcm/lt(g)) g after making both monic.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Fully reduced remainder of f modulo G: no term of the result is divisible
/// by a leading exponent of G. Zero elements of G are ignored.
Polynomial reduce(const Polynomial& f, std::span<const Polynomial> G);

/// Reduced Groebner basis of the ideal generated by gens.
///
/// Pairs are processed by the normal strategy (smallest lcm degree, ties by
/// revlex-smaller lcm, then by index) so the run is deterministic. Zero
/// generators are dropped. Throws NonHomogeneousError for a non-homogeneous
/// generator and std::invalid_argument for an empty list or mixed rings.
GroebnerBasis buchberger(std::span<const Polynomial> gens,
                         const GroebnerOptions& options = {});

/// Every S-polynomial of the basis reduces to zero.
bool satisfies_buchberger_criterion(const GroebnerBasis& basis);

MonomialIdeal initial_ideal(const GroebnerBasis& basis);

/// Lower-triangular substitution x_j -> sum_{h<=j} m_{jh} x_h on the first
/// k variables; the remaining variables are fixed.
///
/// The diagonal and the strictly lower entries are drawn from F_p \ {0}
/// with a 64-bit Mersenne twister seeded from the given seed, so the matrix
/// is always invertible and reproducible across platforms.
class CoordinateChange {
public:
  static CoordinateChange sample(const RingPtr& ring, std::size_t k,
                                 std::uint64_t seed);
  static CoordinateChange identity(const RingPtr& ring, std::size_t k);

  std::size_t size() const { return k_; }
  /// Row j holds the coefficients of the image of x_{j+1}.
  const std::vector<std::vector<Coefficient>>& matrix() const { return matrix_; }

  Polynomial apply(const Polynomial& f) const;
  std::vector<Polynomial> apply(std::span<const Polynomial> gens) const;

  /// FNV-1a over k, p and the row-major entries, as 16 hex digits.
  std::string digest() const;

private:
  CoordinateChange(RingPtr ring, std::vector<std::vector<Coefficient>> matrix);

  RingPtr ring_;
  std::size_t k_;
  std::vector<std::vector<Coefficient>> matrix_;
};

/// gens after CoordinateChange::sample(ring, k, seed). Requires 1 <= k <= n.
std::vector<Polynomial> random_linear_change(std::span<const Polynomial> gens,
                                             std::size_t k, std::uint64_t seed);

}  // namespace cmreg
