#pragma once

// Exponent vectors, the graded reverse lexicographic order and polynomials
// over a prime field F_p.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cmreg {

using Exponent = std::uint32_t;
using Coefficient = std::uint32_t;

inline constexpr std::uint32_t kDefaultCharacteristic = 32003;

/// A lattice point in N^s. Used for monomials, staircase points and corners.
///
/// The defaulted ordering is plain lexicographic storage order so that
/// vectors can live in sorted containers; it is NOT a monomial order. Use
/// revlex_compare for that and divides() for the componentwise order.
class ExponentVector {
public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t size) : entries_(size, 0) {}
  ExponentVector(std::initializer_list<Exponent> entries) : entries_(entries) {}
  explicit ExponentVector(std::vector<Exponent> entries)
      : entries_(std::move(entries)) {}

  std::size_t size() const { return entries_.size(); }
  Exponent operator[](std::size_t i) const { return entries_[i]; }
  Exponent& operator[](std::size_t i) { return entries_[i]; }
  std::span<const Exponent> entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  /// Total degree |a|.
  std::uint64_t degree() const;
  bool is_zero() const;

  /// Copy with coordinate j removed.
  ExponentVector without(std::size_t j) const;
  /// Copy truncated to the first k coordinates.
  ExponentVector prefix(std::size_t k) const;

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;

private:
  std::vector<Exponent> entries_;
};

/// Componentwise a <= b, i.e. x^a divides x^b.
bool divides(const ExponentVector& a, const ExponentVector& b);
ExponentVector lcm(const ExponentVector& a, const ExponentVector& b);
ExponentVector operator+(const ExponentVector& a, const ExponentVector& b);
/// Requires divides(b, a).
ExponentVector operator-(const ExponentVector& a, const ExponentVector& b);
bool coprime(const ExponentVector& a, const ExponentVector& b);

std::ostream& operator<<(std::ostream& os, const ExponentVector& v);

/// Graded reverse lexicographic order with x_1 > x_2 > ... > x_n.
///
/// Higher total degree wins. At equal degree, a > b exactly when the last
/// nonzero entry of a - b is negative. Throws std::invalid_argument on a
/// length mismatch.
std::strong_ordering revlex_compare(const ExponentVector& a,
                                    const ExponentVector& b);

/// Arithmetic in Z/pZ for a prime p < 2^31.
class PrimeField {
public:
  explicit PrimeField(std::uint32_t p = kDefaultCharacteristic);

  std::uint32_t characteristic() const { return p_; }
  Coefficient reduce(std::int64_t value) const;
  Coefficient add(Coefficient a, Coefficient b) const;
  Coefficient sub(Coefficient a, Coefficient b) const;
  Coefficient neg(Coefficient a) const { return a == 0 ? 0 : p_ - a; }
  Coefficient mul(Coefficient a, Coefficient b) const;
  /// Throws std::domain_error for a == 0.
  Coefficient inverse(Coefficient a) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t value);

/// S = F_p[x_1..x_n] with named variables; position encodes the order.
class Ring {
public:
  Ring(std::vector<std::string> names,
       std::uint32_t characteristic = kDefaultCharacteristic);

  /// Variables named x1..xn.
  static std::shared_ptr<const Ring> make(
      std::size_t n, std::uint32_t characteristic = kDefaultCharacteristic);
  static std::shared_ptr<const Ring> make(
      std::vector<std::string> names,
      std::uint32_t characteristic = kDefaultCharacteristic);

  std::size_t num_vars() const { return names_.size(); }
  std::uint32_t characteristic() const { return field_.characteristic(); }
  const PrimeField& field() const { return field_; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  /// The ring on the first k variables, same field.
  std::shared_ptr<const Ring> prefix(std::size_t k) const;

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.field_ == b.field_ && a.names_ == b.names_;
  }

private:
  std::vector<std::string> names_;
  PrimeField field_;
};

using RingPtr = std::shared_ptr<const Ring>;

struct Term {
  ExponentVector exponent;
  Coefficient coefficient = 0;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial with terms kept in strictly decreasing revlex order and
/// no zero coefficients, so equality is structural and the leading term is
/// the first one.
class Polynomial {
public:
  explicit Polynomial(RingPtr ring);
  /// Normalizes: sorts, merges equal exponents, drops zero coefficients.
  Polynomial(RingPtr ring, std::vector<Term> terms);

  static Polynomial monomial(RingPtr ring, ExponentVector exponent,
                             Coefficient coefficient = 1);
  /// The variable x_{index+1}.
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial constant(RingPtr ring, std::int64_t value);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Throws std::domain_error on the zero polynomial.
  const Term& leading_term() const;
  const ExponentVector& leading_exponent() const {
    return leading_term().exponent;
  }
  Coefficient leading_coefficient() const {
    return leading_term().coefficient;
  }

  bool is_homogeneous() const;
  /// Largest total degree of a term; requires a nonzero polynomial.
  std::uint64_t degree() const;

  Polynomial operator-() const;
  Polynomial scaled(Coefficient c) const;
  /// c * x^shift * this.
  Polynomial shifted(const ExponentVector& shift, Coefficient c) const;
  /// Scaled so the leading coefficient is 1.
  Polynomial monic() const;

  /// this - c * x^shift * g, merged in one pass.
  void subtract_multiple(Coefficient c, const ExponentVector& shift,
                         const Polynomial& g);

  /// Image in the ring of the first n - k variables under
  /// x_{n-k+1} = ... = x_n = 0.
  Polynomial evaluate_last_zero(std::size_t k) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Throws std::invalid_argument when rings differ.
void require_same_ring(const Polynomial& f, const Polynomial& g);

Polynomial operator+(const Polynomial& f, const Polynomial& g);
Polynomial operator-(const Polynomial& f, const Polynomial& g);
Polynomial operator*(const Polynomial& f, const Polynomial& g);
Polynomial operator*(Coefficient c, const Polynomial& f);

/// Term syntax, e.g. "x1^3*x3^2 - x2^4*x4". Coefficients above p/2 print as
/// negatives.
std::string to_string(const Polynomial& f);
std::ostream& operator<<(std::ostream& os, const Polynomial& f);

}  // namespace cmreg
