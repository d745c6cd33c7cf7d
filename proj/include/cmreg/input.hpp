#pragma once

// The ideal file format read by the command-line tool:
//
//   ring <p> <name_1> ... <name_n>
//   [mode monomial]
//   <generator>
//   ...
//
// Blank lines and lines starting with '#' are skipped. Generators use the
// term syntax `[coef*]var[^exp]*...` joined by '+' / '-'.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cmreg/regularity.hpp"
#include "cmreg/ring.hpp"

namespace cmreg {

/// Parse failure with a 1-based line and column (0 when not applicable).
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

struct InputSpec {
  RingPtr ring;
  bool monomial_mode = false;
  std::vector<Polynomial> generators;
  RegularityOptions options;

  /// Ring, mode and generators; options are not part of the file.
  friend bool operator==(const InputSpec& a, const InputSpec& b) {
    return *a.ring == *b.ring && a.monomial_mode == b.monomial_mode &&
           a.generators == b.generators;
  }
};

/// Parses one polynomial in `ring`. Column numbers in errors are relative to
/// `text`.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

/// Parses an ideal file. `characteristic`, when given, replaces the modulus
/// on the ring line. Throws ParseError for unknown variables, bad exponents,
/// non-prime moduli, multi-term lines in monomial mode and non-homogeneous
/// generators in polynomial mode.
InputSpec parse_input(std::string_view text,
                      std::optional<std::uint32_t> characteristic = std::nullopt);

/// Inverse of parse_input.
std::string format_input(const InputSpec& spec);

/// The generators of a monomial-mode spec as a monomial ideal.
MonomialIdeal monomial_ideal(const InputSpec& spec);

}  // namespace cmreg
