#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>

namespace cmreg {

/// An integer degree extended by -infinity, ordered below every integer.
///
/// Used for the level invariants c_i, the partial regularities and the lcm
/// bounds, all of which are -infinity when the relevant module vanishes.
class ExtendedDegree {
public:
  constexpr ExtendedDegree() = default;
  constexpr explicit ExtendedDegree(int value) : value_(value) {}

  static constexpr ExtendedDegree minus_infinity() { return ExtendedDegree(); }

  constexpr bool is_finite() const { return value_.has_value(); }
  constexpr bool is_minus_infinity() const { return !value_.has_value(); }

  int value() const {
    if (!value_) throw std::logic_error("value() of -infinity");
    return *value_;
  }

  // std::optional already orders nullopt below every engaged value.
  friend constexpr bool operator==(const ExtendedDegree&,
                                   const ExtendedDegree&) = default;
  friend constexpr std::strong_ordering operator<=>(const ExtendedDegree& a,
                                                    const ExtendedDegree& b) {
    if (a.value_ && b.value_) return *a.value_ <=> *b.value_;
    return a.value_.has_value() <=> b.value_.has_value();
  }

  /// "-infinity" or the decimal value.
  std::string to_string() const {
    return value_ ? std::to_string(*value_) : std::string("-infinity");
  }

private:
  std::optional<int> value_;
};

inline ExtendedDegree max(ExtendedDegree a, ExtendedDegree b) {
  return a < b ? b : a;
}

}  // namespace cmreg
