#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace oddpath {

/// Exact rational number with 64-bit numerator and denominator.
///
/// Values are kept in lowest terms with a positive denominator. Every
/// operation computes in 128-bit intermediates and throws
/// std::overflow_error if the reduced result does not fit in 64 bits, so a
/// result is either exact or an error, never silently rounded.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t value) : num_(value) {}  // NOLINT: implicit by design of arithmetic use
  Rational(std::int64_t num, std::int64_t den);

  /// Parses "7", "-3/4", "2.5", "-0.125" or "+1". Throws std::invalid_argument.
  static Rational parse(std::string_view text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_negative() const { return num_ < 0; }
  bool is_zero() const { return num_ == 0; }
  int sign() const { return (num_ > 0) - (num_ < 0); }

  Rational abs() const { return num_ < 0 ? -*this : *this; }
  Rational half() const { return *this / Rational(2); }

  Rational operator-() const;
  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// "p" for integers, "p/q" otherwise. Round-trips through parse().
  std::string to_string() const;
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

 private:
  static Rational from_wide(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// A list of rationals rewritten over one common denominator. Integer-only
/// kernels (matching, flows, table DP) consume `values` and convert sums back
/// through `to_rational`.
struct ScaledWeights {
  std::int64_t denominator = 1;
  std::vector<std::int64_t> values;

  Rational to_rational(std::int64_t scaled) const { return Rational(scaled, denominator); }
};

/// Throws std::overflow_error when the common denominator or a scaled value
/// leaves the 64-bit range, or when `headroom` copies of the largest
/// magnitude could no longer be summed safely.
ScaledWeights scale_to_integers(std::span<const Rational> weights, std::int64_t headroom = 1);

/// Overflow-checked helpers for the integer kernels.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace oddpath
