#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace sigmalab::model {

/// A real number that stays an exact rational (64-bit numerator/denominator)
/// as long as every operation producing it was exact, and degrades to a
/// double otherwise (overflow, inexact input, infinities).
///
/// All closed-form exponent formulas are written once against this type, so
/// golden values such as 103/43 compare exactly while irrational inputs still
/// work through the same code path.
class Number {
 public:
  constexpr Number() = default;
  Number(std::int64_t integer);  // NOLINT(google-explicit-constructor)
  Number(int integer) : Number(static_cast<std::int64_t>(integer)) {}  // NOLINT
  Number(std::int64_t num, std::int64_t den);

  static Number inexact(double value);
  static Number infinity();

  /// Parses "3", "-7/4", "0.125", "1e-3", "2.5E+2". Decimal literals are
  /// exact when numerator and denominator fit in 64 bits; "inf" gives
  /// +infinity. Throws std::invalid_argument on malformed text.
  static Number parse(std::string_view text);

  bool is_exact() const noexcept { return exact_; }
  bool is_integer() const noexcept;
  bool is_finite() const noexcept;
  std::int64_t numerator() const noexcept { return num_; }
  std::int64_t denominator() const noexcept { return den_; }
  double to_double() const noexcept;

  /// "103/43", "3", or "%.17g" of the double for inexact values.
  std::string str() const;
  /// Terminating decimal when the exact value has one ("1.1"), otherwise
  /// the same as str().
  std::string decimal_str() const;

  Number operator-() const;
  friend Number operator+(const Number& a, const Number& b);
  friend Number operator-(const Number& a, const Number& b);
  friend Number operator*(const Number& a, const Number& b);
  friend Number operator/(const Number& a, const Number& b);
  Number& operator+=(const Number& o) { return *this = *this + o; }
  Number& operator-=(const Number& o) { return *this = *this - o; }
  Number& operator*=(const Number& o) { return *this = *this * o; }
  Number& operator/=(const Number& o) { return *this = *this / o; }

  friend bool operator==(const Number& a, const Number& b);
  friend std::partial_ordering operator<=>(const Number& a, const Number& b);

 private:
  static Number from_wide(__int128 num, __int128 den);

  bool exact_ = true;
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  double value_ = 0.0;
};

Number min(const Number& a, const Number& b);
Number max(const Number& a, const Number& b);
Number ceil(const Number& x);
/// [x]^+ = max{x, 0}
Number positive_part(const Number& x);

std::ostream& operator<<(std::ostream& os, const Number& x);

}  // namespace sigmalab::model
