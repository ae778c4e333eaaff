#include "sigmalab/model/number.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace sigmalab::model {

namespace {

using i128 = __int128;

constexpr i128 kMax64 = std::numeric_limits<std::int64_t>::max();

i128 abs128(i128 x) { return x < 0 ? -x : x; }

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    const i128 r = a % b;
    a = b;
    b = r;
  }
  return a;
}

// Multiplies with overflow detection against the int128 range.
bool mul_ok(i128 a, i128 b, i128& out) { return !__builtin_mul_overflow(a, b, &out); }
bool add_ok(i128 a, i128 b, i128& out) { return !__builtin_add_overflow(a, b, &out); }

}  // namespace

Number::Number(std::int64_t integer) : exact_(true), num_(integer), den_(1) {}

Number::Number(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("Number: zero denominator");
  *this = from_wide(num, den);
}

Number Number::inexact(double value) {
  Number x;
  x.exact_ = false;
  x.num_ = 0;
  x.den_ = 1;
  x.value_ = value;
  return x;
}

Number Number::infinity() { return inexact(std::numeric_limits<double>::infinity()); }

Number Number::from_wide(i128 num, i128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const i128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (abs128(num) > kMax64 || den > kMax64) {
    return inexact(static_cast<double>(num) / static_cast<double>(den));
  }
  Number x;
  x.exact_ = true;
  x.num_ = static_cast<std::int64_t>(num);
  x.den_ = static_cast<std::int64_t>(den);
  return x;
}

Number Number::parse(std::string_view text) {
  std::string s(text);
  // trim
  const auto b = s.find_first_not_of(" \t\r\n");
  const auto e = s.find_last_not_of(" \t\r\n");
  if (b == std::string::npos) throw std::invalid_argument("empty number");
  s = s.substr(b, e - b + 1);

  if (s == "inf" || s == "+inf" || s == "infinity") return infinity();

  if (const auto slash = s.find('/'); slash != std::string::npos) {
    const Number n = parse(s.substr(0, slash));
    const Number d = parse(s.substr(slash + 1));
    if (d == Number(0)) throw std::invalid_argument("zero denominator in '" + s + "'");
    return n / d;
  }

  // [sign] digits [. digits] [(e|E) [sign] digits]
  std::size_t i = 0;
  bool negative = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) negative = s[i++] == '-';
  i128 mantissa = 0;
  int scale = 0;
  bool any_digit = false;
  bool overflow = false;
  bool seen_point = false;
  for (; i < s.size(); ++i) {
    const char c = s[i];
    if (c >= '0' && c <= '9') {
      any_digit = true;
      if (!overflow) {
        i128 next;
        if (mul_ok(mantissa, 10, next) && add_ok(next, c - '0', next) && next <= kMax64) {
          mantissa = next;
          if (seen_point) --scale;
        } else {
          overflow = true;
        }
      }
      if (overflow && !seen_point) ++scale;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!any_digit) throw std::invalid_argument("malformed number '" + s + "'");
  if (i < s.size()) {
    if (s[i] != 'e' && s[i] != 'E') throw std::invalid_argument("malformed number '" + s + "'");
    ++i;
    std::size_t used = 0;
    int exponent = 0;
    try {
      exponent = std::stoi(s.substr(i), &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed exponent in '" + s + "'");
    }
    if (i + used != s.size()) throw std::invalid_argument("malformed number '" + s + "'");
    scale += exponent;
  }

  const auto fallback = [&] {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    return inexact(v);
  };
  if (overflow || scale > 18 || scale < -18) return fallback();
  i128 pow10 = 1;
  for (int k = 0; k < std::abs(scale); ++k) pow10 *= 10;
  if (negative) mantissa = -mantissa;
  if (scale >= 0) {
    i128 num;
    if (!mul_ok(mantissa, pow10, num)) return fallback();
    return from_wide(num, 1);
  }
  return from_wide(mantissa, pow10);
}

bool Number::is_integer() const noexcept {
  if (exact_) return den_ == 1;
  return std::isfinite(value_) && std::floor(value_) == value_;
}

bool Number::is_finite() const noexcept { return exact_ || std::isfinite(value_); }

double Number::to_double() const noexcept {
  if (!exact_) return value_;
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Number::str() const {
  if (exact_) {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }
  if (std::isinf(value_)) return value_ > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value_);
  return buf;
}

std::string Number::decimal_str() const {
  if (!exact_ || den_ == 1) return str();
  // Terminating iff the denominator has no prime factors besides 2 and 5.
  std::int64_t d = den_;
  int twos = 0;
  int fives = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++twos;
  }
  while (d % 5 == 0) {
    d /= 5;
    ++fives;
  }
  if (d != 1) return str();
  const int digits = std::max(twos, fives);
  if (digits > 18) return str();
  i128 pow10 = 1;
  for (int k = 0; k < digits; ++k) pow10 *= 10;
  const i128 scaled = static_cast<i128>(num_) * (pow10 / den_);
  const bool negative = scaled < 0;
  const i128 mag = abs128(scaled);
  const auto int_part = static_cast<std::int64_t>(mag / pow10);
  auto frac = static_cast<std::int64_t>(mag % pow10);
  std::string frac_str = std::to_string(frac);
  frac_str.insert(0, static_cast<std::size_t>(digits) - frac_str.size(), '0');
  while (!frac_str.empty() && frac_str.back() == '0') frac_str.pop_back();
  std::string out = (negative ? "-" : "") + std::to_string(int_part);
  if (!frac_str.empty()) out += "." + frac_str;
  return out;
}

Number Number::operator-() const {
  if (!exact_) return inexact(-value_);
  return from_wide(-static_cast<i128>(num_), den_);
}

Number operator+(const Number& a, const Number& b) {
  if (!a.exact_ || !b.exact_) return Number::inexact(a.to_double() + b.to_double());
  const i128 num = static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_;
  const i128 den = static_cast<i128>(a.den_) * b.den_;
  return Number::from_wide(num, den);
}

Number operator-(const Number& a, const Number& b) { return a + (-b); }

Number operator*(const Number& a, const Number& b) {
  if (!a.exact_ || !b.exact_) return Number::inexact(a.to_double() * b.to_double());
  return Number::from_wide(static_cast<i128>(a.num_) * b.num_,
                           static_cast<i128>(a.den_) * b.den_);
}

Number operator/(const Number& a, const Number& b) {
  if (!a.exact_ || !b.exact_ || b.num_ == 0) {
    return Number::inexact(a.to_double() / b.to_double());
  }
  return Number::from_wide(static_cast<i128>(a.num_) * b.den_,
                           static_cast<i128>(a.den_) * b.num_);
}

bool operator==(const Number& a, const Number& b) {
  if (a.exact_ && b.exact_) return a.num_ == b.num_ && a.den_ == b.den_;
  return a.to_double() == b.to_double();
}

std::partial_ordering operator<=>(const Number& a, const Number& b) {
  if (a.exact_ && b.exact_) {
    const i128 lhs = static_cast<i128>(a.num_) * b.den_;
    const i128 rhs = static_cast<i128>(b.num_) * a.den_;
    if (lhs < rhs) return std::partial_ordering::less;
    if (lhs > rhs) return std::partial_ordering::greater;
    return std::partial_ordering::equivalent;
  }
  return a.to_double() <=> b.to_double();
}

Number min(const Number& a, const Number& b) { return b < a ? b : a; }
Number max(const Number& a, const Number& b) { return a < b ? b : a; }

Number ceil(const Number& x) {
  if (!x.is_exact()) return Number::inexact(std::ceil(x.to_double()));
  const std::int64_t n = x.numerator();
  const std::int64_t d = x.denominator();
  std::int64_t q = n / d;
  if (n % d != 0 && n > 0) ++q;
  return Number(q);
}

Number positive_part(const Number& x) { return max(x, Number(0)); }

std::ostream& operator<<(std::ostream& os, const Number& x) { return os << x.str(); }

}  // namespace sigmalab::model
