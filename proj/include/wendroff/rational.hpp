#pragma once

#include <compare>
#include <concepts>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace wendroff {

/// Exact arbitrary-precision rational number, always in lowest terms with a
/// positive denominator.
class Rational {
public:
  Rational() = default;

  template <std::integral T>
  Rational(T value) : value_(static_cast<long>(value)) {}

  Rational(long numerator, long denominator);

  /// Builds from an already-canonical GMP value.
  explicit Rational(mpq_class value);

  /// Accepts "p/q" or "p" with optional leading sign. Decimal points and
  /// exponents are rejected so that no input passes through binary floating
  /// point. Throws std::invalid_argument on malformed text or a zero
  /// denominator.
  static Rational parse(std::string_view text);

  /// Canonical lowest-terms form: "p/q", or "p" when the denominator is 1.
  std::string str() const;

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  double to_double() const { return value_.get_d(); }

  Rational abs() const;
  Rational reciprocal() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  /// Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return lhs.value_ == rhs.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

private:
  mpq_class value_{0};
};

/// Integer power with a nonnegative exponent.
Rational pow(const Rational& base, unsigned exponent);

Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

/// Fixed-point rendering with `significant` significant digits and trailing
/// zeros removed, e.g. 1.94625, -0.867151, 0.
std::string format_significant(const Rational& value, int significant = 6);

}  // namespace wendroff

template <>
struct std::hash<wendroff::Rational> {
  std::size_t operator()(const wendroff::Rational& r) const noexcept {
    return std::hash<std::string>{}(r.str());
  }
};
