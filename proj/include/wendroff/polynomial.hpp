#pragma once

#include <span>
#include <string>
#include <vector>

#include "wendroff/rational.hpp"

namespace wendroff {

/// Dense univariate polynomial with exact rational coefficients.
///
/// Coefficients are stored by descending power: coeffs()[j] multiplies
/// x^(degree - j). Leading zeros are always trimmed, so degree() is exact;
/// the zero polynomial has no coefficients and degree -1.
///
/// Monic/symmetric are properties checked on demand, not type-level
/// guarantees, because the construction passes through non-monic
/// intermediates such as D_{m} - x D_{m-1}.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> descending);

  static Polynomial constant(const Rational& c);
  static Polynomial one() { return constant(1); }
  static Polynomial x();

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::span<const Rational> coeffs() const { return coeffs_; }

  /// Coefficient at descending index j (of x^(degree - j)); zero when out of range.
  Rational coeff(int j) const;
  /// Coefficient of x^power; zero when out of range.
  Rational coeff_of_power(int power) const;
  const Rational& leading() const;

  /// Coefficient of x^(degree-2); zero for degree < 2 (empty sum).
  Rational beta2() const { return coeff(2); }

  bool is_monic() const;
  /// p(-x) = (-1)^degree p(x), i.e. every odd descending index is zero.
  bool is_symmetric() const;

  Polynomial scaled(const Rational& c) const;
  /// Divide through by the leading coefficient. Throws on the zero polynomial.
  Polynomial monic() const;

  Polynomial operator-() const { return scaled(-1); }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Human-readable form, e.g. "x^3 - 10/9 x".
  std::string str() const;

private:
  void trim();
  std::vector<Rational> coeffs_;
};

Polynomial mul_x(const Polynomial& p);
/// p + c·q, trimmed to exact degree.
Polynomial axpy(const Polynomial& p, const Polynomial& q, const Rational& c);
/// Horner evaluation.
Rational eval(const Polynomial& p, const Rational& x);
/// Formal derivative; constant and zero polynomials give zero.
Polynomial derivative(const Polynomial& p);

Polynomial operator+(const Polynomial& p, const Polynomial& q);
Polynomial operator-(const Polynomial& p, const Polynomial& q);
Polynomial operator*(const Polynomial& p, const Polynomial& q);

struct Division {
  Polynomial quotient;
  Polynomial remainder;
};

/// Euclidean division. Throws std::domain_error when the divisor is zero.
Division divide(const Polynomial& dividend, const Polynomial& divisor);

/// Monic greatest common divisor; gcd(0, 0) is the zero polynomial.
Polynomial gcd(const Polynomial& p, const Polynomial& q);

}  // namespace wendroff
