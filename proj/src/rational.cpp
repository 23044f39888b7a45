#include "wendroff/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace wendroff {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string strip_plus(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return std::string(s);
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(numerator, 1);
  value_ /= denominator;
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' ||
      den.front() == '+') {
    throw std::invalid_argument("expected a fraction of the form p/q, got '" +
                                std::string(text) + "'");
  }
  mpz_class n(strip_plus(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  mpq_class q(n, d);
  q.canonicalize();
  return Rational(std::move(q));
}

std::string Rational::str() const { return value_.get_str(10); }

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::reciprocal() const { return Rational(1) / *this; }

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("rational division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational pow(const Rational& base, unsigned exponent) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), exponent);
  return Rational(mpq_class(num, den));
}

Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

std::string format_significant(const Rational& value, int significant) {
  if (value.is_zero()) return "0";
  const double v = value.to_double();
  const int exponent = static_cast<int>(std::floor(std::log10(std::fabs(v))));
  const int decimals = std::max(0, significant - 1 - exponent);
  char buf[128];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  std::string out(buf);
  if (out.find('.') != std::string::npos) {
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  if (out == "-0") out = "0";
  return out;
}

}  // namespace wendroff
