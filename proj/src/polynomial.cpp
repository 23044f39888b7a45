#include "wendroff/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace wendroff {

Polynomial::Polynomial(std::vector<Rational> descending) : coeffs_(std::move(descending)) {
  trim();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::x() { return Polynomial({1, 0}); }

void Polynomial::trim() {
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(),
                            [](const Rational& c) { return !c.is_zero(); });
  coeffs_.erase(coeffs_.begin(), first);
}

Rational Polynomial::coeff(int j) const {
  if (j < 0 || j >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[j];
}

Rational Polynomial::coeff_of_power(int power) const { return coeff(degree() - power); }

const Rational& Polynomial::leading() const {
  if (is_zero()) throw std::domain_error("leading coefficient of the zero polynomial");
  return coeffs_.front();
}

bool Polynomial::is_monic() const { return !is_zero() && coeffs_.front() == Rational(1); }

bool Polynomial::is_symmetric() const {
  for (std::size_t j = 1; j < coeffs_.size(); j += 2) {
    if (!coeffs_[j].is_zero()) return false;
  }
  return true;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c.is_zero()) return {};
  Polynomial out = *this;
  for (auto& a : out.coeffs_) a *= c;
  return out;
}

Polynomial Polynomial::monic() const { return scaled(leading().reciprocal()); }

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::string out;
  const int d = degree();
  for (int j = 0; j <= d; ++j) {
    const Rational& c = coeffs_[j];
    if (c.is_zero()) continue;
    const int power = d - j;
    const Rational mag = c.abs();
    if (out.empty()) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    const bool unit = mag == Rational(1);
    if (!unit || power == 0) out += mag.str();
    if (power > 0) {
      if (!unit) out += " ";
      out += "x";
      if (power > 1) out += "^" + std::to_string(power);
    }
  }
  return out;
}

Polynomial mul_x(const Polynomial& p) {
  if (p.is_zero()) return {};
  std::vector<Rational> c(p.coeffs().begin(), p.coeffs().end());
  c.emplace_back(0);
  return Polynomial(std::move(c));
}

Polynomial axpy(const Polynomial& p, const Polynomial& q, const Rational& c) {
  const int dp = p.degree();
  const int dq = q.is_zero() || c.is_zero() ? -1 : q.degree();
  const int d = std::max(dp, dq);
  if (d < 0) return {};
  std::vector<Rational> out(d + 1);
  for (int power = 0; power <= d; ++power) {
    Rational v = p.coeff_of_power(power);
    if (power <= dq) v += c * q.coeff_of_power(power);
    out[d - power] = std::move(v);
  }
  return Polynomial(std::move(out));
}

Rational eval(const Polynomial& p, const Rational& x) {
  Rational acc;
  for (const auto& c : p.coeffs()) {
    acc *= x;
    acc += c;
  }
  return acc;
}

Polynomial derivative(const Polynomial& p) {
  const int d = p.degree();
  if (d < 1) return {};
  std::vector<Rational> out;
  out.reserve(d);
  for (int j = 0; j < d; ++j) out.push_back(p.coeffs()[j] * Rational(d - j));
  return Polynomial(std::move(out));
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) { return axpy(p, q, 1); }
Polynomial operator-(const Polynomial& p, const Polynomial& q) { return axpy(p, q, -1); }

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) return {};
  std::vector<Rational> out(p.degree() + q.degree() + 1);
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    for (std::size_t j = 0; j < q.coeffs().size(); ++j) {
      out[i + j] += p.coeffs()[i] * q.coeffs()[j];
    }
  }
  return Polynomial(std::move(out));
}

Division divide(const Polynomial& dividend, const Polynomial& divisor) {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  const int dd = divisor.degree();
  if (dividend.degree() < dd) return {Polynomial{}, dividend};

  std::vector<Rational> rem(dividend.coeffs().begin(), dividend.coeffs().end());
  const int qdeg = dividend.degree() - dd;
  std::vector<Rational> quot(qdeg + 1);
  const Rational inv_lead = divisor.leading().reciprocal();
  for (int i = 0; i <= qdeg; ++i) {
    if (rem[i].is_zero()) continue;
    const Rational f = rem[i] * inv_lead;
    quot[i] = f;
    for (int j = 0; j <= dd; ++j) rem[i + j] -= f * divisor.coeffs()[j];
  }
  rem.erase(rem.begin(), rem.begin() + qdeg + 1);
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial& p, const Polynomial& q) {
  Polynomial a = p, b = q;
  while (!b.is_zero()) {
    Polynomial r = divide(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : a.monic();
}

}  // namespace wendroff
