#include "wendroff/sequence.hpp"

#include "wendroff/errors.hpp"

namespace wendroff {

void WendroffConfig::validate() const {
  if (n < 5) throw ParameterError("n must be at least 5, got " + std::to_string(n));
  if (k < 1) throw ParameterError("k must be at least 1, got " + std::to_string(k));
  if (sigma <= Rational(1)) throw ParameterError("sigma must exceed 1, got " + sigma.str());
  if (radius.value.sign() <= 0) throw ParameterError("radius a must be positive");
  if (tol.sign() <= 0) throw ParameterError("tolerance must be positive");
  if (!upward_ells.empty() && static_cast<int>(upward_ells.size()) != k) {
    throw ParameterError("expected " + std::to_string(k) + " upward coefficients, got " +
                         std::to_string(upward_ells.size()));
  }
}

Seed seed(int n, const UltraParams& params) {
  if (n < 5) throw ParameterError("n must be at least 5, got " + std::to_string(n));
  auto c = ultraspherical_table(n - 1, params);
  const Polynomial& c_n2 = c[n - 2];
  // (x² - 1) C_{n-2}
  Polynomial upper = axpy(mul_x(mul_x(c_n2)), c_n2, -1);
  return {std::move(c[n - 1]), std::move(upper)};
}

RecurrenceStep downward_step(const Polynomial& hi, const Polynomial& mid) {
  const int m = hi.degree();
  if (m < 2 || mid.degree() != m - 1) {
    throw ConstructionError("downward step needs consecutive degrees m, m-1 with m >= 2", m);
  }
  Rational ell = mid.beta2() - hi.beta2();
  if (ell.sign() <= 0) {
    throw ConstructionError("nonpositive recurrence coefficient l_" + std::to_string(m) + " = " +
                                ell.str(),
                            m);
  }
  Polynomial lo = axpy(hi, mul_x(mid), -1).scaled(-ell.reciprocal());
  if (lo.degree() != m - 2 || !lo.is_monic()) {
    throw ConstructionError("downward step did not produce a monic polynomial of degree " +
                                std::to_string(m - 2),
                            m - 2);
  }
  return {std::move(ell), std::move(lo)};
}

Rational upward_ell_limit(const Polynomial& prev, const Polynomial& prevprev, const Rational& a) {
  return a * eval(prev, a) / eval(prevprev, a);
}

RecurrenceStep upward_first(const Polynomial& dn, const Polynomial& dn_minus_1, const Rational& a,
                            const Rational& sigma, bool allow_degenerate) {
  const int degree = dn.degree() + 1;
  if (sigma <= Rational(1)) throw ParameterError("sigma must exceed 1");
  if (a.sign() <= 0) throw ParameterError("radius a must be positive");
  const Rational at_lower = eval(dn_minus_1, a);
  const Rational at_upper = eval(dn, a);
  if (at_lower.sign() <= 0) {
    throw InvalidRadiusError("D_{n-1}(a) = " + at_lower.str() + " is not positive for a = " +
                                 a.str(),
                             degree);
  }
  if (at_upper.sign() < 0 || (at_upper.is_zero() && !allow_degenerate)) {
    throw InvalidRadiusError(
        "D_n(a) = " + at_upper.str() + " is not positive for a = " + a.str(), degree);
  }
  Rational ell = a * at_upper / (sigma * at_lower);
  Polynomial next = axpy(mul_x(dn), dn_minus_1, -ell);
  return {std::move(ell), std::move(next)};
}

RecurrenceStep upward_rest(const Polynomial& prev, const Polynomial& prevprev, const Rational& a,
                           const Rational& sigma) {
  if (sigma <= Rational(1)) throw ParameterError("sigma must exceed 1");
  if (a.sign() <= 0) throw ParameterError("radius a must be positive");
  Rational ell = (sigma - Rational(1)) * a * a / (sigma * sigma);
  Polynomial next = axpy(mul_x(prev), prevprev, -ell);
  return {std::move(ell), std::move(next)};
}

RecurrenceStep upward_with_ell(const Polynomial& prev, const Polynomial& prevprev,
                               const Rational& a, const Rational& ell) {
  const int degree = prev.degree() + 1;
  const Rational limit = upward_ell_limit(prev, prevprev, a);
  if (ell.sign() <= 0 || ell >= limit) {
    throw ConstructionError("l_" + std::to_string(degree) + " = " + ell.str() +
                                " outside the admissible interval (0, " + limit.str() + ")",
                            degree);
  }
  return {ell, axpy(mul_x(prev), prevprev, -ell)};
}

Descent build_downward(int n, const UltraParams& params) {
  Seed s = seed(n, params);
  Descent out;
  out.polys.resize(n + 1);
  out.polys[n] = std::move(s.upper);
  out.polys[n - 1] = std::move(s.lower);
  for (int m = n; m >= 2; --m) {
    auto step = downward_step(out.polys[m], out.polys[m - 1]);
    out.ells.emplace(m, std::move(step.ell));
    out.polys[m - 2] = std::move(step.poly);
  }
  if (out.polys[1] != Polynomial::x() || out.polys[0] != Polynomial::one()) {
    throw ConstructionError("descent did not terminate at D_1 = x, D_0 = 1", 1);
  }
  return out;
}

WendroffSequence build(const WendroffConfig& config) {
  config.validate();
  const int n = config.n;
  const Rational& a = config.radius.value;

  Descent descent = build_downward(n, config.params);
  WendroffSequence seq{config, std::move(descent.polys), std::move(descent.ells), a};
  seq.polys.reserve(n + config.k + 1);

  for (int j = 1; j <= config.k; ++j) {
    const int m = n + j;
    const Polynomial& prev = seq.polys[m - 1];
    const Polynomial& prevprev = seq.polys[m - 2];
    RecurrenceStep step;
    if (!config.upward_ells.empty()) {
      step = upward_with_ell(prev, prevprev, a, config.upward_ells[j - 1]);
    } else if (j == 1) {
      step = upward_first(prev, prevprev, a, config.sigma, config.allow_degenerate);
    } else {
      step = upward_rest(prev, prevprev, a, config.sigma);
    }
    seq.ells.emplace(m, std::move(step.ell));
    seq.polys.push_back(std::move(step.poly));
  }
  return seq;
}

}  // namespace wendroff
