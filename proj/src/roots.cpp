#include "wendroff/roots.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "wendroff/errors.hpp"

namespace wendroff {

namespace {

using IntPoly = std::vector<mpz_class>;  // descending powers

int degree_of(const IntPoly& p) { return static_cast<int>(p.size()) - 1; }

void trim(IntPoly& p) {
  auto first = std::find_if(p.begin(), p.end(), [](const mpz_class& c) { return c != 0; });
  p.erase(p.begin(), first);
}

void make_primitive(IntPoly& p) {
  mpz_class g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1) {
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
}

/// Positive multiple of p with integer coefficients.
IntPoly to_integer(const Polynomial& p) {
  mpz_class l = 1;
  for (const auto& c : p.coeffs()) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.raw().get_den_mpz_t());
  }
  IntPoly out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(c.numerator() * (l / c.denominator()));
  make_primitive(out);
  return out;
}

Polynomial to_rational(const IntPoly& p) {
  std::vector<Rational> c;
  c.reserve(p.size());
  for (const auto& v : p) c.emplace_back(mpq_class(v));
  return Polynomial(std::move(c));
}

IntPoly int_derivative(const IntPoly& p) {
  const int d = degree_of(p);
  IntPoly out;
  for (int j = 0; j < d; ++j) out.push_back(p[j] * (d - j));
  return out;
}

/// Positive multiple of rem(a, b), via pseudo-division with the sign of the
/// multiplier corrected.
IntPoly positive_pseudo_remainder(IntPoly a, const IntPoly& b) {
  const int db = degree_of(b);
  const mpz_class& lb = b.front();
  int steps = 0;
  while (!a.empty() && degree_of(a) >= db) {
    const mpz_class la = a.front();
    for (auto& c : a) c *= lb;
    for (int j = 0; j <= db; ++j) a[j] -= la * b[j];
    ++steps;
    trim(a);
  }
  if (lb < 0 && steps % 2 == 1) {
    for (auto& c : a) c = -c;
  }
  return a;
}

int sign_at(const IntPoly& p, const mpz_class& u, const std::vector<mpz_class>& vpow) {
  // p(u/v) v^d = sum c_j u^(d-j) v^j
  mpz_class acc = 0;
  const int d = degree_of(p);
  for (int j = 0; j <= d; ++j) {
    acc *= u;
    acc += p[j] * vpow[j];
  }
  return sgn(acc);
}

std::vector<mpz_class> powers(const mpz_class& v, int upto) {
  std::vector<mpz_class> out(upto + 1);
  out[0] = 1;
  for (int i = 1; i <= upto; ++i) out[i] = out[i - 1] * v;
  return out;
}

int count_variations(const std::vector<int>& signs) {
  int count = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

}  // namespace

std::vector<Polynomial> sturm_chain(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("Sturm chain of the zero polynomial");
  std::vector<Polynomial> chain{p};
  Polynomial d = derivative(p);
  if (d.is_zero()) return chain;
  chain.push_back(std::move(d));
  while (true) {
    Polynomial r = divide(chain[chain.size() - 2], chain.back()).remainder;
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  return chain;
}

SturmSequence::SturmSequence(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("Sturm sequence of the zero polynomial");
  chain_.push_back(to_integer(p));
  IntPoly d = int_derivative(chain_.back());
  if (d.empty()) return;
  make_primitive(d);
  chain_.push_back(std::move(d));
  while (degree_of(chain_.back()) > 0) {
    IntPoly r = positive_pseudo_remainder(chain_[chain_.size() - 2], chain_.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    make_primitive(r);
    chain_.push_back(std::move(r));
  }
}

int SturmSequence::variations_at(const Rational& x) const {
  const mpz_class u = x.numerator();
  const auto vpow = powers(x.denominator(), degree_of(chain_.front()));
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& p : chain_) signs.push_back(wendroff::sign_at(p, u, vpow));
  return count_variations(signs);
}

int SturmSequence::variations_at_minus_infinity() const {
  std::vector<int> signs;
  for (const auto& p : chain_) signs.push_back(sgn(p.front()) * (degree_of(p) % 2 == 0 ? 1 : -1));
  return count_variations(signs);
}

int SturmSequence::variations_at_plus_infinity() const {
  std::vector<int> signs;
  for (const auto& p : chain_) signs.push_back(sgn(p.front()));
  return count_variations(signs);
}

bool SturmSequence::squarefree() const { return degree_of(chain_.back()) <= 0; }

int SturmSequence::sign_at(const Rational& x) const {
  const auto vpow = powers(x.denominator(), degree_of(chain_.front()));
  return wendroff::sign_at(chain_.front(), x.numerator(), vpow);
}

int SturmSequence::count_open(const Rational& lo, const Rational& hi) const {
  return variations_at(lo) - variations_at(hi) - (sign_at(hi) == 0 ? 1 : 0);
}

Polynomial SturmSequence::element(std::size_t i) const { return to_rational(chain_.at(i)); }

int count_roots(const Polynomial& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw std::invalid_argument("root count of the zero polynomial");
  if (!(lo < hi)) throw std::invalid_argument("root count needs lo < hi");
  SturmSequence s(p);
  if (!s.squarefree()) {
    if (s.sign_at(lo) == 0) {
      throw BoundaryRootError("lower endpoint " + lo.str() + " is a root",
                              BoundaryRootError::Endpoint::Lower);
    }
    if (s.sign_at(hi) == 0) {
      throw BoundaryRootError("upper endpoint " + hi.str() + " is a root",
                              BoundaryRootError::Endpoint::Upper);
    }
  }
  return s.variations_at(lo) - s.variations_at(hi);
}

Rational root_bound(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("root bound of the zero polynomial");
  Rational m = 0;
  const Rational& lead = p.leading();
  for (std::size_t j = 1; j < p.coeffs().size(); ++j) m = max(m, (p.coeffs()[j] / lead).abs());
  const Rational cauchy = m + Rational(1);
  Rational b = 1;
  while (b <= cauchy) b *= Rational(2);
  return b;
}

RootSet isolate(const Polynomial& p, const Rational& bound, std::string id) {
  if (p.is_zero()) throw std::invalid_argument("cannot isolate roots of the zero polynomial");
  if (bound.sign() <= 0) throw std::invalid_argument("search bound must be positive");
  RootSet out;
  out.poly_id = std::move(id);
  if (p.degree() >= 1) out.sum_hint = -p.coeff(1) / p.leading();
  if (p.degree() < 1) return out;

  SturmSequence sturm(p);
  if (!sturm.squarefree()) {
    throw MultiplicityError("polynomial " + (out.poly_id.empty() ? p.str() : out.poly_id) +
                            " has a repeated root");
  }

  struct Pending {
    Rational lo, hi;
  };
  std::vector<Pending> work{{-bound, bound}};
  while (!work.empty()) {
    Pending cur = std::move(work.back());
    work.pop_back();
    const int count = sturm.count_open(cur.lo, cur.hi);
    if (count == 0) continue;
    if (count == 1) {
      out.roots.push_back({cur.lo, cur.hi, false, (cur.lo + cur.hi) / Rational(2),
                           (cur.hi - cur.lo) / Rational(2)});
      continue;
    }
    Rational mid = (cur.lo + cur.hi) / Rational(2);
    if (sturm.sign_at(mid) == 0) out.roots.push_back({mid, mid, true, mid, 0});
    work.push_back({mid, cur.hi});
    work.push_back({cur.lo, std::move(mid)});
  }
  std::sort(out.roots.begin(), out.roots.end(),
            [](const Root& a, const Root& b) { return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi); });
  return out;
}

RootSet isolate(const Polynomial& p, std::string id) {
  return isolate(p, p.is_zero() ? Rational(1) : root_bound(p), std::move(id));
}

RootSet refine(const Polynomial& p, RootSet set, const Rational& tol) {
  if (tol.sign() <= 0) throw std::invalid_argument("tolerance must be positive");
  const Rational width_goal = tol * Rational(2);
  SturmSequence signs(p);  // first element is a positive multiple of p
  for (auto& r : set.roots) {
    if (r.exact) continue;
    int s_lo = signs.sign_at(r.lo);
    int s_hi = signs.sign_at(r.hi);
    while (r.hi - r.lo > width_goal) {
      Rational mid = (r.lo + r.hi) / Rational(2);
      const int s = signs.sign_at(mid);
      if (s == 0) {
        r.lo = r.hi = mid;
        r.exact = true;
        break;
      }
      bool root_left;
      if (s_hi != 0) {
        root_left = s == s_hi;
      } else if (s_lo != 0) {
        root_left = s != s_lo;
      } else {
        root_left = signs.count_open(r.lo, mid) == 1;
      }
      if (root_left) {
        r.hi = std::move(mid);
        s_hi = s;
      } else {
        r.lo = std::move(mid);
        s_lo = s;
      }
    }
    if (r.exact) {
      r.value = r.lo;
      r.radius = 0;
    } else {
      r.value = (r.lo + r.hi) / Rational(2);
      r.radius = (r.hi - r.lo) / Rational(2);
    }
  }
  set.tol = tol;
  return set;
}

RootSet solve(const Polynomial& p, const Rational& tol, std::string id) {
  return refine(p, isolate(p, std::move(id)), tol);
}

}  // namespace wendroff
