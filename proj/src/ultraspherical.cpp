#include "wendroff/ultraspherical.hpp"

#include <mutex>

#include "wendroff/errors.hpp"

namespace wendroff {

namespace {

Rational minus_three_halves() { return {-3, 2}; }
Rational minus_five_quarters() { return {-5, 4}; }
Rational minus_half() { return {-1, 2}; }

/// Exact square root if q = (u/v)² with integers u, v.
bool exact_sqrt(const Rational& q, Rational& out) {
  const mpz_class num = q.numerator();
  const mpz_class den = q.denominator();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
    return false;
  }
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  out = Rational(mpq_class(rn, rd));
  return true;
}

}  // namespace

UltraParams UltraParams::make(const Rational& lambda) {
  if (lambda <= minus_three_halves()) {
    throw ParameterError("lambda must exceed -3/2, got " + lambda.str());
  }
  if (lambda == Rational(-1) || lambda.is_zero()) {
    throw ParameterError("lambda must not be -1 or 0, got " + lambda.str());
  }
  const Rational twice = lambda * Rational(2);
  if (twice.is_integer() && mpz_odd_p(twice.raw().get_num_mpz_t())) {
    throw ParameterError("lambda must not be a half-odd integer (2k-1)/2, got " + lambda.str());
  }
  return UltraParams(lambda);
}

bool UltraParams::quasi_orthogonal() const { return lambda_ < minus_half(); }

Rational recurrence_b(int n, const UltraParams& params) {
  if (n < 1) throw ParameterError("recurrence index must be at least 1");
  if (n == 1) return 0;
  const Rational& l = params.lambda();
  const Rational num = Rational(n - 1) * (Rational(n - 2) + Rational(2) * l);
  const Rational den = Rational(4) * (Rational(n - 2) + l) * (Rational(n - 1) + l);
  return num / den;
}

std::vector<Polynomial> ultraspherical_table(int m, const UltraParams& params) {
  if (m < 0) throw ParameterError("degree must be nonnegative");
  std::vector<Polynomial> table;
  table.reserve(m + 1);
  table.push_back(Polynomial::one());
  if (m >= 1) table.push_back(Polynomial::x());
  for (int k = 2; k <= m; ++k) {
    table.push_back(axpy(mul_x(table[k - 1]), table[k - 2], -recurrence_b(k, params)));
  }
  return table;
}

Polynomial ultraspherical(int m, const UltraParams& params) {
  return std::move(ultraspherical_table(m, params).back());
}

std::shared_ptr<const UltrasphericalCache::Table> UltrasphericalCache::table(
    const UltraParams& params, int m) {
  const std::string key = params.lambda().str();
  {
    std::shared_lock lock(mutex_);
    auto it = tables_.find(key);
    if (it != tables_.end() && static_cast<int>(it->second->size()) > m) return it->second;
  }
  std::unique_lock lock(mutex_);
  auto& slot = tables_[key];
  if (!slot || static_cast<int>(slot->size()) <= m) {
    slot = std::make_shared<const Table>(ultraspherical_table(m, params));
  }
  return slot;
}

Rational sqrt_upper(const Rational& q, const Rational& max_excess) {
  if (q.sign() < 0) throw std::domain_error("square root of a negative rational");
  Rational exact;
  if (exact_sqrt(q, exact)) return exact;

  const mpz_class num = q.numerator();
  const mpz_class den = q.denominator();
  mpz_class scale = 1000000;
  while (true) {
    // smallest s with s² den ≥ scale² num, so s/scale ≥ sqrt(q)
    const mpz_class target = scale * scale * num;
    mpz_class s;
    mpz_class floor_ratio = target / den;
    mpz_sqrt(s.get_mpz_t(), floor_ratio.get_mpz_t());
    while (s * s * den < target) ++s;
    const Rational r(mpq_class(s, scale));
    if (r * r - q <= max_excess) return r;
    scale *= 10;
  }
}

ExtremeZeroBounds extreme_zero_upper_bounds(int m, const UltraParams& params) {
  if (m < 3) throw ParameterError("extreme-zero bounds need m >= 3");
  const Rational& l = params.lambda();
  const Rational two_l = Rational(2) * l;
  const Rational sq = Rational(m - 1) / (two_l + Rational(m));
  const Rational alg = Rational(1) - (two_l + Rational(1)) / (Rational(m) * (Rational(m) + two_l));
  return {sqrt_upper(sq, Rational(1, 1000000)), alg};
}

Rational a1_squared(const Rational& lambda) { return Rational(2) / (Rational(2) * lambda + Rational(3)); }

Rational a2(const Rational& lambda) {
  return Rational(4) * (Rational(2) + lambda) / (Rational(3) * (Rational(3) + Rational(2) * lambda));
}

std::string to_string(RadiusMode mode) {
  switch (mode) {
    case RadiusMode::A1: return "A1-overapprox";
    case RadiusMode::A2: return "A2";
    case RadiusMode::Unit: return "unit";
    case RadiusMode::Explicit: return "explicit";
    case RadiusMode::TheoremEpsilon: return "theorem-epsilon";
  }
  return "unknown";
}

RadiusMode radius_mode_from_string(const std::string& name) {
  for (auto m : {RadiusMode::A1, RadiusMode::A2, RadiusMode::Unit, RadiusMode::Explicit,
                 RadiusMode::TheoremEpsilon}) {
    if (to_string(m) == name) return m;
  }
  throw ParameterError("unknown radius mode '" + name + "'");
}

namespace {

IntervalRadius make_a1(const Rational& lambda) {
  const Rational target = a1_squared(lambda);
  const Rational v = sqrt_upper(target, kA1SlackBound);
  return {v, RadiusMode::A1, v * v - target};
}

IntervalRadius make_a2(const Rational& lambda) { return {a2(lambda), RadiusMode::A2, 0}; }

}  // namespace

IntervalRadius interval_radius(const UltraParams& params, const RadiusRequest& request) {
  const Rational& l = params.lambda();
  struct Visitor {
    const UltraParams& params;
    const Rational& l;
    IntervalRadius operator()(const radius::Auto&) const {
      if (l < minus_five_quarters()) return make_a1(l);
      if (l < minus_half()) return make_a2(l);
      return {1, RadiusMode::Unit, 0};
    }
    IntervalRadius operator()(const radius::ForceA1&) const { return make_a1(l); }
    IntervalRadius operator()(const radius::ForceA2&) const { return make_a2(l); }
    IntervalRadius operator()(const radius::Explicit& e) const {
      if (e.value.sign() <= 0) throw ParameterError("radius a must be positive, got " + e.value.str());
      return {e.value, RadiusMode::Explicit, 0};
    }
    IntervalRadius operator()(const radius::TheoremEpsilon& t) const {
      if (t.eps.sign() <= 0) throw ParameterError("epsilon must be positive, got " + t.eps.str());
      if (t.n < 5) throw ParameterError("theorem radius needs n >= 5");
      // D_n carries the zeros ±1, so the radius never drops below 1.
      const Rational bound = max(Rational(1), extreme_zero_upper_bounds(t.n - 2, params).min());
      return {bound + t.eps, RadiusMode::TheoremEpsilon, 0};
    }
  };
  return std::visit(Visitor{params, l}, request);
}

}  // namespace wendroff
