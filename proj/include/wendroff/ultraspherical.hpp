#pragma once

#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <variant>
#include <vector>

#include "wendroff/polynomial.hpp"
#include "wendroff/rational.hpp"

namespace wendroff {

/// Validated ultraspherical parameter λ.
///
/// Admissible: λ > -3/2, λ ∉ {-1, 0}, and 2λ not an odd integer
/// (so -1/2, 1/2, 3/2, ... are rejected).
class UltraParams {
public:
  /// Throws ParameterError for an inadmissible λ.
  static UltraParams make(const Rational& lambda);

  const Rational& lambda() const { return lambda_; }

  /// -3/2 < λ < -1/2 (λ ≠ -1 by construction).
  bool quasi_orthogonal() const;

private:
  explicit UltraParams(Rational lambda) : lambda_(std::move(lambda)) {}
  Rational lambda_;
};

/// b_n = (n-1)(n-2+2λ) / (4(n-2+λ)(n-1+λ)); b_1 = 0.
Rational recurrence_b(int n, const UltraParams& params);

/// Monic C_m via C_m = x C_{m-1} - b_m C_{m-2}, C_{-1} = 0, C_0 = 1.
Polynomial ultraspherical(int m, const UltraParams& params);

/// C_0 .. C_m.
std::vector<Polynomial> ultraspherical_table(int m, const UltraParams& params);

/// Per-λ table cache. Tables only ever grow; readers share immutable
/// snapshots so concurrent lookups need no coordination beyond the map lock.
class UltrasphericalCache {
public:
  using Table = std::vector<Polynomial>;

  /// Returns a table holding at least C_0 .. C_m.
  std::shared_ptr<const Table> table(const UltraParams& params, int m);

private:
  mutable std::shared_mutex mutex_;
  std::map<std::string, std::shared_ptr<const Table>> tables_;
};

/// Upper bounds for the largest zero x_{m,m} of C_m (m ≥ 3):
/// sqrt((m-1)/(2λ+m)) (returned as a rational over-approximation) and
/// 1 - (2λ+1)/(m(m+2λ)).
struct ExtremeZeroBounds {
  Rational sqrt_bound;
  Rational algebraic_bound;
  Rational min() const { return wendroff::min(sqrt_bound, algebraic_bound); }
};

ExtremeZeroBounds extreme_zero_upper_bounds(int m, const UltraParams& params);

/// Smallest-ish rational r with r ≥ sqrt(q) and r² - q ≤ max_excess.
/// Exact when q is a perfect rational square. q must be nonnegative.
Rational sqrt_upper(const Rational& q, const Rational& max_excess);

/// A1(λ)² = 2/(2λ+3).
Rational a1_squared(const Rational& lambda);
/// A2(λ) = 4(2+λ)/(3(3+2λ)).
Rational a2(const Rational& lambda);

enum class RadiusMode { A1, A2, Unit, Explicit, TheoremEpsilon };

std::string to_string(RadiusMode mode);
/// Throws ParameterError on unknown names.
RadiusMode radius_mode_from_string(const std::string& name);

/// Chosen half-width a of the containment interval (-a, a).
struct IntervalRadius {
  Rational value;
  RadiusMode mode = RadiusMode::Unit;
  /// value² minus the exact squared target when value over-approximates an
  /// irrational bound; zero otherwise.
  Rational slack;
};

/// Allowed excess value² - 2/(2λ+3) for the A1 over-approximation.
inline const Rational kA1SlackBound{1, 1000000};

namespace radius {
/// Piecewise choice: A1 on (-3/2, -5/4), A2 on [-5/4, -1/2), 1 above -1/2.
struct Auto {};
struct ForceA1 {};
struct ForceA2 {};
struct Explicit {
  Rational value;
};
/// max(1, min of the two extreme-zero bounds of C_{n-2}) + eps.
struct TheoremEpsilon {
  Rational eps;
  int n = 5;
};
}  // namespace radius

using RadiusRequest = std::variant<radius::Auto, radius::ForceA1, radius::ForceA2,
                                   radius::Explicit, radius::TheoremEpsilon>;

/// Throws ParameterError for a nonpositive explicit radius or epsilon.
IntervalRadius interval_radius(const UltraParams& params, const RadiusRequest& request);

}  // namespace wendroff
