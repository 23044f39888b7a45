#pragma once

#include <map>
#include <vector>

#include "wendroff/polynomial.hpp"
#include "wendroff/rational.hpp"
#include "wendroff/ultraspherical.hpp"

namespace wendroff {

/// Inputs of the embedding construction.
struct WendroffConfig {
  int n = 5;
  int k = 1;
  UltraParams params = UltraParams::make(1);
  Rational sigma = 2;
  IntervalRadius radius{1, RadiusMode::Unit, 0};
  /// Default tolerance for root refinement downstream.
  Rational tol{1, 1000000};
  /// Optional explicit upward coefficients ℓ_{n+1} .. ℓ_{n+k}; when empty the
  /// σ-scheme is used. Each value must lie in (0, a D_{m-1}(a)/D_{m-2}(a)).
  std::vector<Rational> upward_ells;
  /// Accept D_n(a) = 0 in the first upward step, which yields ℓ_{n+1} = 0.
  /// This only happens when a sits exactly on a zero of D_n (a = 1 with
  /// λ > -1/2). The result is not an orthogonal sequence and fails
  /// verification; it exists so those configurations can still be plotted.
  bool allow_degenerate = false;

  /// Throws ParameterError unless n ≥ 5, k ≥ 1, σ > 1, tol > 0 and
  /// upward_ells is empty or has k entries.
  void validate() const;
};

/// D_0 .. D_{n+k} with every recurrence coefficient ℓ_m, m = 2 .. n+k.
struct WendroffSequence {
  WendroffConfig config;
  std::vector<Polynomial> polys;
  std::map<int, Rational> ells;
  Rational a;

  int top_degree() const { return static_cast<int>(polys.size()) - 1; }
};

struct Seed {
  Polynomial lower;  ///< D_{n-1} = C_{n-1}
  Polynomial upper;  ///< D_n = (x² - 1) C_{n-2}
};

/// Throws ParameterError for n < 5.
Seed seed(int n, const UltraParams& params);

struct RecurrenceStep {
  Rational ell;
  Polynomial poly;
};

/// From D_m (hi) and D_{m-1} (mid): ℓ_m = β₂(D_{m-1}) - β₂(D_m) and
/// D_{m-2} = -(D_m - x D_{m-1}) / ℓ_m. Throws ConstructionError when
/// ℓ_m ≤ 0 or the result is not monic of degree m-2.
RecurrenceStep downward_step(const Polynomial& hi, const Polynomial& mid);

/// ℓ_{n+1} = a D_n(a) / (σ D_{n-1}(a)), D_{n+1} = x D_n - ℓ_{n+1} D_{n-1}.
/// Throws InvalidRadiusError when D_{n-1}(a) ≤ 0 or D_n(a) ≤ 0 (D_n(a) = 0
/// is let through when allow_degenerate is set).
RecurrenceStep upward_first(const Polynomial& dn, const Polynomial& dn_minus_1, const Rational& a,
                            const Rational& sigma, bool allow_degenerate = false);

/// ℓ = (σ-1)a²/σ², D_next = x D_prev - ℓ D_prevprev.
RecurrenceStep upward_rest(const Polynomial& prev, const Polynomial& prevprev, const Rational& a,
                           const Rational& sigma);

/// D_next = x D_prev - ℓ D_prevprev for a caller-chosen ℓ, which must lie in
/// (0, a D_prev(a)/D_prevprev(a)); otherwise ConstructionError.
RecurrenceStep upward_with_ell(const Polynomial& prev, const Polynomial& prevprev,
                               const Rational& a, const Rational& ell);

/// Upper end of the admissible open interval for the next upward ℓ.
Rational upward_ell_limit(const Polynomial& prev, const Polynomial& prevprev, const Rational& a);

/// D_0 .. D_n from the seed, with ℓ_2 .. ℓ_n.
struct Descent {
  std::vector<Polynomial> polys;
  std::map<int, Rational> ells;
};

Descent build_downward(int n, const UltraParams& params);

/// Full construction D_0 .. D_{n+k}. Deterministic; errors carry the
/// failing degree.
WendroffSequence build(const WendroffConfig& config);

}  // namespace wendroff
