#pragma once

#include <string>
#include <vector>

#include "wendroff/polynomial.hpp"
#include "wendroff/rational.hpp"

namespace wendroff {

/// One certified real root. Either exact (lo == hi == value, radius 0) or
/// isolated in the open interval (lo, hi), which contains no other root.
/// After refinement, value is the midpoint and |value - root| ≤ radius.
struct Root {
  Rational lo;
  Rational hi;
  bool exact = false;
  Rational value;
  Rational radius;
};

/// Certified real zeros of one polynomial, sorted ascending.
struct RootSet {
  std::string poly_id;
  std::vector<Root> roots;
  /// Tolerance of the last refinement (zero before any refinement).
  Rational tol;
  /// Sum of all complex roots, -c_1/c_0.
  Rational sum_hint;

  std::size_t real_count() const { return roots.size(); }
};

/// Canonical Sturm sequence p, p', -rem(p, p'), ... ending at the last
/// nonzero remainder. Throws std::invalid_argument for the zero polynomial.
std::vector<Polynomial> sturm_chain(const Polynomial& p);

/// Sturm sequence over the integers (primitive parts, each element a positive
/// multiple of the corresponding canonical element), used for fast exact
/// sign-variation counts.
class SturmSequence {
public:
  explicit SturmSequence(const Polynomial& p);

  /// Sign variations at x, zeros skipped.
  int variations_at(const Rational& x) const;
  int variations_at_minus_infinity() const;
  int variations_at_plus_infinity() const;

  /// True when the chain ends in a constant, i.e. gcd(p, p') = 1.
  bool squarefree() const;
  std::size_t size() const { return chain_.size(); }
  /// Sign of p(x).
  int sign_at(const Rational& x) const;
  /// Number of distinct real roots in the open interval (lo, hi).
  int count_open(const Rational& lo, const Rational& hi) const;

  /// Element i rescaled to the rational polynomial it represents.
  Polynomial element(std::size_t i) const;

private:
  std::vector<std::vector<mpz_class>> chain_;
};

/// Number of real roots in (lo, hi]. Endpoint roots are fine for squarefree
/// p (lo excluded, hi included); for a non-squarefree p an endpoint root
/// raises BoundaryRootError naming the endpoint. Throws
/// std::invalid_argument when lo ≥ hi or p is zero.
int count_roots(const Polynomial& p, const Rational& lo, const Rational& hi);

/// Power of two strictly larger than the modulus of every root (Cauchy bound).
Rational root_bound(const Polynomial& p);

/// Isolating intervals for every real root in (-bound, bound). Throws
/// MultiplicityError when p has a repeated root.
RootSet isolate(const Polynomial& p, const Rational& bound, std::string id = {});
/// Isolates all real roots using root_bound(p).
RootSet isolate(const Polynomial& p, std::string id = {});

/// Bisects each interval until its width is at most 2·tol. Exact rational
/// roots hit during bisection are returned exactly.
RootSet refine(const Polynomial& p, RootSet set, const Rational& tol);

/// isolate + refine.
RootSet solve(const Polynomial& p, const Rational& tol, std::string id = {});

}  // namespace wendroff
