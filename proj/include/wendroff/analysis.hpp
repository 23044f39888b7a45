#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "wendroff/errors.hpp"
#include "wendroff/polynomial.hpp"
#include "wendroff/roots.hpp"
#include "wendroff/sequence.hpp"
#include "wendroff/ultraspherical.hpp"

namespace wendroff {

/// A certified root tagged with the polynomial it belongs to. Two
/// non-exact roots of the same source with identical intervals are the same
/// root; anything else is ordered by interval position only.
struct TaggedRoot {
  Root root;
  std::string source;
};

/// Exact point as a tagged root (used for the ±1 separators and 0).
TaggedRoot fixed_point(const Rational& value);

/// Certified ordering, or nullopt when the intervals overlap.
std::optional<std::strong_ordering> certified_order(const TaggedRoot& a, const TaggedRoot& b);

/// True iff chain[0] < chain[1] < ... strictly. Throws UndecidableOrdering
/// when some adjacent pair overlaps.
bool strictly_increasing(const std::vector<TaggedRoot>& chain);

/// hi_1 < lo_1 < hi_2 < ... < lo_{m-1} < hi_m, where `lower` holds the zeros
/// of the degree m-1 polynomial and `upper` those of degree m. False when the
/// real counts do not differ by exactly one.
bool check_interlacing(const RootSet& lower, const RootSet& upper);

/// x_{1,n-1} < x_{1,n} < -1 < x_{2,n} < x_{2,n-1} < ... < x_{n-1,n} < 1 <
/// x_{n,n} < x_{n-1,n-1} for the zeros of C_{n-1} (`lower`) and C_n
/// (`upper`). Requires -3/2 < λ < -1/2 and n ≥ 4, else ParameterError.
bool check_quasi_ordering(const RootSet& lower, const RootSet& upper, const UltraParams& params);

/// Ordering of consecutive zeros of D_{n-1}, D_n, D_{n+1}: the negative zeros
/// merged as y_{1,n+1} < y_{1,n} < y_{1,n-1} < y_{2,n+1} < ..., and the
/// positive zeros as y_{n+1,n+1} > y_{n,n} > y_{n-1,n-1} > y_{n,n+1} > ...
/// A zero at the origin terminates both chains and is not compared.
bool check_triple_ordering(const RootSet& z_lower, const RootSet& z_mid, const RootSet& z_upper);

/// Every certified root lies in (-a, a). Throws UndecidableOrdering when an
/// interval straddles ±a.
bool check_containment(const RootSet& zeros, const Rational& a);

struct ComparisonPair {
  int index = 0;  ///< 1-based position in the pairing
  Rational zero_d;
  Rational zero_c;
  Rational delta;  ///< zero_d - zero_c
};

struct ComparisonReport {
  int degree = 0;
  std::vector<Rational> zeros_d;
  std::vector<Rational> zeros_c;
  std::vector<ComparisonPair> pairs;
  Rational max_delta;  ///< max |delta|
  std::optional<Rational> smallest_zero_delta;
  std::optional<Rational> largest_zero_delta;
  /// Real-root counts differ; pairs then cover the common prefix and suffix.
  bool count_mismatch = false;
};

/// Index-matched comparison of refined zero sets.
ComparisonReport compare(int degree, const RootSet& zeros_d, const RootSet& zeros_c);

/// A polynomial together with its certified zeros, refinable in place.
struct CertifiedZeros {
  Polynomial poly;
  RootSet roots;

  static CertifiedZeros of(Polynomial p, const Rational& tol, std::string id = {});
  void refine_to(const Rational& tol);
};

/// Smallest tolerance `decide` will refine to before giving up.
inline const Rational kToleranceFloor = pow(Rational(1, 10), 60);

/// Runs `check`, refining every listed zero set by a factor of 16 whenever
/// it reports an undecidable ordering. Rethrows once the tolerance floor is
/// reached.
template <class Check>
bool decide(Check&& check, std::initializer_list<CertifiedZeros*> zeros) {
  while (true) {
    try {
      return check();
    } catch (const UndecidableOrdering&) {
      bool refined = false;
      for (auto* z : zeros) {
        Rational next = (z->roots.tol.is_zero() ? Rational(1, 1000000) : z->roots.tol) / Rational(16);
        if (next < kToleranceFloor) continue;
        z->refine_to(next);
        refined = true;
      }
      if (!refined) throw;
    }
  }
}

struct DegreeRecord {
  int degree = 0;
  bool monic = false;
  bool symmetric = false;
  bool ell_positive = false;
  /// D_m = x D_{m-1} - ℓ_m D_{m-2} holds exactly with the stored ℓ_m.
  bool recurrence_ok = false;
  bool real_count_ok = false;
  bool contained_in_a = false;
  bool interlaces_predecessor = false;

  bool ok() const {
    return monic && symmetric && ell_positive && recurrence_ok && real_count_ok &&
           contained_in_a && interlaces_predecessor;
  }
};

struct Diagnostic {
  int degree = 0;
  std::string check;
  std::string detail;
};

struct VerificationReport {
  std::vector<DegreeRecord> degrees;
  bool overall = false;
  std::vector<Diagnostic> failures;

  int verified_count() const;
  /// "OK: 11/11 degrees verified" or "FAILED: ..." naming the failing degrees.
  std::string summary() const;
};

/// Checks every degree 0 .. n+k of a built (or loaded) sequence. Root work
/// per degree runs concurrently; the report is deterministic.
VerificationReport verify_sequence(const WendroffSequence& seq, const Rational& tol);

}  // namespace wendroff
