#include "wendroff/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

namespace wendroff {

namespace {

std::vector<TaggedRoot> tagged(const RootSet& set) {
  std::vector<TaggedRoot> out;
  out.reserve(set.roots.size());
  for (const auto& r : set.roots) out.push_back({r, set.poly_id});
  return out;
}

/// Sign of a certified root relative to 0: -1, 0 (exactly zero) or +1.
int certified_sign(const Root& r) {
  if (r.exact) return r.value.sign();
  if (r.hi.sign() <= 0) return -1;
  if (r.lo.sign() >= 0) return 1;
  throw UndecidableOrdering("root interval (" + r.lo.str() + ", " + r.hi.str() +
                            ") contains the origin");
}

template <class Fn>
void parallel_for(int count, Fn&& fn) {
  const int workers =
      std::max(1, std::min<int>(count, static_cast<int>(std::thread::hardware_concurrency())));
  std::atomic<int> next{0};
  std::vector<std::exception_ptr> errors(count);
  auto worker = [&] {
    for (int i = next++; i < count; i = next++) {
      try {
        fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

TaggedRoot fixed_point(const Rational& value) { return {{value, value, true, value, 0}, {}}; }

std::optional<std::strong_ordering> certified_order(const TaggedRoot& a, const TaggedRoot& b) {
  const Root& x = a.root;
  const Root& y = b.root;
  if (x.exact && y.exact) return x.value <=> y.value;
  if (!x.exact && !y.exact && !a.source.empty() && a.source == b.source && x.lo == y.lo &&
      x.hi == y.hi) {
    return std::strong_ordering::equal;
  }
  // open intervals: a root in (lo, hi) is < any point ≥ hi and > any point ≤ lo
  const Rational& x_hi = x.exact ? x.value : x.hi;
  const Rational& x_lo = x.exact ? x.value : x.lo;
  const Rational& y_hi = y.exact ? y.value : y.hi;
  const Rational& y_lo = y.exact ? y.value : y.lo;
  if (x_hi <= y_lo) return std::strong_ordering::less;
  if (y_hi <= x_lo) return std::strong_ordering::greater;
  return std::nullopt;
}

bool strictly_increasing(const std::vector<TaggedRoot>& chain) {
  std::optional<std::size_t> undecided;
  for (std::size_t i = 1; i < chain.size(); ++i) {
    auto order = certified_order(chain[i - 1], chain[i]);
    if (!order) {
      if (!undecided) undecided = i;
      continue;
    }
    if (*order != std::strong_ordering::less) return false;
  }
  if (undecided) {
    throw UndecidableOrdering("overlapping certified intervals at chain position " +
                              std::to_string(*undecided));
  }
  return true;
}

bool check_interlacing(const RootSet& lower, const RootSet& upper) {
  if (lower.real_count() + 1 != upper.real_count()) return false;
  const auto lo = tagged(lower);
  const auto hi = tagged(upper);
  std::vector<TaggedRoot> chain;
  chain.reserve(lo.size() + hi.size());
  for (std::size_t i = 0; i < hi.size(); ++i) {
    chain.push_back(hi[i]);
    if (i < lo.size()) chain.push_back(lo[i]);
  }
  return strictly_increasing(chain);
}

bool check_quasi_ordering(const RootSet& lower, const RootSet& upper, const UltraParams& params) {
  if (!params.quasi_orthogonal()) {
    throw ParameterError("quasi-orthogonal ordering needs -3/2 < lambda < -1/2, got " +
                         params.lambda().str());
  }
  const std::size_t n = upper.real_count();
  if (n < 4) throw ParameterError("quasi-orthogonal ordering needs n >= 4");
  if (lower.real_count() + 1 != n) return false;
  const auto lo = tagged(lower);  // indices 1..n-1 stored at 0..n-2
  const auto up = tagged(upper);
  std::vector<TaggedRoot> chain{lo[0], up[0], fixed_point(-1)};
  for (std::size_t i = 2; i <= n - 1; ++i) {
    chain.push_back(up[i - 1]);
    if (i <= n - 2) chain.push_back(lo[i - 1]);
  }
  chain.push_back(fixed_point(1));
  chain.push_back(up[n - 1]);
  chain.push_back(lo[n - 2]);
  return strictly_increasing(chain);
}

bool check_triple_ordering(const RootSet& z_lower, const RootSet& z_mid, const RootSet& z_upper) {
  // order within each triple: degree n+1, n, n-1
  const std::vector<const RootSet*> sets{&z_upper, &z_mid, &z_lower};
  std::vector<std::vector<TaggedRoot>> negative(3), positive(3);
  for (std::size_t s = 0; s < sets.size(); ++s) {
    for (const auto& t : tagged(*sets[s])) {
      const int sign = certified_sign(t.root);
      if (sign < 0) negative[s].push_back(t);
      if (sign > 0) positive[s].push_back(t);
    }
    std::reverse(positive[s].begin(), positive[s].end());
  }
  auto merge = [](const std::vector<std::vector<TaggedRoot>>& lists) {
    std::vector<TaggedRoot> chain;
    std::size_t longest = 0;
    for (const auto& l : lists) longest = std::max(longest, l.size());
    for (std::size_t i = 0; i < longest; ++i) {
      for (const auto& l : lists) {
        if (i < l.size()) chain.push_back(l[i]);
      }
    }
    return chain;
  };
  auto neg_chain = merge(negative);
  auto pos_chain = merge(positive);
  std::reverse(pos_chain.begin(), pos_chain.end());  // descending chain read backwards
  return strictly_increasing(neg_chain) && strictly_increasing(pos_chain);
}

bool check_containment(const RootSet& zeros, const Rational& a) {
  for (const auto& r : zeros.roots) {
    const Rational& lo = r.exact ? r.value : r.lo;
    const Rational& hi = r.exact ? r.value : r.hi;
    if (r.exact) {
      if (!(-a < r.value && r.value < a)) return false;
      continue;
    }
    if (lo >= -a && hi <= a) continue;
    if (hi <= -a || lo >= a) return false;
    throw UndecidableOrdering("root interval (" + lo.str() + ", " + hi.str() +
                              ") straddles the radius " + a.str());
  }
  return true;
}

ComparisonReport compare(int degree, const RootSet& zeros_d, const RootSet& zeros_c) {
  ComparisonReport out;
  out.degree = degree;
  for (const auto& r : zeros_d.roots) out.zeros_d.push_back(r.value);
  for (const auto& r : zeros_c.roots) out.zeros_c.push_back(r.value);
  const std::size_t nd = out.zeros_d.size();
  const std::size_t nc = out.zeros_c.size();
  out.count_mismatch = nd != nc;
  const std::size_t common = std::min(nd, nc);
  const std::size_t prefix = nd == nc ? common : common / 2;
  auto add = [&](std::size_t i, std::size_t j) {
    Rational delta = out.zeros_d[i] - out.zeros_c[j];
    out.max_delta = max(out.max_delta, delta.abs());
    out.pairs.push_back({static_cast<int>(out.pairs.size()) + 1, out.zeros_d[i], out.zeros_c[j],
                         std::move(delta)});
  };
  for (std::size_t i = 0; i < prefix; ++i) add(i, i);
  for (std::size_t t = common - prefix; t > 0; --t) add(nd - t, nc - t);
  if (nd > 0 && nc > 0) {
    out.smallest_zero_delta = out.zeros_d.front() - out.zeros_c.front();
    out.largest_zero_delta = out.zeros_d.back() - out.zeros_c.back();
  }
  return out;
}

CertifiedZeros CertifiedZeros::of(Polynomial p, const Rational& tol, std::string id) {
  RootSet roots = solve(p, tol, std::move(id));
  return {std::move(p), std::move(roots)};
}

void CertifiedZeros::refine_to(const Rational& tol) { roots = refine(poly, std::move(roots), tol); }

int VerificationReport::verified_count() const {
  return static_cast<int>(
      std::count_if(degrees.begin(), degrees.end(), [](const DegreeRecord& d) { return d.ok(); }));
}

std::string VerificationReport::summary() const {
  const std::string counts =
      std::to_string(verified_count()) + "/" + std::to_string(degrees.size()) + " degrees verified";
  if (overall) return "OK: " + counts;
  std::string out = "FAILED: " + counts;
  std::vector<int> bad;
  for (const auto& d : degrees) {
    if (!d.ok()) bad.push_back(d.degree);
  }
  if (!bad.empty()) {
    out += "; failing degrees";
    for (std::size_t i = 0; i < bad.size(); ++i) out += (i ? ", " : " ") + std::to_string(bad[i]);
  }
  return out;
}

VerificationReport verify_sequence(const WendroffSequence& seq, const Rational& tol) {
  const int top = seq.top_degree();
  const Rational& a = seq.a;
  VerificationReport report;
  report.degrees.resize(top + 1);

  struct RootWork {
    std::optional<CertifiedZeros> zeros;
    std::string error;
  };
  std::vector<RootWork> work(top + 1);

  parallel_for(top + 1, [&](int m) {
    const Polynomial& p = seq.polys[m];
    DegreeRecord& rec = report.degrees[m];
    rec.degree = m;
    rec.monic = p.is_monic() && p.degree() == m;
    rec.symmetric = p.is_symmetric();

    if (m < 2) {
      rec.ell_positive = true;
      rec.recurrence_ok = m == 0 ? p == Polynomial::one() : p == Polynomial::x();
    } else {
      auto it = seq.ells.find(m);
      rec.ell_positive = it != seq.ells.end() && it->second.sign() > 0;
      rec.recurrence_ok =
          it != seq.ells.end() &&
          p == axpy(mul_x(seq.polys[m - 1]), seq.polys[m - 2], -it->second);
    }

    if (p.is_zero()) return;
    SturmSequence sturm(p);
    const bool squarefree = sturm.squarefree();
    const int total = sturm.variations_at_minus_infinity() - sturm.variations_at_plus_infinity();
    rec.real_count_ok = squarefree && total == p.degree() && p.degree() == m;
    rec.contained_in_a = squarefree && sturm.count_open(-a, a) == p.degree();
    try {
      work[m].zeros = CertifiedZeros::of(p, tol, "D" + std::to_string(m));
    } catch (const std::exception& e) {
      work[m].error = e.what();
    }
  });

  for (int m = 0; m <= top; ++m) {
    DegreeRecord& rec = report.degrees[m];
    if (m == 0) {
      rec.interlaces_predecessor = true;
      continue;
    }
    if (!work[m].zeros || !work[m - 1].zeros) {
      rec.interlaces_predecessor = false;
      continue;
    }
    CertifiedZeros& lower = *work[m - 1].zeros;
    CertifiedZeros& upper = *work[m].zeros;
    try {
      rec.interlaces_predecessor =
          decide([&] { return check_interlacing(lower.roots, upper.roots); }, {&lower, &upper});
    } catch (const UndecidableOrdering&) {
      rec.interlaces_predecessor = false;
    }
  }

  auto fail = [&](int m, const char* check, std::string detail) {
    report.failures.push_back({m, check, std::move(detail)});
  };
  for (const auto& rec : report.degrees) {
    const int m = rec.degree;
    if (!rec.monic) fail(m, "monic", "D" + std::to_string(m) + " is not monic of degree " + std::to_string(m));
    if (!rec.symmetric) fail(m, "symmetric", "odd-index coefficient is nonzero");
    if (!rec.ell_positive) {
      auto it = seq.ells.find(m);
      fail(m, "ell-positive",
           it == seq.ells.end() ? "missing recurrence coefficient" : "l_" + std::to_string(m) + " = " + it->second.str());
    }
    if (!rec.recurrence_ok) fail(m, "recurrence", "D_m != x D_{m-1} - l_m D_{m-2}");
    if (!rec.real_count_ok) {
      fail(m, "real-count",
           work[m].error.empty() ? "not all roots real and simple" : work[m].error);
    }
    if (!rec.contained_in_a) fail(m, "contained-in-a", "not all roots lie in (-" + a.str() + ", " + a.str() + ")");
    if (!rec.interlaces_predecessor) fail(m, "interlacing", "zeros do not strictly interlace with D" + std::to_string(m - 1));
  }
  report.overall = report.failures.empty();
  return report;
}

}  // namespace wendroff
