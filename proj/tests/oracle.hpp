#pragma once

#include <cmath>
#include <vector>

#include "wendroff/polynomial.hpp"

namespace oracle {

/// Real roots by double-precision grid scan plus bisection. Independent of
/// the Sturm machinery; good to ~1e-12 for well-separated simple roots.
inline std::vector<double> grid_roots(const wendroff::Polynomial& p, double extent,
                                      double step = 1e-3) {
  std::vector<double> c;
  for (const auto& v : p.coeffs()) c.push_back(v.to_double());
  auto f = [&](double x) {
    double acc = 0;
    for (double v : c) acc = acc * x + v;
    return acc;
  };
  std::vector<double> out;
  const long cells = std::lround(2 * extent / step);
  for (long i = 0; i < cells; ++i) {
    double lo = (i - cells / 2) * step, hi = (i + 1 - cells / 2) * step;
    const double flo = f(lo), fhi = f(hi);
    if (flo == 0) {
      out.push_back(lo);
      continue;
    }
    if (fhi == 0) continue;  // picked up as the next cell's lower end
    if (flo * fhi < 0) {
      for (int it = 0; it < 80; ++it) {
        const double mid = (lo + hi) / 2;
        (f(lo) * f(mid) <= 0 ? hi : lo) = mid;
      }
      out.push_back((lo + hi) / 2);
    }
  }
  std::vector<double> merged;
  for (double r : out) {
    if (merged.empty() || r - merged.back() > step / 2) merged.push_back(r);
  }
  return merged;
}

}  // namespace oracle
