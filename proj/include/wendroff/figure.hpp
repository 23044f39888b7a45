#pragma once

#include <string>
#include <vector>

#include "wendroff/rational.hpp"

namespace wendroff {

struct FigureSeries {
  std::string label;
  /// Sorted zeros; plotted at x = 1, 2, ... with y = value.
  std::vector<Rational> values;
};

/// Two-series index-vs-zero scatter: D zeros as brown diamonds, C zeros as
/// blue circles, with horizontal guides at ±1 and ±a.
struct FigureSpec {
  std::string title;
  FigureSeries d_series;
  FigureSeries c_series;
  Rational a = 1;
  int width = 640;
  int height = 480;
};

/// Deterministic SVG document (fixed element order, fixed number formatting).
std::string render_svg(const FigureSpec& spec);

}  // namespace wendroff
