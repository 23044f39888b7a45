#include "wendroff/figure.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace wendroff {

namespace {

constexpr double kMarginLeft = 64;
constexpr double kMarginRight = 24;
constexpr double kMarginTop = 48;
constexpr double kMarginBottom = 48;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s(buf);
  if (s == "-0.00") s = "0.00";
  return s;
}

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Frame {
  double width, height, x_max, y_max;

  double px(double x) const { return kMarginLeft + x / x_max * (width - kMarginLeft - kMarginRight); }
  double py(double y) const {
    const double h = height - kMarginTop - kMarginBottom;
    return kMarginTop + (y_max - y) / (2 * y_max) * h;
  }
};

}  // namespace

std::string render_svg(const FigureSpec& spec) {
  const double a = spec.a.to_double();
  double extent = std::max(1.0, a);
  for (const auto* s : {&spec.d_series, &spec.c_series}) {
    for (const auto& v : s->values) extent = std::max(extent, std::fabs(v.to_double()));
  }
  const std::size_t count = std::max({spec.d_series.values.size(), spec.c_series.values.size(),
                                      std::size_t{1}});
  const Frame f{static_cast<double>(spec.width), static_cast<double>(spec.height),
                static_cast<double>(count + 1), extent * 1.1};

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.width << "\" height=\""
      << spec.height << "\" viewBox=\"0 0 " << spec.width << ' ' << spec.height << "\">\n";
  svg << "  <rect x=\"0\" y=\"0\" width=\"" << spec.width << "\" height=\"" << spec.height
      << "\" fill=\"white\"/>\n";
  svg << "  <text x=\"" << num(f.width / 2) << "\" y=\"28\" text-anchor=\"middle\" "
      << "font-family=\"sans-serif\" font-size=\"16\">" << escape(spec.title) << "</text>\n";

  // axes
  const double left = f.px(0), right = f.px(f.x_max);
  const double top = f.py(f.y_max), bottom = f.py(-f.y_max);
  svg << "  <g id=\"axes\" stroke=\"black\" stroke-width=\"1\">\n";
  svg << "    <line x1=\"" << num(left) << "\" y1=\"" << num(top) << "\" x2=\"" << num(left)
      << "\" y2=\"" << num(bottom) << "\"/>\n";
  svg << "    <line x1=\"" << num(left) << "\" y1=\"" << num(f.py(0)) << "\" x2=\"" << num(right)
      << "\" y2=\"" << num(f.py(0)) << "\"/>\n";
  svg << "  </g>\n";

  // horizontal guides at ±1 and ±a
  svg << "  <g id=\"guides\" font-family=\"sans-serif\" font-size=\"11\">\n";
  auto guide = [&](double y, const std::string& label, const char* colour) {
    svg << "    <line x1=\"" << num(left) << "\" y1=\"" << num(f.py(y)) << "\" x2=\"" << num(right)
        << "\" y2=\"" << num(f.py(y)) << "\" stroke=\"" << colour
        << "\" stroke-dasharray=\"4 3\"/>\n";
    svg << "    <text x=\"" << num(left - 6) << "\" y=\"" << num(f.py(y) + 4)
        << "\" text-anchor=\"end\">" << escape(label) << "</text>\n";
  };
  guide(1, "1", "#999999");
  guide(-1, "-1", "#999999");
  if (spec.a != Rational(1)) {
    guide(a, "a=" + format_significant(spec.a), "#b35900");
    guide(-a, "-a", "#b35900");
  }
  svg << "  </g>\n";

  // x ticks
  const std::size_t step = count <= 12 ? 1 : (count <= 30 ? 5 : 10);
  svg << "  <g id=\"ticks\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">\n";
  for (std::size_t i = step; i <= count; i += step) {
    svg << "    <text x=\"" << num(f.px(static_cast<double>(i))) << "\" y=\"" << num(bottom + 16)
        << "\">" << i << "</text>\n";
  }
  svg << "  </g>\n";

  svg << "  <g id=\"series-C\" fill=\"#1f5fbf\">\n";
  for (std::size_t i = 0; i < spec.c_series.values.size(); ++i) {
    const auto& v = spec.c_series.values[i];
    svg << "    <circle cx=\"" << num(f.px(static_cast<double>(i + 1))) << "\" cy=\""
        << num(f.py(v.to_double())) << "\" r=\"4\" data-index=\"" << i + 1 << "\" data-y=\""
        << format_significant(v) << "\"/>\n";
  }
  svg << "  </g>\n";

  svg << "  <g id=\"series-D\" fill=\"#8b4513\">\n";
  for (std::size_t i = 0; i < spec.d_series.values.size(); ++i) {
    const auto& v = spec.d_series.values[i];
    const double cx = f.px(static_cast<double>(i + 1));
    const double cy = f.py(v.to_double());
    svg << "    <polygon points=\"" << num(cx) << ',' << num(cy - 5) << ' ' << num(cx + 5) << ','
        << num(cy) << ' ' << num(cx) << ',' << num(cy + 5) << ' ' << num(cx - 5) << ','
        << num(cy) << "\" data-index=\"" << i + 1 << "\" data-y=\"" << format_significant(v)
        << "\"/>\n";
  }
  svg << "  </g>\n";

  svg << "  <g id=\"legend\" font-family=\"sans-serif\" font-size=\"12\">\n";
  const double lx = right - 150;
  svg << "    <polygon points=\"" << num(lx) << ',' << num(top + 6) << ' ' << num(lx + 5) << ','
      << num(top + 11) << ' ' << num(lx) << ',' << num(top + 16) << ' ' << num(lx - 5) << ','
      << num(top + 11) << "\" fill=\"#8b4513\"/>\n";
  svg << "    <text x=\"" << num(lx + 12) << "\" y=\"" << num(top + 15) << "\">"
      << escape(spec.d_series.label) << "</text>\n";
  svg << "    <circle cx=\"" << num(lx) << "\" cy=\"" << num(top + 29) << "\" r=\"4\" fill=\"#1f5fbf\"/>\n";
  svg << "    <text x=\"" << num(lx + 12) << "\" y=\"" << num(top + 33) << "\">"
      << escape(spec.c_series.label) << "</text>\n";
  svg << "  </g>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace wendroff
