#pragma once

/**
 * @file svg_render.hpp
 * @brief Deterministic SVG rendering of the decision picture.
 *
 * Draws four stacked polygons over a unit lattice grid:
 *
 *   - nu_b          (#d62728)  the base class,
 *   - nu_b + mu*    (#1f77b4)  the partial-sum upper bound,
 *   - nu_bt         (#2ca02c)  the candidate class,
 *   - nu_bt + 1     (#17becf)  the slopewise upper envelope.
 *
 * Grid scale is fixed at 40 pixels per lattice step. Breakpoints are filled
 * circles; dotted vertical rules mark every breakpoint x-coordinate. All
 * coordinates are computed in exact arithmetic and printed as truncated
 * decimals, so identical input yields byte-identical output.
 */

#include <algorithm>
#include <cstddef>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "newton_strata/errors.hpp"
#include "newton_strata/polygon.hpp"
#include "newton_strata/rational.hpp"

namespace newton_strata {

namespace svg_detail {

constexpr long long kStep = 40;    // pixels per lattice unit
constexpr long long kMargin = 40;  // outer margin in pixels
constexpr long long kLegendRow = 18;
constexpr long long kLegendPad = 12;

struct Curve {
  std::string label;
  std::string color;
  Polygon polygon;
};

inline std::string coord(const Rat& value) { return format_decimal(value, 3); }

}  // namespace svg_detail

/// Render the four-curve decision picture for dominant polygons of equal
/// length. `mu` must be dominant and `nu_b + mu.dual()` must again be
/// dominant (always the case for the minuscule shapes this library emits).
inline std::string render_decision_svg(const Polygon& nu_b,
                                       const Polygon& nu_bt,
                                       const Polygon& mu) {
  using namespace svg_detail;
  detail::require_same_length(nu_b, nu_bt, "render");
  detail::require_same_length(nu_b, mu, "render");
  nu_b.require_dominant("render");
  nu_bt.require_dominant("render");
  mu.require_dominant("render");

  std::vector<Curve> curves;
  curves.push_back({"nu_b", "#d62728", nu_b});
  curves.push_back({"nu_b + mu*", "#1f77b4", add(nu_b, mu.dual())});
  curves.push_back({"nu_bt", "#2ca02c", nu_bt});
  curves.push_back(
      {"nu_bt + 1", "#17becf", add(nu_bt, Polygon::constant(nu_bt.len(), 1))});
  curves[1].polygon.require_dominant("render");

  const std::size_t len = nu_b.len();

  // Vertical bounds over every curve height, widened to whole lattice lines.
  Rat y_min(0), y_max(0);
  for (const Curve& c : curves) {
    Rat h(0);
    for (std::size_t x = 0; x < c.polygon.len(); ++x) {
      h += c.polygon[x];
      if (h < y_min) y_min = h;
      if (h > y_max) y_max = h;
    }
  }
  const Int lo = rat_floor(y_min);
  const Int hi = rat_ceil(y_max);
  const long long y_span = (hi - lo).convert_to<long long>();

  const long long legend_h =
      kLegendPad + kLegendRow * static_cast<long long>(curves.size());
  const long long plot_top = kMargin + legend_h;
  const long long width =
      std::max<long long>(2 * kMargin + kStep * static_cast<long long>(len),
                          2 * kMargin + 300);
  const long long height = plot_top + kStep * y_span + kMargin;

  // Pixel transforms (exact; y grows downward).
  auto px = [&](std::size_t x) {
    return Rat(kMargin + kStep * static_cast<long long>(x));
  };
  auto py = [&](const Rat& y) {
    return Rat(plot_top) + Rat(Int(kStep)) * (Rat(hi) - y);
  };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " "
      << height << "\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
      << "\" fill=\"#ffffff\"/>\n";

  // Unit grid.
  const Rat grid_left = px(0);
  const Rat grid_right = px(len);
  const Rat grid_top = py(Rat(hi));
  const Rat grid_bottom = py(Rat(lo));
  for (std::size_t x = 0; x <= len; ++x) {
    out << "<line x1=\"" << coord(px(x)) << "\" y1=\"" << coord(grid_top)
        << "\" x2=\"" << coord(px(x)) << "\" y2=\"" << coord(grid_bottom)
        << "\" stroke=\"#e0e0e0\" stroke-width=\"1\"/>\n";
  }
  for (Int y = lo; y <= hi; ++y) {
    out << "<line x1=\"" << coord(grid_left) << "\" y1=\"" << coord(py(Rat(y)))
        << "\" x2=\"" << coord(grid_right) << "\" y2=\""
        << coord(py(Rat(y))) << "\" stroke=\"#e0e0e0\" stroke-width=\"1\"/>\n";
  }

  // Dotted vertical rules at every breakpoint x-coordinate.
  std::set<std::size_t> rule_xs;
  for (const Curve& c : curves) {
    for (std::size_t x : c.polygon.breakpoint_xs()) rule_xs.insert(x);
  }
  for (std::size_t x : rule_xs) {
    out << "<line x1=\"" << coord(px(x)) << "\" y1=\"" << coord(grid_top)
        << "\" x2=\"" << coord(px(x)) << "\" y2=\"" << coord(grid_bottom)
        << "\" stroke=\"#888888\" stroke-width=\"1\" stroke-dasharray=\"4 3\"/>\n";
  }

  // Curves with filled breakpoint markers.
  for (const Curve& c : curves) {
    out << "<polyline fill=\"none\" stroke=\"" << c.color
        << "\" stroke-width=\"2\" points=\"";
    Rat h(0);
    out << coord(px(0)) << "," << coord(py(h));
    for (std::size_t x = 0; x < c.polygon.len(); ++x) {
      h += c.polygon[x];
      out << " " << coord(px(x + 1)) << "," << coord(py(h));
    }
    out << "\"/>\n";
    for (const Breakpoint& bp : c.polygon.breakpoints()) {
      out << "<circle cx=\"" << coord(px(bp.x)) << "\" cy=\""
          << coord(py(bp.y)) << "\" r=\"4\" fill=\"" << c.color << "\"/>\n";
    }
  }

  // Legend.
  for (std::size_t i = 0; i < curves.size(); ++i) {
    const long long row_y =
        kMargin + kLegendPad + kLegendRow * static_cast<long long>(i) - 5;
    out << "<rect x=\"" << kMargin << "\" y=\"" << row_y - 8
        << "\" width=\"12\" height=\"12\" fill=\"" << curves[i].color
        << "\"/>\n";
    out << "<text x=\"" << kMargin + 18 << "\" y=\"" << row_y + 2
        << "\" font-family=\"monospace\" font-size=\"13\" fill=\"#222222\">"
        << curves[i].label << "</text>\n";
  }

  out << "</svg>\n";
  return out.str();
}

}  // namespace newton_strata
