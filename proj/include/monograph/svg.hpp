#pragma once

#include <string>
#include <vector>

namespace monograph {

struct SvgSeries {
  std::vector<std::pair<double, double>> points;
  std::string color = "#1f6fb2";
};

struct SvgRect {
  double x, y, w, h;  // data coordinates, y up
  std::string color = "#c03a2b";
};

struct SvgCircle {
  double cx, cy, r;
  std::string color = "#2e8b57";
};

// Standalone deterministic SVG: fixed canvas, axes, polylines for each
// series, optional rectangle/circle overlays. Identical input yields
// byte-identical output (fixed-precision formatting, no timestamps).
std::string render_svg(const std::vector<SvgSeries>& series,
                       const std::vector<SvgRect>& rects = {},
                       const std::vector<SvgCircle>& circles = {});

}  // namespace monograph
