#include "monograph/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace monograph {

namespace {

constexpr double kWidth = 800, kHeight = 500, kPad = 40;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

}  // namespace

std::string render_svg(const std::vector<SvgSeries>& series, const std::vector<SvgRect>& rects,
                       const std::vector<SvgCircle>& circles) {
  bool any = false;
  double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  auto absorb = [&](double x, double y) {
    if (!any) {
      xmin = xmax = x;
      ymin = ymax = y;
      any = true;
    } else {
      xmin = std::min(xmin, x); xmax = std::max(xmax, x);
      ymin = std::min(ymin, y); ymax = std::max(ymax, y);
    }
  };
  for (const auto& s : series)
    for (const auto& [x, y] : s.points) absorb(x, y);
  for (const auto& r : rects) {
    absorb(r.x, r.y);
    absorb(r.x + r.w, r.y + r.h);
  }
  for (const auto& c : circles) {
    absorb(c.cx - c.r, c.cy - c.r);
    absorb(c.cx + c.r, c.cy + c.r);
  }
  if (!any) throw std::invalid_argument("render_svg needs at least one point");
  if (xmax == xmin) xmax = xmin + 1;
  if (ymax == ymin) ymax = ymin + 1;

  auto px = [&](double x) { return kPad + (x - xmin) / (xmax - xmin) * (kWidth - 2 * kPad); };
  auto py = [&](double y) { return kHeight - kPad - (y - ymin) / (ymax - ymin) * (kHeight - 2 * kPad); };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(kWidth) + "\" height=\"" +
         fmt(kHeight) + "\" viewBox=\"0 0 " + fmt(kWidth) + " " + fmt(kHeight) + "\">\n";
  out += "<rect x=\"0\" y=\"0\" width=\"" + fmt(kWidth) + "\" height=\"" + fmt(kHeight) +
         "\" fill=\"#ffffff\"/>\n";
  // Axes along the data bounds.
  out += "<line x1=\"" + fmt(px(xmin)) + "\" y1=\"" + fmt(py(ymin)) + "\" x2=\"" + fmt(px(xmax)) +
         "\" y2=\"" + fmt(py(ymin)) + "\" stroke=\"#444444\" stroke-width=\"1\"/>\n";
  out += "<line x1=\"" + fmt(px(xmin)) + "\" y1=\"" + fmt(py(ymin)) + "\" x2=\"" + fmt(px(xmin)) +
         "\" y2=\"" + fmt(py(ymax)) + "\" stroke=\"#444444\" stroke-width=\"1\"/>\n";

  for (const auto& r : rects) {
    out += "<rect x=\"" + fmt(px(r.x)) + "\" y=\"" + fmt(py(r.y + r.h)) + "\" width=\"" +
           fmt(px(r.x + r.w) - px(r.x)) + "\" height=\"" + fmt(py(r.y) - py(r.y + r.h)) +
           "\" fill=\"none\" stroke=\"" + r.color + "\" stroke-width=\"1.5\"/>\n";
  }
  for (const auto& c : circles) {
    out += "<circle cx=\"" + fmt(px(c.cx)) + "\" cy=\"" + fmt(py(c.cy)) + "\" r=\"" +
           fmt((px(c.cx + c.r) - px(c.cx - c.r)) / 2) + "\" fill=\"none\" stroke=\"" + c.color +
           "\" stroke-width=\"1.5\"/>\n";
  }
  for (const auto& s : series) {
    out += "<polyline fill=\"none\" stroke=\"" + s.color + "\" stroke-width=\"1\" points=\"";
    for (std::size_t i = 0; i < s.points.size(); ++i) {
      if (i) out += " ";
      out += fmt(px(s.points[i].first)) + "," + fmt(py(s.points[i].second));
    }
    out += "\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace monograph
