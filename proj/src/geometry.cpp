#include "monograph/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace monograph {

std::vector<Square> squares_of_rect(const Rect53& r) {
  if (r.base <= 0) throw std::invalid_argument("rectangle base must be positive");
  Rational side = r.base / 5;
  std::vector<Square> out;
  out.reserve(15);
  for (int row = 0; row < 3; ++row)
    for (int col = 0; col < 5; ++col)
      out.push_back({r.left + col * side, r.bottom + row * side, side});
  return out;
}

namespace {

// Does the graph of g meet the open interior of s? Exact: per segment,
// clip to the square's x-range; the affine image of the clipped open
// interval is an open value interval (or a point for constant segments).
bool graph_meets_open_square(const PLFunction& g, const Square& s) {
  const auto& xs = g.breakpoints();
  const auto& ys = g.values();
  Rational sx1 = s.x0 + s.side;
  Rational sy1 = s.y0 + s.side;
  for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
    Rational p = std::max(xs[k], s.x0);
    Rational q = std::min(xs[k + 1], sx1);
    if (p >= q) continue;
    Rational vp = pl_eval(g, p);
    Rational vq = pl_eval(g, q);
    if (vp == vq) {
      if (s.y0 < vp && vp < sy1) return true;
      continue;
    }
    Rational m = std::min(vp, vq);
    Rational M = std::max(vp, vq);
    // Open x-interval maps onto open (m, M); interior breakpoint values are
    // covered by the neighbouring segment's clip.
    if (std::max(m, s.y0) < std::min(M, sy1)) return true;
  }
  return false;
}

}  // namespace

std::optional<std::size_t> square_avoidance(const PLFunction& g, const Rect53& r) {
  auto squares = squares_of_rect(r);
  for (std::size_t i = 0; i < squares.size(); ++i)
    if (!graph_meets_open_square(g, squares[i])) return i;
  return std::nullopt;
}

namespace {

struct SamplesD {
  std::vector<std::pair<double, double>> pts;  // sorted by x
};

double nn_dist(const SamplesD& s, double x, double y) {
  auto it = std::lower_bound(s.pts.begin(), s.pts.end(), std::make_pair(x, -1e300));
  std::size_t i = static_cast<std::size_t>(it - s.pts.begin());
  double best = 1e300;
  for (std::size_t j = i; j < s.pts.size(); ++j) {
    double dx = s.pts[j].first - x;
    if (dx * dx >= best) break;
    double dy = s.pts[j].second - y;
    best = std::min(best, dx * dx + dy * dy);
  }
  for (std::size_t j = i; j-- > 0;) {
    double dx = s.pts[j].first - x;
    if (dx * dx >= best) break;
    double dy = s.pts[j].second - y;
    best = std::min(best, dx * dx + dy * dy);
  }
  return std::sqrt(best);
}

Rational rational_of_double(double v) {
  // Dyadic snap: fine enough for a search result that gets re-verified.
  double scaled = std::ldexp(v, 40);
  Integer num;
  mpz_set_d(num.get_mpz_t(), scaled);
  Rational r(num);
  r /= pow2(40);
  return r;
}

// Exact check that B(y, qr) is inside B(c, r) and misses every sample.
bool ball_verifies(const std::vector<GraphPoint>& samples, const GraphPoint& c,
                   const Rational& r, const GraphPoint& y, const Rational& qr) {
  if (qr <= 0) return false;
  Rational dx = y.x - c.x, dy = y.y - c.y;
  Rational room = r - qr;
  if (room < 0 || dx * dx + dy * dy > room * room) return false;
  Rational qr2 = qr * qr;
  for (const GraphPoint& s : samples) {
    Rational ex = s.x - y.x, ey = s.y - y.y;
    if (ex * ex + ey * ey < qr2) return false;
  }
  return true;
}

}  // namespace

PorosityReport porosity_estimate(const std::vector<GraphPoint>& samples,
                                 const std::vector<GraphPoint>& centers,
                                 const std::vector<Rational>& radii,
                                 unsigned search_resolution) {
  if (samples.empty()) throw std::invalid_argument("porosity needs samples");
  SamplesD sd;
  sd.pts.reserve(samples.size());
  for (const GraphPoint& p : samples) sd.pts.emplace_back(p.x.get_d(), p.y.get_d());
  std::sort(sd.pts.begin(), sd.pts.end());

  PorosityReport report;
  report.p = Rational(1, 2);
  for (const GraphPoint& c : centers) {
    double cx = c.x.get_d(), cy = c.y.get_d();
    for (const Rational& r : radii) {
      if (r <= 0) throw std::invalid_argument("porosity radius must be positive");
      double rd = r.get_d();
      // Coarse grid over B(c, r), then shrinking refinement around the best.
      double bx = cx, by = cy, bq = 0;
      double span = rd;
      double gx = cx, gy = cy;
      const int kGrid = 17;
      for (unsigned round = 0; round <= search_resolution; ++round) {
        for (int i = 0; i < kGrid; ++i) {
          for (int j = 0; j < kGrid; ++j) {
            double x = gx + span * (2.0 * i / (kGrid - 1) - 1.0);
            double y = gy + span * (2.0 * j / (kGrid - 1) - 1.0);
            double dcx = x - cx, dcy = y - cy;
            double inside = rd - std::sqrt(dcx * dcx + dcy * dcy);
            if (inside <= 0) continue;
            double q = std::min(nn_dist(sd, x, y), inside) / rd;
            if (q > bq) { bq = q; bx = x; by = y; }
          }
        }
        gx = bx; gy = by; span /= kGrid - 1; span *= 2;
      }
      bq = std::min(bq, 0.5);

      // Exact certification with headroom; back off if the double search
      // overshot.
      PorosityRow row;
      row.center = c;
      row.r = r;
      row.empty_center = {rational_of_double(bx), rational_of_double(by)};
      Rational q = rational_of_double(bq * 0.999);
      while (q > 0 && !ball_verifies(samples, c, r, row.empty_center, q * r))
        q = q * Rational(9, 10);
      row.q = q;
      report.rows.push_back(row);
      if (q < report.p) report.p = q;
    }
  }
  return report;
}

BoxDimension box_dimension(const std::vector<std::pair<double, double>>& samples,
                           double side_min, double side_max) {
  if (samples.empty()) throw std::invalid_argument("box_dimension needs samples");
  if (!(side_min > 0) || !(side_max > side_min))
    throw std::invalid_argument("box_dimension needs 0 < side_min < side_max");

  BoxDimension out;
  std::vector<double> lx, ly;
  for (double side = side_max; side >= side_min; side /= 2) {
    std::set<std::pair<long long, long long>> boxes;
    for (const auto& [x, y] : samples)
      boxes.insert({static_cast<long long>(std::floor(x / side)),
                    static_cast<long long>(std::floor(y / side))});
    out.counts.push_back({side, boxes.size()});
    lx.push_back(std::log(1.0 / side));
    ly.push_back(std::log(static_cast<double>(boxes.size())));
  }
  if (lx.size() < 2) throw std::invalid_argument("box_dimension needs >= 2 dyadic scales");

  double n = static_cast<double>(lx.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sx += lx[i]; sy += ly[i]; sxx += lx[i] * lx[i]; sxy += lx[i] * ly[i];
  }
  out.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return out;
}

std::pair<Rational, Rational> graph_length(const PLFunction& f, const Integer& denominator) {
  const auto& xs = f.breakpoints();
  const auto& ys = f.values();
  Rational lo = 0, hi = 0;
  for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
    Rational dx = xs[k + 1] - xs[k];
    Rational dy = ys[k + 1] - ys[k];
    Rational sq = dx * dx + dy * dy;
    lo += sqrt_lower_bound(sq, denominator);
    hi += sqrt_upper_bound(sq, denominator);
  }
  return {lo, hi};
}

}  // namespace monograph
