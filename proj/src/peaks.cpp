#include "monograph/peaks.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>

namespace monograph {

Rational peak_norm(const Rational& t) {
  Rational a = abs(t);
  if (a >= 1) return 0;
  return 1 - a;
}

std::vector<Rational> rational_enumeration(std::size_t count) {
  std::vector<Rational> out;
  out.reserve(count);
  if (count > 0) out.push_back(Rational(0));
  if (count > 1) out.push_back(Rational(1));
  // Mediant breadth-first between 0/1 and 1/1 yields every rational in
  // (0,1) exactly once.
  std::deque<std::pair<Rational, Rational>> queue;
  queue.emplace_back(Rational(0), Rational(1));
  while (out.size() < count) {
    auto [l, r] = queue.front();
    queue.pop_front();
    Rational med(l.get_num() + r.get_num(), l.get_den() + r.get_den());
    med.canonicalize();
    out.push_back(med);
    queue.emplace_back(l, med);
    queue.emplace_back(med, r);
  }
  return out;
}

namespace {

// ---- exact planar distance primitives ----

struct Box {
  Rational x0, x1, y0, y1;
};

Rational point_seg_dist_sq(const Rational& px, const Rational& py, const Rational& ax,
                           const Rational& ay, const Rational& bx, const Rational& by) {
  Rational ux = bx - ax, uy = by - ay;
  Rational len_sq = ux * ux + uy * uy;
  Rational t = 0;
  if (len_sq > 0) {
    t = ((px - ax) * ux + (py - ay) * uy) / len_sq;
    if (t < 0) t = 0;
    if (t > 1) t = 1;
  }
  Rational dx = px - (ax + t * ux), dy = py - (ay + t * uy);
  return dx * dx + dy * dy;
}

int orient(const Rational& ax, const Rational& ay, const Rational& bx, const Rational& by,
           const Rational& cx, const Rational& cy) {
  Rational v = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
  return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

bool segs_intersect(const Rational& ax, const Rational& ay, const Rational& bx,
                    const Rational& by, const Rational& cx, const Rational& cy,
                    const Rational& dx, const Rational& dy) {
  int o1 = orient(ax, ay, bx, by, cx, cy);
  int o2 = orient(ax, ay, bx, by, dx, dy);
  int o3 = orient(cx, cy, dx, dy, ax, ay);
  int o4 = orient(cx, cy, dx, dy, bx, by);
  if (o1 != o2 && o3 != o4) return true;
  auto on = [](const Rational& px, const Rational& py, const Rational& qx, const Rational& qy,
               const Rational& rx, const Rational& ry) {
    return std::min(px, qx) <= rx && rx <= std::max(px, qx) && std::min(py, qy) <= ry &&
           ry <= std::max(py, qy);
  };
  if (o1 == 0 && on(ax, ay, bx, by, cx, cy)) return true;
  if (o2 == 0 && on(ax, ay, bx, by, dx, dy)) return true;
  if (o3 == 0 && on(cx, cy, dx, dy, ax, ay)) return true;
  if (o4 == 0 && on(cx, cy, dx, dy, bx, by)) return true;
  return false;
}

Rational seg_seg_dist_sq(const Rational& ax, const Rational& ay, const Rational& bx,
                         const Rational& by, const Rational& cx, const Rational& cy,
                         const Rational& dx, const Rational& dy) {
  if (segs_intersect(ax, ay, bx, by, cx, cy, dx, dy)) return 0;
  // Disjoint segments: the minimum involves an endpoint.
  Rational best = point_seg_dist_sq(ax, ay, cx, cy, dx, dy);
  best = std::min(best, point_seg_dist_sq(bx, by, cx, cy, dx, dy));
  best = std::min(best, point_seg_dist_sq(cx, cy, ax, ay, bx, by));
  best = std::min(best, point_seg_dist_sq(dx, dy, ax, ay, bx, by));
  return best;
}

bool point_in_box(const Box& b, const Rational& x, const Rational& y) {
  return b.x0 <= x && x <= b.x1 && b.y0 <= y && y <= b.y1;
}

Rational seg_box_dist_sq(const Box& b, const Rational& ax, const Rational& ay,
                         const Rational& bx, const Rational& by) {
  if (point_in_box(b, ax, ay) || point_in_box(b, bx, by)) return 0;
  Rational best = seg_seg_dist_sq(ax, ay, bx, by, b.x0, b.y0, b.x1, b.y0);
  if (best == 0) return best;
  best = std::min(best, seg_seg_dist_sq(ax, ay, bx, by, b.x1, b.y0, b.x1, b.y1));
  if (best == 0) return best;
  best = std::min(best, seg_seg_dist_sq(ax, ay, bx, by, b.x1, b.y1, b.x0, b.y1));
  if (best == 0) return best;
  best = std::min(best, seg_seg_dist_sq(ax, ay, bx, by, b.x0, b.y1, b.x0, b.y0));
  return best;
}

// Exact test dist(graph, box)^2 >= threshold, with a cheap per-segment
// x-gap rejection before the full computation.
bool graph_box_dist_sq_at_least(const PLFunction& g, const Box& b, const Rational& threshold) {
  const auto& xs = g.breakpoints();
  const auto& ys = g.values();
  for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
    Rational gap = 0;
    if (xs[k + 1] < b.x0) gap = b.x0 - xs[k + 1];
    else if (xs[k] > b.x1) gap = xs[k] - b.x1;
    if (gap * gap >= threshold) continue;
    if (seg_box_dist_sq(b, xs[k], ys[k], xs[k + 1], ys[k + 1]) < threshold) return false;
  }
  return true;
}

// ---- double shadow of the same primitives, for search and prefilter ----

struct BoxD {
  double x0, x1, y0, y1;
};

double point_seg_dist_d(double px, double py, double ax, double ay, double bx, double by) {
  double ux = bx - ax, uy = by - ay;
  double len = ux * ux + uy * uy;
  double t = 0;
  if (len > 0) t = std::clamp(((px - ax) * ux + (py - ay) * uy) / len, 0.0, 1.0);
  double dx = px - (ax + t * ux), dy = py - (ay + t * uy);
  return std::sqrt(dx * dx + dy * dy);
}

double seg_box_dist_d(const BoxD& b, double ax, double ay, double bx, double by) {
  auto inside = [&](double x, double y) {
    return b.x0 <= x && x <= b.x1 && b.y0 <= y && y <= b.y1;
  };
  if (inside(ax, ay) || inside(bx, by)) return 0;
  double corners[5][2] = {{b.x0, b.y0}, {b.x1, b.y0}, {b.x1, b.y1}, {b.x0, b.y1}, {b.x0, b.y0}};
  double best = 1e300;
  for (int e = 0; e < 4; ++e) {
    double cx = corners[e][0], cy = corners[e][1];
    double dx = corners[e + 1][0], dy = corners[e + 1][1];
    // Crossing test in doubles (prefilter only; exactness comes later).
    auto cross = [](double ox, double oy, double px, double py, double qx, double qy) {
      return (px - ox) * (qy - oy) - (py - oy) * (qx - ox);
    };
    double o1 = cross(ax, ay, bx, by, cx, cy), o2 = cross(ax, ay, bx, by, dx, dy);
    double o3 = cross(cx, cy, dx, dy, ax, ay), o4 = cross(cx, cy, dx, dy, bx, by);
    if (((o1 > 0) != (o2 > 0)) && ((o3 > 0) != (o4 > 0))) return 0;
    best = std::min({best, point_seg_dist_d(ax, ay, cx, cy, dx, dy),
                     point_seg_dist_d(bx, by, cx, cy, dx, dy),
                     point_seg_dist_d(cx, cy, ax, ay, bx, by),
                     point_seg_dist_d(dx, dy, ax, ay, bx, by)});
  }
  return best;
}

struct GraphD {
  std::vector<double> xs, ys;
};

double graph_box_dist_d(const GraphD& g, const BoxD& b) {
  double best = 1e300;
  for (std::size_t k = 0; k + 1 < g.xs.size(); ++k) {
    best = std::min(best, seg_box_dist_d(b, g.xs[k], g.ys[k], g.xs[k + 1], g.ys[k + 1]));
    if (best == 0) return 0;
  }
  return best;
}

// ---- rectangle parametrization ----
// A rectangle is (center cx, cy, base l); squares are indexed by column c
// and row w. The square's x-range is cx + l*(c/5 - 1/2) .. cx + l*((c+1)/5
// - 1/2), y-range cy + l*(w/5 - 3/10) .. cy + l*((w+1)/5 - 3/10).

struct ParamBox {
  Rational cx0, cx1, cy0, cy1, l0, l1;
};

Rational coef_min(const Rational& k, const Rational& l0, const Rational& l1) {
  return std::min(k * l0, k * l1);
}
Rational coef_max(const Rational& k, const Rational& l0, const Rational& l1) {
  return std::max(k * l0, k * l1);
}

// Hull of square (c, w) over every rectangle in the parameter box.
Box square_hull(const ParamBox& p, int c, int w) {
  Rational kx0 = Rational(c) / 5 - Rational(1, 2);
  Rational kx1 = Rational(c + 1) / 5 - Rational(1, 2);
  Rational ky0 = Rational(w) / 5 - Rational(3, 10);
  Rational ky1 = Rational(w + 1) / 5 - Rational(3, 10);
  return {p.cx0 + coef_min(kx0, p.l0, p.l1), p.cx1 + coef_max(kx1, p.l0, p.l1),
          p.cy0 + coef_min(ky0, p.l0, p.l1), p.cy1 + coef_max(ky1, p.l0, p.l1)};
}

Box rect_hull(const ParamBox& p) {
  Rational hx = p.l1 / 2, hy = p.l1 * 3 / 10;
  return {p.cx0 - hx, p.cx1 + hx, p.cy0 - hy, p.cy1 + hy};
}

BoxD to_double(const Box& b) {
  return {b.x0.get_d(), b.x1.get_d(), b.y0.get_d(), b.y1.get_d()};
}

// Largest certified square clearance of a single rectangle, in doubles.
double rect_clearance_d(const GraphD& g, double cx, double cy, double l) {
  double best = 0;
  for (int c = 0; c < 5; ++c) {
    for (int w = 0; w < 3; ++w) {
      BoxD s{cx + l * (c / 5.0 - 0.5), cx + l * ((c + 1) / 5.0 - 0.5),
             cy + l * (w / 5.0 - 0.3), cy + l * ((w + 1) / 5.0 - 0.3)};
      best = std::max(best, graph_box_dist_d(g, s));
    }
  }
  return best;
}

bool certify_margin(const PLFunction& g, const GraphD& gd, const ParamBox& root,
                    const Rational& delta, const MarginOptions& opts) {
  Rational delta_sq = delta * delta;
  double delta_d = delta.get_d();
  std::vector<std::pair<ParamBox, int>> stack;
  stack.emplace_back(root, 0);
  long nodes = 0;
  while (!stack.empty()) {
    auto [p, depth] = stack.back();
    stack.pop_back();
    if (++nodes > opts.node_budget) return false;

    // If even the whole rectangle hull is clear, every square is.
    Box whole = rect_hull(p);
    if (graph_box_dist_d(gd, to_double(whole)) > 1.02 * delta_d &&
        graph_box_dist_sq_at_least(g, whole, delta_sq)) {
      continue;
    }

    // Rank squares by the prefilter, exactly verify the best candidates.
    double best_d[2] = {-1, -1};
    int best_c[2] = {0, 0}, best_w[2] = {0, 0};
    Box hulls[5][3];
    for (int c = 0; c < 5; ++c) {
      for (int w = 0; w < 3; ++w) {
        hulls[c][w] = square_hull(p, c, w);
        double d = graph_box_dist_d(gd, to_double(hulls[c][w]));
        if (d > best_d[0]) {
          best_d[1] = best_d[0]; best_c[1] = best_c[0]; best_w[1] = best_w[0];
          best_d[0] = d; best_c[0] = c; best_w[0] = w;
        } else if (d > best_d[1]) {
          best_d[1] = d; best_c[1] = c; best_w[1] = w;
        }
      }
    }
    bool done = false;
    for (int t = 0; t < 2 && !done; ++t) {
      if (best_d[t] >= delta_d &&
          graph_box_dist_sq_at_least(g, hulls[best_c[t]][best_w[t]], delta_sq))
        done = true;
    }
    if (done) continue;

    if (depth >= opts.max_depth) return false;
    // Split the relatively widest dimension (base width weighted up: the
    // hulls inflate linearly in it).
    Rational wx = p.cx1 - p.cx0, wy = p.cy1 - p.cy0, wl = p.l1 - p.l0;
    ParamBox a = p, b = p;
    if (wx >= wy && wx >= wl) {
      Rational m = (p.cx0 + p.cx1) / 2;
      a.cx1 = m; b.cx0 = m;
    } else if (wy >= wl) {
      Rational m = (p.cy0 + p.cy1) / 2;
      a.cy1 = m; b.cy0 = m;
    } else {
      Rational m = (p.l0 + p.l1) / 2;
      a.l1 = m; b.l0 = m;
    }
    stack.emplace_back(a, depth + 1);
    stack.emplace_back(b, depth + 1);
  }
  return true;
}

}  // namespace

Rational peak_margin(const PLFunction& g, const Rational& eps_len, const MarginOptions& opts) {
  if (eps_len <= 0) throw std::invalid_argument("peak_margin needs eps_len > 0");

  GraphD gd;
  for (const Rational& x : g.breakpoints()) gd.xs.push_back(x.get_d());
  for (const Rational& y : g.values()) gd.ys.push_back(y.get_d());

  Rational ymin = g.values().front(), ymax = ymin;
  for (const Rational& y : g.values()) {
    ymin = std::min(ymin, y);
    ymax = std::max(ymax, y);
  }
  ParamBox root{g.domain_lo() - 5, g.domain_hi() + 5, ymin - 5, ymax + 5,
                eps_len, Rational(5)};

  // Estimate the optimum by sampling, then certify a discounted value.
  double est = 1e300;
  const int kC = 14, kL = 10;
  double cx0 = root.cx0.get_d(), cx1 = root.cx1.get_d();
  double cy0 = root.cy0.get_d(), cy1 = root.cy1.get_d();
  double l0 = root.l0.get_d(), l1 = root.l1.get_d();
  for (int i = 0; i <= kC; ++i) {
    for (int j = 0; j <= kC; ++j) {
      for (int k = 0; k <= kL; ++k) {
        double l = l0 * std::pow(l1 / l0, static_cast<double>(k) / kL);
        double cx = cx0 + (cx1 - cx0) * i / kC;
        double cy = cy0 + (cy1 - cy0) * j / kC;
        est = std::min(est, rect_clearance_d(gd, cx, cy, l));
      }
    }
  }
  if (!(est > 0)) throw MarginNotCertified("no positive clearance at sampled rectangles");

  // Dyadic snap of 0.7 * est, halved until the branch-and-bound closes.
  double target = 0.7 * est;
  Integer num;
  mpz_set_d(num.get_mpz_t(), std::ldexp(target, 40));
  Rational delta(num);
  delta /= pow2(40);
  for (int attempt = 0; attempt < 6; ++attempt) {
    if (delta > 0 && certify_margin(g, gd, root, delta, opts)) return delta;
    delta /= 2;
  }
  throw MarginNotCertified("branch-and-bound did not close within budget");
}

PeakSumModel peak_build(std::size_t peaks, const MarginOptions& opts) {
  if (peaks < 1) throw std::invalid_argument("peak_build needs at least one peak");
  PeakSumModel m;
  m.peaks = peaks;
  m.q = rational_enumeration(peaks + 1);
  m.a = {Rational(1, 4)};
  m.b = {Rational(1, 16)};
  m.s = {Rational(4)};
  m.delta = {Rational(0)};
  m.eps = {Rational(0)};

  for (std::size_t n = 1; n <= peaks; ++n) {
    Rational eps_n = 10;  // > any distance inside [0,1]
    for (std::size_t i = 0; i <= n; ++i)
      for (std::size_t j = i + 1; j <= n; ++j) {
        Rational d = abs(m.q[i] - m.q[j]);
        if (d < eps_n) eps_n = d;
      }
    Rational delta_n = peak_margin(peak_pl(m, n - 1), eps_n, opts);
    Rational cap = pow2(-static_cast<long>(n)) / Rational(static_cast<long>(n));
    Rational half_delta = delta_n / 2;
    Rational a_n = std::min(cap, half_delta);
    Rational sum_s = 0;
    for (std::size_t i = 0; i < n; ++i) sum_s += m.s[i];
    Rational s_n = pow2(static_cast<long>(n) + 1) * sum_s;
    m.eps.push_back(eps_n);
    m.delta.push_back(delta_n);
    m.a.push_back(a_n);
    m.s.push_back(s_n);
    m.b.push_back(a_n / s_n);
  }
  return m;
}

PLFunction peak_pl(const PeakSumModel& model, std::size_t upto) {
  if (upto >= model.q.size()) throw std::invalid_argument("peak index out of range");
  std::set<Rational> mesh{Rational(0), Rational(1)};
  for (std::size_t i = 0; i <= upto; ++i) {
    Rational pts[3] = {model.q[i] - model.b[i], model.q[i], model.q[i] + model.b[i]};
    for (const Rational& t : pts)
      if (0 <= t && t <= 1) mesh.insert(t);
  }
  std::vector<Rational> xs(mesh.begin(), mesh.end()), ys;
  ys.reserve(xs.size());
  for (const Rational& x : xs) {
    Rational v = 0;
    for (std::size_t i = 0; i <= upto; ++i)
      v += model.a[i] * peak_norm((x - model.q[i]) / model.b[i]);
    ys.push_back(v);
  }
  return PLFunction(std::move(xs), std::move(ys));
}

std::pair<Rational, Rational> peak_eval(const PeakSumModel& model, const Rational& x,
                                        std::size_t upto) {
  if (upto >= model.q.size()) throw std::invalid_argument("peak index out of range");
  Rational v = 0;
  for (std::size_t i = 0; i <= upto; ++i)
    v += model.a[i] * peak_norm((x - model.q[i]) / model.b[i]);
  Rational err = 0;
  for (std::size_t i = upto + 1; i <= model.peaks; ++i) err += model.a[i];
  err += pow2(-static_cast<long>(model.peaks));  // sum_{n>N} 2^-n / n
  return {v, err};
}

bool peak_model_invariants_ok(const PeakSumModel& model) {
  std::size_t n = model.peaks;
  if (model.q.size() != n + 1 || model.a.size() != n + 1 || model.b.size() != n + 1 ||
      model.s.size() != n + 1 || model.delta.size() != n + 1 || model.eps.size() != n + 1)
    return false;
  for (std::size_t i = 0; i <= n; ++i) {
    if (model.q[i] < 0 || model.q[i] > 1) return false;
    if (model.a[i] <= 0 || model.b[i] <= 0) return false;
    if (model.s[i] != model.a[i] / model.b[i]) return false;
    for (std::size_t j = i + 1; j <= n; ++j)
      if (model.q[i] == model.q[j]) return false;
  }
  if (model.s[0] <= 3) return false;
  for (std::size_t k = 1; k <= n; ++k) {
    if (model.a[k] > pow2(-static_cast<long>(k)) / Rational(static_cast<long>(k))) return false;
    Rational sum_s = 0;
    for (std::size_t i = 0; i < k; ++i) sum_s += model.s[i];
    if (model.s[k] <= pow2(static_cast<long>(k)) * sum_s) return false;
    if (model.a[k] >= model.delta[k]) return false;
    Rational eps_k = 10;
    for (std::size_t i = 0; i <= k; ++i)
      for (std::size_t j = i + 1; j <= k; ++j) {
        Rational d = abs(model.q[i] - model.q[j]);
        if (d < eps_k) eps_k = d;
      }
    if (model.eps[k] != eps_k) return false;
  }
  return true;
}

}  // namespace monograph
