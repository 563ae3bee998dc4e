#include "monograph/pl_function.hpp"

#include <algorithm>
#include <stdexcept>

namespace monograph {

PLFunction::PLFunction(std::vector<Rational> breakpoints, std::vector<Rational> values)
    : xs_(std::move(breakpoints)), ys_(std::move(values)) {
  if (xs_.size() != ys_.size())
    throw std::invalid_argument("PLFunction: breakpoints/values length mismatch");
  if (xs_.size() < 2) throw std::invalid_argument("PLFunction: need at least 2 breakpoints");
  for (std::size_t i = 0; i + 1 < xs_.size(); ++i)
    if (!(xs_[i] < xs_[i + 1]))
      throw std::invalid_argument("PLFunction: breakpoints not strictly increasing");
}

std::size_t PLFunction::segment_index(const Rational& x) const {
  if (x < xs_.front() || x > xs_.back())
    throw std::domain_error("PLFunction: point outside domain");
  // First breakpoint strictly greater than x, minus one.
  auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
  std::size_t i = static_cast<std::size_t>(it - xs_.begin());
  if (i == xs_.size()) return xs_.size() - 2;  // x == back
  return i - 1;
}

Rational pl_eval(const PLFunction& f, const Rational& x) {
  std::size_t i = f.segment_index(x);
  const auto& xs = f.breakpoints();
  const auto& ys = f.values();
  if (x == xs[i]) return ys[i];
  return ys[i] + (ys[i + 1] - ys[i]) * (x - xs[i]) / (xs[i + 1] - xs[i]);
}

std::vector<Rational> pl_merged_mesh(const PLFunction& f, const PLFunction& g) {
  if (f.domain_lo() != g.domain_lo() || f.domain_hi() != g.domain_hi())
    throw std::invalid_argument("pl functions have mismatched domains");
  std::vector<Rational> mesh;
  mesh.reserve(f.size() + g.size());
  std::merge(f.breakpoints().begin(), f.breakpoints().end(), g.breakpoints().begin(),
             g.breakpoints().end(), std::back_inserter(mesh));
  mesh.erase(std::unique(mesh.begin(), mesh.end()), mesh.end());
  return mesh;
}

namespace {

// Streams values of f along an ascending point sequence in O(n + size).
class SegmentCursor {
 public:
  explicit SegmentCursor(const PLFunction& f) : f_(f) {}

  Rational value_at(const Rational& x) {
    const auto& xs = f_.breakpoints();
    const auto& ys = f_.values();
    while (i_ + 2 < xs.size() && xs[i_ + 1] <= x) ++i_;
    if (x == xs[i_]) return ys[i_];
    return ys[i_] + (ys[i_ + 1] - ys[i_]) * (x - xs[i_]) / (xs[i_ + 1] - xs[i_]);
  }

 private:
  const PLFunction& f_;
  std::size_t i_ = 0;
};

}  // namespace

Rational pl_sup_diff(const PLFunction& f, const PLFunction& g) {
  std::vector<Rational> mesh = pl_merged_mesh(f, g);
  SegmentCursor cf(f), cg(g);
  Rational best = 0;
  for (const Rational& x : mesh) {
    Rational d = abs(cf.value_at(x) - cg.value_at(x));
    if (d > best) best = d;
  }
  return best;
}

Rational pl_total_variation(const PLFunction& f) {
  Rational var = 0;
  const auto& ys = f.values();
  for (std::size_t i = 0; i + 1 < ys.size(); ++i) var += abs(ys[i + 1] - ys[i]);
  return var;
}

std::vector<LevelSet> pl_level_crossings(const PLFunction& f, const Rational& v) {
  std::vector<LevelSet> out;
  const auto& xs = f.breakpoints();
  const auto& ys = f.values();
  auto push = [&out](const Rational& lo, const Rational& hi) {
    if (!out.empty() && out.back().hi == lo) {
      out.back().hi = hi;  // extend adjacent component
      return;
    }
    out.push_back({lo, hi});
  };
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    const Rational& y0 = ys[i];
    const Rational& y1 = ys[i + 1];
    if (y0 == v && y1 == v) {
      push(xs[i], xs[i + 1]);
    } else if ((y0 <= v && v <= y1) || (y1 <= v && v <= y0)) {
      Rational x = xs[i] + (v - y0) * (xs[i + 1] - xs[i]) / (y1 - y0);
      push(x, x);
    }
  }
  return out;
}

std::pair<PLFunction, PLFunction> jordan_decompose(const PLFunction& f) {
  const auto& xs = f.breakpoints();
  const auto& ys = f.values();
  std::vector<Rational> up(xs.size()), down(xs.size());
  up[0] = ys[0];
  down[0] = 0;
  for (std::size_t i = 1; i < xs.size(); ++i) {
    Rational d = ys[i] - ys[i - 1];
    up[i] = up[i - 1] + (d > 0 ? d : Rational(0));
    down[i] = down[i - 1] + (d < 0 ? -d : Rational(0));
  }
  return {PLFunction(xs, std::move(up)), PLFunction(xs, std::move(down))};
}

PLFunction pl_normalize(const PLFunction& f) {
  const auto& xs = f.breakpoints();
  const auto& ys = f.values();
  std::vector<Rational> nx{xs.front()}, ny{ys.front()};
  for (std::size_t i = 1; i + 1 < xs.size(); ++i) {
    // Keep xs[i] unless (prev, this, next) are collinear.
    const Rational& px = nx.back();
    const Rational& py = ny.back();
    Rational lhs = (ys[i] - py) * (xs[i + 1] - px);
    Rational rhs = (ys[i + 1] - py) * (xs[i] - px);
    if (lhs != rhs) {
      nx.push_back(xs[i]);
      ny.push_back(ys[i]);
    }
  }
  nx.push_back(xs.back());
  ny.push_back(ys.back());
  return PLFunction(std::move(nx), std::move(ny));
}

bool pl_same_function(const PLFunction& f, const PLFunction& g) {
  PLFunction a = pl_normalize(f);
  PLFunction b = pl_normalize(g);
  return a.breakpoints() == b.breakpoints() && a.values() == b.values();
}

PLFunction pl_add(const PLFunction& f, const PLFunction& g) {
  std::vector<Rational> mesh = pl_merged_mesh(f, g);
  SegmentCursor cf(f), cg(g);
  std::vector<Rational> vals;
  vals.reserve(mesh.size());
  for (const Rational& x : mesh) vals.push_back(cf.value_at(x) + cg.value_at(x));
  return PLFunction(std::move(mesh), std::move(vals));
}

PLFunction pl_scale(const PLFunction& f, const Rational& c) {
  std::vector<Rational> vals;
  vals.reserve(f.size());
  for (const Rational& y : f.values()) vals.push_back(y * c);
  return PLFunction(f.breakpoints(), std::move(vals));
}

}  // namespace monograph
