#include "monograph/witness.hpp"

#include "monograph/pc.hpp"

#include <algorithm>
#include <vector>

namespace monograph {

namespace {

Rational dist_sq(const Rational& x0, const Rational& y0, const Rational& x1,
                 const Rational& y1) {
  Rational dx = x1 - x0;
  Rational dy = y1 - y0;
  return dx * dx + dy * dy;
}

struct Candidate {
  Rational x, y, z;
  WitnessSide side;
  Rational ratio_sq;
  bool valid = false;
};

void consider(const PLFunction& f, const Rational& x, const Rational& y,
              const Rational& z, Candidate& best) {
  if (!(x < y && y < z)) return;
  Rational fx = pl_eval(f, x), fy = pl_eval(f, y), fz = pl_eval(f, z);
  Rational dxz = dist_sq(x, fx, z, fz);
  if (dxz == 0) return;
  Rational r11 = dist_sq(x, fx, y, fy) / dxz;
  Rational r12 = dist_sq(z, fz, y, fy) / dxz;
  if (!best.valid || r11 > best.ratio_sq) {
    best = {x, y, z, WitnessSide::L11, r11, true};
  }
  if (r12 > best.ratio_sq) {
    best = {x, y, z, WitnessSide::L12, r12, true};
  }
}

// Breakpoint-anchored search. Full triple enumeration is cubic, so for
// large meshes we scan a sliding window around each middle point (the
// worst configurations seen in practice are between near neighbours) plus
// a coarse global sample to catch wide ones.
Candidate search_breakpoints(const PLFunction& f, unsigned budget) {
  const auto& xs = f.breakpoints();
  std::size_t n = xs.size();
  Candidate best;
  if (n < 3) return best;

  if (n <= 64) {
    for (std::size_t i = 0; i + 2 < n; ++i)
      for (std::size_t j = i + 1; j + 1 < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k) consider(f, xs[i], xs[j], xs[k], best);
    return best;
  }

  std::size_t w = std::max<std::size_t>(4, std::min<std::size_t>(32, budget));
  for (std::size_t j = 1; j + 1 < n; ++j) {
    std::size_t lo = (j > w) ? j - w : 0;
    std::size_t hi = std::min(n - 1, j + w);
    for (std::size_t i = lo; i < j; ++i)
      for (std::size_t k = j + 1; k <= hi; ++k) consider(f, xs[i], xs[j], xs[k], best);
  }

  std::size_t stride = std::max<std::size_t>(1, n / 24);
  std::vector<std::size_t> sample;
  for (std::size_t i = 0; i < n; i += stride) sample.push_back(i);
  if (sample.back() != n - 1) sample.push_back(n - 1);
  for (std::size_t a = 0; a + 2 < sample.size(); ++a)
    for (std::size_t b = a + 1; b + 1 < sample.size(); ++b)
      for (std::size_t c = b + 1; c < sample.size(); ++c)
        consider(f, xs[sample[a]], xs[sample[b]], xs[sample[c]], best);
  return best;
}

// Local improvement: replace each coordinate of the best triple by the
// midpoints toward its neighbours and keep the best combination.
void refine(const PLFunction& f, Candidate& best, unsigned budget) {
  if (!best.valid) return;
  for (unsigned round = 0; round < budget; ++round) {
    Candidate before = best;
    Rational half = Rational(1, 2);
    Rational cand_x[3] = {before.x, (before.x + before.y) * half, before.x};
    Rational cand_y[3] = {before.y, (before.x + before.y) * half,
                          (before.y + before.z) * half};
    Rational cand_z[3] = {before.z, (before.y + before.z) * half, before.z};
    for (const Rational& x : cand_x)
      for (const Rational& y : cand_y)
        for (const Rational& z : cand_z) consider(f, x, y, z, best);
    if (best.ratio_sq == before.ratio_sq) break;
  }
}

const Integer kDisplayDen = Integer(1000000000);

}  // namespace

std::optional<WitnessTriple> refute_monotone(const PLFunction& f, const Rational& c,
                                             unsigned budget) {
  if (c <= 0) throw std::invalid_argument("refute_monotone requires c > 0");
  Candidate best = search_breakpoints(f, budget);
  refine(f, best, budget);
  if (!best.valid || best.ratio_sq <= c * c) return std::nullopt;
  return WitnessTriple{best.x, best.y, best.z, best.side, best.ratio_sq,
                       sqrt_lower_bound(best.ratio_sq, kDisplayDen)};
}

MonotonicityBracket monotonicity_bracket(const PLFunction& f, unsigned budget) {
  MonotonicityBracket out;
  out.c_hi = least_pc(f) + 1;
  Candidate best = search_breakpoints(f, budget);
  refine(f, best, budget);
  if (best.valid && best.ratio_sq > 0) {
    out.c_lo = sqrt_lower_bound(best.ratio_sq, kDisplayDen);
    out.witness = WitnessTriple{best.x,        best.y, best.z, best.side,
                                best.ratio_sq, out.c_lo};
  } else {
    out.c_lo = 0;
  }
  if (out.c_lo > out.c_hi) out.c_lo = out.c_hi;
  return out;
}

}  // namespace monograph
