#include "monograph/dini.hpp"

namespace monograph {

namespace {

struct QuotientSample {
  Rational h;  // signed offset, x + h probed
  Rational value;
  Rational half_width;
};

std::vector<QuotientSample> side_quotients(const CertifiedEvaluator& f, const Rational& x,
                                           const CertifiedValue& fx, const Rational& h_min,
                                           unsigned levels, int sign) {
  std::vector<QuotientSample> out;
  Rational h = h_min;
  for (unsigned i = 0; i < levels; ++i, h *= 2) {
    Rational offset = sign * h;
    if (!f.contains(x + offset)) continue;
    CertifiedValue fp = f.at(x + offset);
    Rational q = (fp.value - fx.value) / offset;
    Rational hw = (fp.error + fx.error) / h;
    out.push_back({offset, q, hw});
  }
  return out;
}

DiniSide summarize(const std::vector<QuotientSample>& qs) {
  DiniSide side;
  if (qs.empty()) return side;
  side.probed = true;
  side.certified = true;
  for (const QuotientSample& s : qs)
    if (s.half_width > kDiniCertTolerance) side.certified = false;
  side.upper = qs.front().value;
  side.lower = qs.front().value;
  side.h_at_upper = qs.front().h;
  side.h_at_lower = qs.front().h;
  for (const QuotientSample& s : qs) {
    if (s.value > side.upper) {
      side.upper = s.value;
      side.h_at_upper = s.h;
    }
    if (s.value < side.lower) {
      side.lower = s.value;
      side.h_at_lower = s.h;
    }
  }
  return side;
}

}  // namespace

DiniEstimate dini_estimate(const CertifiedEvaluator& f, const Rational& x,
                           const Rational& h_min, unsigned levels) {
  if (h_min <= 0 || levels == 0) throw std::invalid_argument("dini_estimate needs h_min > 0, levels > 0");
  if (!f.contains(x)) throw std::domain_error("dini_estimate point outside domain");
  CertifiedValue fx = f.at(x);
  DiniEstimate est;
  est.x = x;
  est.h_min = h_min;
  est.h_max = h_min * pow2(static_cast<long>(levels) - 1);
  est.right = summarize(side_quotients(f, x, fx, h_min, levels, +1));
  est.left = summarize(side_quotients(f, x, fx, h_min, levels, -1));
  return est;
}

Rational approx_dini_fraction(const CertifiedEvaluator& f, const Rational& x,
                              const Rational& t, const Rational& delta, unsigned mesh) {
  if (delta <= 0 || mesh == 0) throw std::invalid_argument("approx_dini needs delta > 0, mesh > 0");
  CertifiedValue fx = f.at(x);
  unsigned hits = 0, total = 0;
  for (unsigned k = 1; k <= mesh; ++k) {
    Rational y = x + delta * Rational(static_cast<long>(k), static_cast<long>(mesh) + 1);
    if (!f.contains(y)) continue;
    ++total;
    Rational q = (f.at(y).value - fx.value) / (y - x);
    if (q <= t) ++hits;
  }
  if (total == 0) return 0;
  Rational frac(hits, total);
  frac.canonicalize();
  return frac;
}

std::optional<KnotEvidence> knot_report(const CertifiedEvaluator& f, const Rational& x,
                                        const Rational& threshold, unsigned levels) {
  if (threshold <= 0) throw std::invalid_argument("knot threshold must be positive");
  CertifiedValue fx = f.at(x);
  KnotEvidence ev;
  ev.x = x;
  ev.threshold = threshold;
  bool found_ur = false, found_dr = false, found_ul = false, found_dl = false;
  Rational h = Rational(1, 2);
  for (unsigned i = 1; i <= levels; ++i, h /= 2) {
    for (int sign : {+1, -1}) {
      Rational offset = sign * h;
      if (!f.contains(x + offset)) continue;
      CertifiedValue fp = f.at(x + offset);
      Rational q = (fp.value - fx.value) / offset;
      Rational hw = (fp.error + fx.error) / h;
      KnotQuotient kq{offset, q - hw, q + hw};
      if (sign > 0) {
        if (!found_ur && kq.q_lo > threshold) { ev.up_right = kq; found_ur = true; }
        if (!found_dr && kq.q_hi < -threshold) { ev.down_right = kq; found_dr = true; }
      } else {
        if (!found_ul && kq.q_lo > threshold) { ev.up_left = kq; found_ul = true; }
        if (!found_dl && kq.q_hi < -threshold) { ev.down_left = kq; found_dl = true; }
      }
    }
    if (found_ur && found_dr && found_ul && found_dl) return ev;
  }
  return std::nullopt;
}

}  // namespace monograph
