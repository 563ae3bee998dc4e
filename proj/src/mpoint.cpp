#include "monograph/mpoint.hpp"

namespace monograph {

MpointResult mpoint_refute(const CertifiedEvaluator& f, const Rational& y, const Rational& c,
                           const Rational& eps, unsigned mesh,
                           const std::vector<std::pair<Rational, Rational>>& hints) {
  if (eps <= 0 || c <= 0) throw std::invalid_argument("mpoint_refute requires eps, c > 0");

  std::vector<std::pair<Rational, Rational>> pairs = hints;
  for (unsigned i = 1; i <= mesh; ++i) {
    for (unsigned j = (i > 2) ? i - 2 : 1; j <= i + 2 && j <= mesh; ++j) {
      pairs.emplace_back(y - eps * pow2(-static_cast<long>(i)),
                         y + eps * pow2(-static_cast<long>(j)));
    }
  }

  CertifiedValue fy = f.at(y);
  MpointResult out;
  for (const auto& [x, z] : pairs) {
    if (!(x < y && y < z)) continue;
    if (y - x >= eps || z - y >= eps) continue;
    if (!f.contains(x) || !f.contains(z)) continue;
    CertifiedValue fx = f.at(x);
    CertifiedValue fz = f.at(z);
    Rational gap = abs(fx.value - fy.value);
    Rational base = abs(fx.value - fz.value);
    Rational width = z - x;
    if (gap <= c * (base + width)) continue;  // not even nominally violated
    // Certify against the error bounds: worst case shrinks the numerator
    // and grows the denominator.
    Rational lhs_lo = gap - fx.error - fy.error;
    Rational rhs_hi = base + fx.error + fz.error + width;
    if (lhs_lo > c * rhs_hi) {
      Rational q = lhs_lo / rhs_hi;
      if (!out.refutation || q > out.refutation->quotient_lb) {
        out.status = MpointStatus::Refuted;
        out.refutation = MpointRefutation{x, z, q};
      }
    } else if (out.status == MpointStatus::NoneFound) {
      out.status = MpointStatus::Inconclusive;
    }
  }
  return out;
}

}  // namespace monograph
