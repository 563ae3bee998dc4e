#include "monograph/point_class.hpp"

#include <algorithm>

namespace monograph {

PointClass mzv_point_class(const Rational& x, int depth) {
  if (depth < 0) throw std::invalid_argument("depth must be nonnegative");
  auto chain = mzv_block_chain(x, depth);
  PointClass out;
  out.x = x;
  out.depth = depth;
  for (int n = 1; n <= depth; ++n) {
    const MzvBlock& blk = chain[static_cast<std::size_t>(n)];
    // Boundary points stay in the closure of a sloped neighbour, so only a
    // strict interior position inside a flat block is a witness.
    if (blk.flat() && blk.a < x && x < blk.b) {
      out.status = BStatus::NotInB;
      out.witness_level = n;
      out.witness_block = blk;
      break;
    }
  }
  return out;
}

std::optional<OscillationCertificate> mzv_oscillation_certificate(const PointClass& pc,
                                                                  int eval_depth) {
  if (pc.status != BStatus::NotInB || !pc.witness_block) return std::nullopt;
  const Rational& x = pc.x;

  // Descend into the leftmost (flat) child while x still lies left of the
  // first fifth, so that the final block has x at distance >= length/5
  // from its left edge. Terminates because x > a.
  MzvBlock blk = *pc.witness_block;
  for (int guard = 0;; ++guard) {
    Rational len = blk.b - blk.a;
    if (x >= blk.a + len / 5) break;
    if (guard > 100000) throw ResourceLimitError("oscillation descent did not terminate");
    blk = MzvBlock{blk.level + 1, blk.a, blk.a + len / 5, blk.fa, blk.fa};
  }

  Rational len = blk.b - blk.a;
  const Rational& v = blk.fa;
  OscillationCertificate cert;
  cert.x = x;
  // Two levels below, the first fifth [a, a+len/5] grows a peak of height
  // len/30 on its middle fifth; its right top corner and the return to the
  // base line give the probe pair.
  cert.y3 = blk.a + 3 * len / 25;
  cert.y4 = blk.a + 4 * len / 25;
  cert.fy3 = v + len / 30;
  cert.fy4 = v;

  Rational d3 = x - cert.y3;
  Rational d4 = x - cert.y4;
  // Deepen the evaluation until the error is negligible against the probe
  // distances (the block may sit many levels down, so a fixed depth is not
  // enough in general).
  int depth = std::max(eval_depth, blk.level + 8);
  for (int tries = 0; tries < 16; ++tries) {
    auto [fx, err] = mzv_limit_eval(x, depth);
    cert.q3_lo = (fx - cert.fy3 - err) / d3;
    cert.q3_hi = (fx - cert.fy3 + err) / d3;
    cert.q4_lo = (fx - cert.fy4 - err) / d4;
    cert.q4_hi = (fx - cert.fy4 + err) / d4;
    Rational diff_lo = cert.q3_lo - cert.q4_hi;
    Rational diff_hi = cert.q3_hi - cert.q4_lo;
    if (diff_lo > 0) {
      cert.gap_lb = diff_lo;
    } else if (diff_hi < 0) {
      cert.gap_lb = -diff_hi;
    } else {
      cert.gap_lb = 0;
    }
    cert.certified = cert.gap_lb >= Rational(1, 30);
    if (cert.certified || err == 0 || 4 * err < d4 * cert.gap_lb) break;
    depth *= 2;
  }
  return cert;
}

}  // namespace monograph
