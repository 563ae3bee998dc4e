#pragma once

#include <optional>

#include "monograph/mzv.hpp"

namespace monograph {

// Classification of a point against the sloped-closure sets of the
// subdivision scheme: InBUpTo(depth) when the block containing x stays
// sloped (or x sits on a block boundary) through every level <= depth;
// NotInB once x is interior to a flat block, recorded with the first such
// level and block. NotInB is sticky: a witness at level n stands even if
// deeper blocks are sloped again.
enum class BStatus { InBUpTo, NotInB };

struct PointClass {
  Rational x;
  int depth = 0;
  BStatus status = BStatus::InBUpTo;
  int witness_level = -1;
  std::optional<MzvBlock> witness_block;
};

PointClass mzv_point_class(const Rational& x, int depth);

// Two probe points y3 < y4 < x at the scales dictated by the witness flat
// block, whose difference quotients against f(x) are forced apart by the
// peak the block grows two levels down. All quotient bounds are certified
// intervals from the limit evaluator.
struct OscillationCertificate {
  Rational x;
  Rational y3, y4;
  Rational fy3, fy4;              // exact breakpoint values
  Rational q3_lo, q3_hi, q4_lo, q4_hi;
  Rational gap_lb;                // certified lower bound on |q3 - q4|
  bool certified = false;         // gap_lb >= 1/30
};

// Requires a NotInB classification; returns nullopt otherwise.
std::optional<OscillationCertificate> mzv_oscillation_certificate(const PointClass& pc,
                                                                  int eval_depth = 60);

}  // namespace monograph
