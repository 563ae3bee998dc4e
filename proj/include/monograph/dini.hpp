#pragma once

#include <optional>
#include <vector>

#include "monograph/evaluator.hpp"

namespace monograph {

// One-sided difference-quotient summary over a geometric ladder of probe
// offsets. `upper`/`lower` are the extreme nominal quotients; `certified`
// means every probed quotient's error interval had half-width at most
// kDiniCertTolerance, so the extremes are trustworthy to that tolerance.
struct DiniSide {
  bool probed = false;
  Rational upper, lower;
  Rational h_at_upper, h_at_lower;  // offsets achieving the extremes
  bool certified = false;
};

inline const Rational kDiniCertTolerance = Rational(1, 1 << 20);

struct DiniEstimate {
  Rational x;
  Rational h_min, h_max;
  DiniSide right, left;
};

// Probes offsets h = h_min * 2^i, i = 0..levels-1, on each side that stays
// inside the evaluator's domain. No limit is claimed: these are exact
// statements about finitely many quotients.
DiniEstimate dini_estimate(const CertifiedEvaluator& f, const Rational& x,
                           const Rational& h_min, unsigned levels);

// Fraction of mesh points y in (x, x + delta) whose right quotient is <= t
// (equal-weight surrogate for the density in the approximate Dini
// derivative). Nondecreasing in t.
Rational approx_dini_fraction(const CertifiedEvaluator& f, const Rational& x,
                              const Rational& t, const Rational& delta, unsigned mesh);

// Evidence that the graph oscillates like a knot point at the probed
// scales: on each side, some quotient whose certified interval lies above
// `threshold` and another lying below `-threshold`.
struct KnotQuotient {
  Rational h;        // signed offset
  Rational q_lo, q_hi;
};

struct KnotEvidence {
  Rational x;
  Rational threshold;
  KnotQuotient up_right, down_right, up_left, down_left;
};

std::optional<KnotEvidence> knot_report(const CertifiedEvaluator& f, const Rational& x,
                                        const Rational& threshold, unsigned levels);

}  // namespace monograph
