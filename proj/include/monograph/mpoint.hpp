#pragma once

#include <optional>
#include <vector>

#include "monograph/evaluator.hpp"

namespace monograph {

// Certified refutation of the two-sided monotone-approach condition at y
// with constant c: points x < y < z inside (y - eps, y + eps) with
//   |f(x) - f(y)| > c * (|f(x) - f(z)| + (z - x))
// where the strict inequality survives the evaluator's error bounds.
struct MpointRefutation {
  Rational x, z;
  Rational quotient_lb;  // certified lower bound on |f(x)-f(y)| / (|f(x)-f(z)| + (z-x))
};

enum class MpointStatus { Refuted, NoneFound, Inconclusive };

struct MpointResult {
  MpointStatus status = MpointStatus::NoneFound;
  std::optional<MpointRefutation> refutation;
};

// Dyadic-mesh search for a certified refutation; extra candidate pairs
// (e.g. from a series-specific witness construction) can be supplied via
// `hints`. Inconclusive means some candidate violated the inequality
// nominally but the evaluator error swallowed the margin.
MpointResult mpoint_refute(const CertifiedEvaluator& f, const Rational& y, const Rational& c,
                           const Rational& eps, unsigned mesh,
                           const std::vector<std::pair<Rational, Rational>>& hints = {});

}  // namespace monograph
