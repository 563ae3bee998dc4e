#pragma once

#include <optional>

#include "monograph/pl_function.hpp"

namespace monograph {

enum class WitnessSide { L11, L12 };

// Refutation of c-monotonicity of the graph: x < y < z with
//   dist(p(x), p(y)) > c * dist(p(x), p(z))   (side L11), or
//   dist(p(z), p(y)) > c * dist(p(x), p(z))   (side L12),
// where p(t) = (t, f(t)). All comparisons are on squared rational
// distances; ratio_lb is a rational lower bound on the achieved ratio.
struct WitnessTriple {
  Rational x, y, z;
  WitnessSide side = WitnessSide::L11;
  Rational ratio_sq;  // exact squared achieved ratio
  Rational ratio_lb;  // floor-sqrt display value
};

// Searches breakpoint-anchored triples (windowed plus a coarse global
// sample when the mesh is large), then refines the best candidate by
// midpoint subdivision up to `budget` rounds. A returned witness is exact;
// absence of a witness does not prove c-monotonicity.
std::optional<WitnessTriple> refute_monotone(const PLFunction& f, const Rational& c,
                                             unsigned budget);

struct MonotonicityBracket {
  Rational c_lo;  // witnessed: some c' < true constant for every c' < c_lo
  Rational c_hi;  // least_pc(f) + 1; graph is symmetrically c_hi-monotone
  std::optional<WitnessTriple> witness;
};

MonotonicityBracket monotonicity_bracket(const PLFunction& f, unsigned budget);

}  // namespace monograph
