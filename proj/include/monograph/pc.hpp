#pragma once

#include <optional>

#include "monograph/pl_function.hpp"

namespace monograph {

// Evidence refuting condition P_c: f(x) = f(y), x < t < y and
// |f(x) - f(t)| > c * (y - x), all exact.
struct PcWitness {
  Rational x, t, y;
};

struct PcCertificate {
  bool pass = true;
  Rational c;
  std::optional<PcWitness> witness;  // set on Fail
};

// Exact decision of condition P_c on a piecewise-linear function. The level
// sweep enumerates, for every breakpoint t and every critical level v (a
// breakpoint value), the nearest level-v crossings bracketing t; both
// crossing positions are affine in v between critical levels, so the worst
// oscillation/width ratio is attained at the enumerated levels. Flat
// segments at level v contribute their tightest endpoints.
PcCertificate check_pc(const PLFunction& f, const Rational& c);

// Exact minimal c for which P_c holds (0 for functions with no bracketed
// oscillation, e.g. monotone ones).
Rational least_pc(const PLFunction& f);

}  // namespace monograph
