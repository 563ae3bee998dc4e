#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "monograph/pl_function.hpp"

namespace monograph {

// Axis-aligned rectangle with aspect ratio exactly 5:3; `base` is the
// length of the horizontal side.
struct Rect53 {
  Rational left, bottom;
  Rational base;
  Rational height() const { return base * 3 / 5; }
  Rational right() const { return left + base; }
  Rational top() const { return bottom + height(); }
};

struct Square {
  Rational x0, y0;  // bottom-left corner
  Rational side;
};

// The 5x3 tiling of R by closed squares of side base/5, indexed row-major
// from the bottom-left.
std::vector<Square> squares_of_rect(const Rect53& r);

// Lowest index of a tiling square whose open interior the graph of g does
// not meet (boundary touching counts as avoided), or nullopt. Decided
// exactly in rationals.
std::optional<std::size_t> square_avoidance(const PLFunction& g, const Rect53& r);

struct PorosityRow {
  GraphPoint center;
  Rational r;
  GraphPoint empty_center;  // center of the found empty ball
  Rational q;               // empty-ball radius / r, exact-verified
};

struct PorosityReport {
  std::vector<PorosityRow> rows;
  Rational p;  // min over rows, capped at 1/2
};

// For each (center, radius): grid search (refined `search_resolution`
// times) in doubles for the largest sub-ball of B(center, r) clear of all
// samples, then exact rational verification of the reported ball —
// clearance via squared distances, containment via sqrt bounds. The q
// values are certified lower bounds w.r.t. the sample set.
PorosityReport porosity_estimate(const std::vector<GraphPoint>& samples,
                                 const std::vector<GraphPoint>& centers,
                                 const std::vector<Rational>& radii,
                                 unsigned search_resolution = 3);

struct BoxCount {
  double side;
  std::size_t count;
};

struct BoxDimension {
  double slope;
  std::vector<BoxCount> counts;
};

// Least-squares slope of log(count) against log(1/side) over dyadic box
// sides in [side_min, side_max]. Double precision; an estimator, not a
// certificate.
BoxDimension box_dimension(const std::vector<std::pair<double, double>>& samples,
                           double side_min, double side_max);

// Rational bounds on the polyline length of the graph of f. Square roots
// are bracketed at multiples of 1/denominator per segment.
std::pair<Rational, Rational> graph_length(const PLFunction& f,
                                           const Integer& denominator = Integer(1000000));

}  // namespace monograph
