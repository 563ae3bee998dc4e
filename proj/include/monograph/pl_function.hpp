#pragma once

#include <utility>
#include <vector>

#include "monograph/rational.hpp"

namespace monograph {

struct GraphPoint {
  Rational x;
  Rational y;
};

// Continuous piecewise-linear function on [breakpoints.front(),
// breakpoints.back()], affine between consecutive breakpoints.
// Immutable after construction.
class PLFunction {
 public:
  // Requires strictly increasing breakpoints, equal lengths, length >= 2.
  PLFunction(std::vector<Rational> breakpoints, std::vector<Rational> values);

  const std::vector<Rational>& breakpoints() const { return xs_; }
  const std::vector<Rational>& values() const { return ys_; }
  std::size_t size() const { return xs_.size(); }
  const Rational& domain_lo() const { return xs_.front(); }
  const Rational& domain_hi() const { return xs_.back(); }

  // Index of the segment [xs[i], xs[i+1]] containing x, with the half-open
  // convention (x == xs[i] selects segment i; x == back selects the last
  // segment). Throws std::domain_error outside the domain.
  std::size_t segment_index(const Rational& x) const;

 private:
  std::vector<Rational> xs_;
  std::vector<Rational> ys_;
};

// Exact affine interpolation; stored value at breakpoints.
Rational pl_eval(const PLFunction& f, const Rational& x);

// Exact sup norm of f - g. Requires equal domains.
Rational pl_sup_diff(const PLFunction& f, const PLFunction& g);

// Exact sum of |value increments| over consecutive breakpoints.
Rational pl_total_variation(const PLFunction& f);

// One solution component of f(x) = v: a point when lo == hi, otherwise a
// maximal closed interval on which f is identically v.
struct LevelSet {
  Rational lo;
  Rational hi;
  bool is_interval() const { return lo != hi; }
};

// Sorted, disjoint solution components of f(x) = v.
std::vector<LevelSet> pl_level_crossings(const PLFunction& f, const Rational& v);

// Minimal Jordan pair on the breakpoint mesh: nondecreasing (g, h) with
// f = g - h exactly and Var(f) = (g(last)-g(first)) + (h(last)-h(first)).
std::pair<PLFunction, PLFunction> jordan_decompose(const PLFunction& f);

// Drops interior breakpoints that are collinear with their neighbours.
PLFunction pl_normalize(const PLFunction& f);

// Equality as functions: identical normalized meshes.
bool pl_same_function(const PLFunction& f, const PLFunction& g);

// Pointwise sum / scalar multiple on the merged mesh. Requires equal domains.
PLFunction pl_add(const PLFunction& f, const PLFunction& g);
PLFunction pl_scale(const PLFunction& f, const Rational& c);

// Sorted union of the two breakpoint sets. Requires equal domains.
std::vector<Rational> pl_merged_mesh(const PLFunction& f, const PLFunction& g);

}  // namespace monograph
