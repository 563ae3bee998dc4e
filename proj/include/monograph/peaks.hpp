#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "monograph/geometry.hpp"
#include "monograph/pl_function.hpp"

namespace monograph {

// Triangular bump of height 1 supported on [-1, 1].
Rational peak_norm(const Rational& t);

// Deterministic enumeration of distinct rationals in [0, 1]: 0, 1, then
// breadth-first mediants (1/2; 1/3, 2/3; 1/4, 2/5, 3/5, 3/4; ...).
std::vector<Rational> rational_enumeration(std::size_t count);

// Finite peak-sum model: g_n(x) = sum_{i<=n} a_i * peak((x - q_i) / b_i).
// delta[n] (n >= 1) is a certified square-clearance margin of g_{n-1} at
// rectangle scale eps[n]; a_n < delta[n] keeps the clearance positive for
// g_n as well. delta[0] and eps[0] are unused sentinels (0).
struct PeakSumModel {
  std::size_t peaks = 0;  // N; sequences have N+1 entries
  std::vector<Rational> q, a, b, s, delta, eps;
};

struct MarginOptions {
  int max_depth = 48;
  long node_budget = 400000;
};

struct MarginNotCertified : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Certified delta > 0 such that every 5:3 rectangle with base length in
// [eps_len, 5] and center within the graph's bounding box inflated by 5
// has a tiling square at distance >= delta from the graph of g.
// Branch-and-bound over (center_x, center_y, base); squares are verified
// through exact rational segment/box distances. The result is a lower
// bound, not the optimum. Throws MarginNotCertified when the search cannot
// close within the options' budget.
Rational peak_margin(const PLFunction& g, const Rational& eps_len,
                     const MarginOptions& opts = {});

// Builds the N-peak model: a_0 = 1/4, b_0 = 1/16; for n >= 1,
// a_n = min(2^-n / n, delta_n / 2) and s_n = 2^(n+1) * sum_{i<n} s_i
// (factor-2 headroom over the required growth).
PeakSumModel peak_build(std::size_t peaks, const MarginOptions& opts = {});

// Exact partial sum g_upto as a PLFunction on [0, 1].
PLFunction peak_pl(const PeakSumModel& model, std::size_t upto);

// g_upto(x) with the error bound sum_{n > upto <= N} a_n + 2^-N for the
// untruncated function.
std::pair<Rational, Rational> peak_eval(const PeakSumModel& model, const Rational& x,
                                        std::size_t upto);

// Independent re-check of every model invariant.
bool peak_model_invariants_ok(const PeakSumModel& model);

}  // namespace monograph
