#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "monograph/pl_function.hpp"

namespace monograph {

inline constexpr int kMzvDefaultLevelCap = 8;

struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One level of the five-point subdivision scheme on [0,1]: a piecewise-linear
// approximant together with its level number.
struct MzvLevel {
  int level = 0;
  PLFunction fn;
};

// Level 0: identically zero on {0, 1}.
MzvLevel mzv_level0();

// One refinement step. Flat blocks gain an interior peak of height
// length/6 on the middle fifth; sloped blocks are flattened across the
// middle three fifths at the endpoint midvalue.
MzvLevel mzv_refine(const MzvLevel& level);

// Iterates mzv_refine n times from level 0. Throws ResourceLimitError when
// n exceeds the cap.
MzvLevel mzv_approximant(int n, int level_cap = kMzvDefaultLevelCap);

// f_n(x) together with the certified limit bound |f(x) - f_n(x)| <= 2^(1-n).
std::pair<Rational, Rational> mzv_eval(const MzvLevel& level, const Rational& x);

// One block [a, b] of some level's subdivision, with the approximant values
// at its endpoints.
struct MzvBlock {
  int level = 0;
  Rational a, b;
  Rational fa, fb;
  bool flat() const { return fa == fb; }
};

// Blocks containing x at levels 0..depth, under the half-open convention
// (a breakpoint belongs to the block on its right; x = 1 to the last block).
// O(depth) time and memory, independent of the global mesh size.
std::vector<MzvBlock> mzv_block_chain(const Rational& x, int depth);

// f_depth(x) by local block descent, with error bound 2^(1-depth) against the
// limit function; the bound is 0 when x is a breakpoint of the chain (values
// at surviving breakpoints are preserved by refinement).
std::pair<Rational, Rational> mzv_limit_eval(const Rational& x, int depth);

// The canonical steep chain: for i = 1..count, a breakpoint pair [a, b] of
// level i on which the slope of f_i is exactly (5/6)*(5/2)^(i-1).
struct MzvSlopePair {
  int level;
  Rational a, b;
  Rational slope;  // |f_i(b) - f_i(a)| / (b - a)
};
std::vector<MzvSlopePair> mzv_slope_chain(int count);

}  // namespace monograph
