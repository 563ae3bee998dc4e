#include <doctest.h>

#include <random>

#include "monograph/mzv.hpp"

using namespace monograph;

TEST_CASE("level 1 has the canonical six points") {
  MzvLevel l1 = mzv_approximant(1);
  std::vector<Rational> xs{Rational(0), Rational(1, 5), Rational(2, 5),
                           Rational(3, 5), Rational(4, 5), Rational(1)};
  std::vector<Rational> ys{Rational(0), Rational(0), Rational(1, 6),
                           Rational(1, 6), Rational(0), Rational(0)};
  CHECK(l1.fn.breakpoints() == xs);
  CHECK(l1.fn.values() == ys);
}

TEST_CASE("interval counts follow the 3-flat/2-sloped recursion") {
  // r_{n+1} = 5 r_n - (sloped blocks), with counts (flat, sloped) evolving
  // as flat -> 3 flat + 2 sloped, sloped -> 1 flat + 2 sloped.
  std::vector<std::size_t> expected{1, 5, 21, 85, 341, 1365};
  MzvLevel cur = mzv_level0();
  for (std::size_t n = 0; n < expected.size(); ++n) {
    CHECK(cur.fn.size() - 1 == expected[n]);
    if (n + 1 < expected.size()) cur = mzv_refine(cur);
  }
}

TEST_CASE("sloped-block refinement keeps endpoint values and midvalue plateau") {
  MzvLevel l2 = mzv_approximant(2);
  // The level-1 rise [1/5, 2/5] refines to 1/5, 6/25, 9/25, 2/5 with the
  // plateau at the midvalue 1/12.
  CHECK(pl_eval(l2.fn, Rational(1, 5)) == 0);
  CHECK(pl_eval(l2.fn, Rational(6, 25)) == Rational(1, 12));
  CHECK(pl_eval(l2.fn, Rational(9, 25)) == Rational(1, 12));
  CHECK(pl_eval(l2.fn, Rational(2, 5)) == Rational(1, 6));
}

TEST_CASE("variation grows by exactly 1/5 per level") {
  MzvLevel cur = mzv_approximant(1);
  Rational var = pl_total_variation(cur.fn);
  CHECK(var == Rational(1, 3));
  for (int n = 2; n <= 6; ++n) {
    cur = mzv_refine(cur);
    Rational next = pl_total_variation(cur.fn);
    CHECK(next - var == Rational(1, 5));
    var = next;
  }
}

TEST_CASE("refinements are uniformly Cauchy at rate 2^-n") {
  MzvLevel cur = mzv_level0();
  for (int n = 0; n <= 5; ++n) {
    MzvLevel next = mzv_refine(cur);
    CHECK(pl_sup_diff(next.fn, cur.fn) <= pow2(-n));
    cur = std::move(next);
  }
  // And the level-0 to level-1 gap is exactly the first peak height.
  CHECK(pl_sup_diff(mzv_approximant(1).fn, mzv_level0().fn) == Rational(1, 6));
}

TEST_CASE("every segment slope is zero or at least 5/6 in magnitude") {
  MzvLevel l4 = mzv_approximant(4);
  const auto& xs = l4.fn.breakpoints();
  const auto& ys = l4.fn.values();
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    Rational slope = abs(ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i]);
    CHECK((slope == 0 || slope >= Rational(5, 6)));
  }
}

TEST_CASE("level crossings of the first approximant at height 1/12") {
  auto comps = pl_level_crossings(mzv_approximant(1).fn, Rational(1, 12));
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].lo == Rational(3, 10));
  CHECK(comps[1].lo == Rational(7, 10));
}

TEST_CASE("block-chain descent agrees with the global mesh") {
  MzvLevel l6 = mzv_approximant(6);
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 50; ++iter) {
    Rational x(static_cast<unsigned long>(rng() % 100000), 100000u);
    x.canonicalize();
    auto [v, err] = mzv_limit_eval(x, 6);
    CHECK(v == pl_eval(l6.fn, x));
    // Chain-boundary hits are exact; everything else carries the level bound.
    CHECK((err == pow2(-5) || err == 0));
  }
  // Breakpoints of the chain evaluate with zero error.
  auto [v0, e0] = mzv_limit_eval(Rational(2, 5), 1);
  CHECK(v0 == Rational(1, 6));
  CHECK(e0 == 0);
  auto [v1, e1] = mzv_limit_eval(Rational(1), 9);
  CHECK(v1 == 0);
  CHECK(e1 == 0);
}

TEST_CASE("deep descent stays cheap and consistent across depths") {
  Rational x(123456789, 987654321);
  x.canonicalize();
  auto [v40, e40] = mzv_limit_eval(x, 40);
  auto [v60, e60] = mzv_limit_eval(x, 60);
  CHECK(abs(v60 - v40) <= e40 + e60);
  CHECK(e60 < e40);
}

TEST_CASE("steep chain slopes follow the 5/2 law") {
  auto chain = mzv_slope_chain(6);
  Rational expect(5, 6);
  for (const auto& pair : chain) {
    CHECK(pair.slope == expect);
    expect *= Rational(5, 2);
  }
}

TEST_CASE("level cap guards the exact construction") {
  CHECK_THROWS_AS(mzv_approximant(9), ResourceLimitError);
  CHECK_THROWS_AS(mzv_approximant(-1), std::invalid_argument);
}
