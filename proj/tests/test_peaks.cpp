#include <doctest.h>

#include <random>

#include "monograph/peaks.hpp"

using namespace monograph;

TEST_CASE("triangular bump") {
  CHECK(peak_norm(Rational(0)) == 1);
  CHECK(peak_norm(Rational(1, 2)) == Rational(1, 2));
  CHECK(peak_norm(Rational(-1, 2)) == Rational(1, 2));
  CHECK(peak_norm(Rational(1)) == 0);
  CHECK(peak_norm(Rational(-3)) == 0);
}

TEST_CASE("rational enumeration starts with the endpoints then mediants") {
  auto qs = rational_enumeration(9);
  std::vector<Rational> expect{Rational(0),    Rational(1),    Rational(1, 2),
                               Rational(1, 3), Rational(2, 3), Rational(1, 4),
                               Rational(2, 5), Rational(3, 5), Rational(3, 4)};
  CHECK(qs == expect);
  for (std::size_t i = 0; i < qs.size(); ++i) {
    CHECK(qs[i] >= 0);
    CHECK(qs[i] <= 1);
    for (std::size_t j = i + 1; j < qs.size(); ++j) CHECK(qs[i] != qs[j]);
  }
  CHECK(rational_enumeration(1).size() == 1);
}

TEST_CASE("two-peak model satisfies every stated invariant") {
  PeakSumModel m = peak_build(2);
  CHECK(peak_model_invariants_ok(m));
  REQUIRE(m.peaks == 2);
  REQUIRE(m.q.size() == 3);
  CHECK(m.q == rational_enumeration(3));
  CHECK(m.a[0] == Rational(1, 4));
  CHECK(m.b[0] == Rational(1, 16));
  CHECK(m.s[0] == 4);
  CHECK(m.s[1] == 16);
  CHECK(m.s[2] == 160);
  CHECK(m.eps[1] == 1);
  CHECK(m.eps[2] == Rational(1, 2));
  for (std::size_t n = 1; n <= 2; ++n) {
    CHECK(m.delta[n] > 0);
    CHECK(m.a[n] <= pow2(-static_cast<long>(n)) / static_cast<long>(n));
    CHECK(m.a[n] <= m.delta[n] / 2);
    CHECK(m.b[n] == m.a[n] / m.s[n]);
  }
}

TEST_CASE("partial sums evaluate the bumps exactly") {
  PeakSumModel m = peak_build(1);
  PLFunction g0 = peak_pl(m, 0);
  CHECK(pl_eval(g0, Rational(0)) == Rational(1, 4));
  CHECK(pl_eval(g0, Rational(1, 32)) == Rational(1, 8));
  CHECK(pl_eval(g0, Rational(1, 16)) == 0);
  CHECK(pl_eval(g0, Rational(1, 2)) == 0);

  PLFunction g1 = peak_pl(m, 1);
  CHECK(pl_eval(g1, Rational(1)) == m.a[1]);
  CHECK(pl_eval(g1, Rational(1) - m.b[1] / 2) == m.a[1] / 2);
  CHECK(pl_eval(g1, Rational(1, 2)) == 0);

  std::mt19937_64 rng(9);
  for (int iter = 0; iter < 20; ++iter) {
    Rational x(static_cast<unsigned long>(rng() % 1000), 1000u);
    x.canonicalize();
    auto [v0, e0] = peak_eval(m, x, 0);
    CHECK(v0 == pl_eval(g0, x));
    CHECK(e0 == m.a[1] + pow2(-1));
    auto [v1, e1] = peak_eval(m, x, 1);
    CHECK(v1 == pl_eval(g1, x));
    CHECK(e1 == pow2(-1));
  }
}

TEST_CASE("certified clearance margin of the zero function") {
  PLFunction zero({Rational(0), Rational(1)}, {Rational(0), Rational(0)});
  Rational delta = peak_margin(zero, Rational(1));
  CHECK(delta > 0);
  // Centered rectangles of base 1 limit the best square clearance to 1/10.
  CHECK(delta <= Rational(1, 10));

  // Soundness spot-check: for random admissible rectangles some tiling
  // square really stays delta away from the segment [0,1] x {0}.
  std::mt19937_64 rng(21);
  auto frac = [&rng](long lo, long hi) {
    Rational r(lo * 100 + static_cast<long>(rng() % ((hi - lo) * 100)), 100);
    r.canonicalize();
    return r;
  };
  Rational d2 = delta * delta;
  for (int iter = 0; iter < 200; ++iter) {
    Rational base = frac(1, 5);
    Rect53 r{frac(-5, 5), frac(-5, 5), base};
    bool ok = false;
    for (const Square& s : squares_of_rect(r)) {
      Rational dx = 0, dy = 0;
      if (s.x0 > 1) dx = s.x0 - 1;
      if (s.x0 + s.side < 0) dx = -(s.x0 + s.side);
      if (s.y0 > 0) dy = s.y0;
      if (s.y0 + s.side < 0) dy = -(s.y0 + s.side);
      if (dx * dx + dy * dy >= d2) {
        ok = true;
        break;
      }
    }
    CHECK(ok);
  }
}

TEST_CASE("an impossible budget reports failure instead of a bogus bound") {
  PLFunction zero({Rational(0), Rational(1)}, {Rational(0), Rational(0)});
  MarginOptions tiny;
  tiny.max_depth = 1;
  tiny.node_budget = 2;
  CHECK_THROWS_AS(peak_margin(zero, Rational(1), tiny), MarginNotCertified);
}
