#include <doctest.h>

#include "monograph/geometry.hpp"
#include "monograph/mzv.hpp"

using namespace monograph;

namespace {

Rect53 unit_rect() { return Rect53{Rational(0), Rational(0), Rational(5)}; }

// Dense sample of a graph point strictly inside the open square?
bool sampled_inside(const PLFunction& g, const Square& s, int per_segment) {
  const auto& xs = g.breakpoints();
  for (std::size_t i = 0; i + 1 < xs.size(); ++i)
    for (int k = 1; k < per_segment; ++k) {
      Rational frac(k, per_segment);
      frac.canonicalize();
      Rational x = xs[i] + (xs[i + 1] - xs[i]) * frac;
      Rational y = pl_eval(g, x);
      if (s.x0 < x && x < s.x0 + s.side && s.y0 < y && y < s.y0 + s.side)
        return true;
    }
  return false;
}

}  // namespace

TEST_CASE("the 5x3 tiling is exact and row-major") {
  Rect53 r{Rational(1, 3), Rational(-2), Rational(7, 2)};
  auto squares = squares_of_rect(r);
  REQUIRE(squares.size() == 15);
  Rational area = 0;
  for (const Square& s : squares) {
    CHECK(s.side == r.base / 5);
    CHECK(s.x0 >= r.left);
    CHECK(s.x0 + s.side <= r.right());
    CHECK(s.y0 >= r.bottom);
    CHECK(s.y0 + s.side <= r.top());
    area += s.side * s.side;
  }
  CHECK(area == r.base * r.height());
  CHECK(squares[0].x0 == r.left);
  CHECK(squares[0].y0 == r.bottom);
  CHECK(squares[7].x0 == r.left + 2 * (r.base / 5));
  CHECK(squares[7].y0 == r.bottom + r.base / 5);
}

TEST_CASE("a graph clear of the rectangle avoids the first square") {
  PLFunction above({Rational(0), Rational(5)}, {Rational(10), Rational(10)});
  CHECK(square_avoidance(above, unit_rect()) == 0u);
  PLFunction beside({Rational(10), Rational(11)}, {Rational(1), Rational(1)});
  CHECK(square_avoidance(beside, unit_rect()) == 0u);
}

TEST_CASE("boundary contact still counts as avoided") {
  PLFunction on_line({Rational(0), Rational(5)}, {Rational(1), Rational(1)});
  CHECK(square_avoidance(on_line, unit_rect()) == 0u);
}

TEST_CASE("a low horizontal graph forces the second row") {
  PLFunction low({Rational(0), Rational(5)}, {Rational(1, 2), Rational(1, 2)});
  CHECK(square_avoidance(low, unit_rect()) == 5u);
}

TEST_CASE("avoidance verdicts agree with a sampling check") {
  PLFunction diag({Rational(0), Rational(5)}, {Rational(0), Rational(3)});
  Rect53 r = unit_rect();
  auto avoided = square_avoidance(diag, r);
  REQUIRE(avoided.has_value());
  CHECK(*avoided == 2u);
  auto squares = squares_of_rect(r);
  CHECK_FALSE(sampled_inside(diag, squares[*avoided], 400));
  // Every earlier square really is met.
  for (std::size_t i = 0; i < *avoided; ++i)
    CHECK(sampled_inside(diag, squares[i], 400));
}

TEST_CASE("porosity above a straight sample line tops out at one half") {
  std::vector<GraphPoint> samples;
  for (int k = 0; k <= 200; ++k) {
    Rational x(k, 200);
    x.canonicalize();
    samples.push_back({x, Rational(0)});
  }
  std::vector<GraphPoint> centers{{Rational(1, 2), Rational(0)}};
  std::vector<Rational> radii{Rational(1, 4)};
  PorosityReport rep = porosity_estimate(samples, centers, radii);
  REQUIRE(rep.rows.size() == 1);
  const PorosityRow& row = rep.rows[0];
  CHECK(row.q <= Rational(1, 2));
  CHECK(row.q >= Rational(1, 3));
  CHECK(rep.p == row.q);

  // Independent exact re-verification of the reported ball.
  Rational rho = row.q * row.r;
  Rational cdx = row.empty_center.x - row.center.x;
  Rational cdy = row.empty_center.y - row.center.y;
  CHECK(cdx * cdx + cdy * cdy <= (row.r - rho) * (row.r - rho));
  for (const GraphPoint& s : samples) {
    Rational dx = s.x - row.empty_center.x;
    Rational dy = s.y - row.empty_center.y;
    CHECK(dx * dx + dy * dy >= rho * rho);
  }
}

TEST_CASE("box-count slope separates a curve from a filled square") {
  std::vector<std::pair<double, double>> seg;
  for (int k = 0; k <= 1000; ++k)
    seg.push_back({k / 1000.0, k / 1000.0});
  BoxDimension d1 = box_dimension(seg, 1.0 / 64, 1.0 / 4);
  CHECK(d1.slope > 0.8);
  CHECK(d1.slope < 1.2);
  REQUIRE(d1.counts.size() >= 3);
  for (std::size_t i = 0; i + 1 < d1.counts.size(); ++i) {
    CHECK(d1.counts[i].side > d1.counts[i + 1].side);
    CHECK(d1.counts[i].count <= d1.counts[i + 1].count);
  }

  std::vector<std::pair<double, double>> filled;
  for (int i = 0; i <= 50; ++i)
    for (int j = 0; j <= 50; ++j)
      filled.push_back({i / 50.0, j / 50.0});
  BoxDimension d2 = box_dimension(filled, 1.0 / 32, 1.0 / 4);
  CHECK(d2.slope > 1.7);
  CHECK(d2.slope < 2.2);
}

TEST_CASE("graph length brackets are tight and exact when possible") {
  PLFunction flat({Rational(0), Rational(2)}, {Rational(1), Rational(1)});
  auto [flo, fhi] = graph_length(flat);
  CHECK(flo == 2);
  CHECK(fhi == 2);

  PLFunction pyth({Rational(0), Rational(3)}, {Rational(0), Rational(4)});
  auto [plo, phi] = graph_length(pyth);
  CHECK(plo == 5);
  CHECK(phi == 5);

  PLFunction tent({Rational(0), Rational(1, 2), Rational(1)},
                  {Rational(0), Rational(1, 2), Rational(0)});
  auto [tlo, thi] = graph_length(tent);
  CHECK(tlo * tlo <= 2);
  CHECK(thi * thi >= 2);
  CHECK(thi - tlo <= Rational(4, 1000000));
}

TEST_CASE("approximant lengths strictly increase") {
  Rational prev_hi = 0;
  for (int n = 1; n <= 4; ++n) {
    auto [lo, hi] = graph_length(mzv_approximant(n).fn);
    CHECK(lo > prev_hi);
    CHECK(hi >= lo);
    prev_hi = hi;
  }
}
