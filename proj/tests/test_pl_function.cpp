#include <doctest.h>

#include <random>

#include "monograph/pl_function.hpp"

using namespace monograph;

namespace {

PLFunction tent() {
  return PLFunction({Rational(0), Rational(1, 2), Rational(1)},
                    {Rational(0), Rational(1, 2), Rational(0)});
}

PLFunction random_pl(std::mt19937_64& rng, int segments) {
  std::vector<Rational> xs, ys;
  Rational x = 0;
  for (int i = 0; i <= segments; ++i) {
    xs.push_back(x);
    Rational step(1 + static_cast<long>(rng() % 7), 8);
    step.canonicalize();
    x += step;
    Rational y(static_cast<long>(rng() % 17) - 8, 4);
    y.canonicalize();
    ys.push_back(y);
  }
  return PLFunction(std::move(xs), std::move(ys));
}

}  // namespace

TEST_CASE("constructor validates its mesh") {
  CHECK_THROWS_AS(PLFunction({Rational(0)}, {Rational(0)}), std::invalid_argument);
  CHECK_THROWS_AS(PLFunction({Rational(0), Rational(0)}, {Rational(0), Rational(1)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(PLFunction({Rational(0), Rational(1)}, {Rational(0)}),
                  std::invalid_argument);
}

TEST_CASE("evaluation interpolates exactly") {
  PLFunction id({Rational(0), Rational(1)}, {Rational(0), Rational(1)});
  CHECK(pl_eval(id, Rational(1, 3)) == Rational(1, 3));
  CHECK(pl_eval(tent(), Rational(1, 4)) == Rational(1, 4));
  CHECK(pl_eval(tent(), Rational(3, 4)) == Rational(1, 4));
  CHECK(pl_eval(tent(), Rational(1, 2)) == Rational(1, 2));
  CHECK_THROWS_AS(pl_eval(tent(), Rational(2)), std::domain_error);
}

TEST_CASE("sup-diff is a symmetric exact maximum") {
  PLFunction id({Rational(0), Rational(1)}, {Rational(0), Rational(1)});
  PLFunction zero({Rational(0), Rational(1)}, {Rational(0), Rational(0)});
  CHECK(pl_sup_diff(id, zero) == 1);
  CHECK(pl_sup_diff(zero, id) == 1);
  CHECK(pl_sup_diff(tent(), tent()) == 0);
  CHECK(pl_sup_diff(tent(), zero) == Rational(1, 2));
}

TEST_CASE("total variation sums value increments") {
  CHECK(pl_total_variation(tent()) == 1);
  PLFunction mono({Rational(0), Rational(1, 2), Rational(1)},
                  {Rational(0), Rational(1, 3), Rational(2)});
  CHECK(pl_total_variation(mono) == 2);
}

TEST_CASE("level crossings solve exactly and report flat runs as intervals") {
  auto at_quarter = pl_level_crossings(tent(), Rational(1, 4));
  REQUIRE(at_quarter.size() == 2);
  CHECK(at_quarter[0].lo == Rational(1, 4));
  CHECK(!at_quarter[0].is_interval());
  CHECK(at_quarter[1].lo == Rational(3, 4));

  CHECK(pl_level_crossings(tent(), Rational(2)).empty());

  PLFunction plateau({Rational(0), Rational(1, 4), Rational(3, 4), Rational(1)},
                     {Rational(0), Rational(1), Rational(1), Rational(0)});
  auto at_top = pl_level_crossings(plateau, Rational(1));
  REQUIRE(at_top.size() == 1);
  CHECK(at_top[0].lo == Rational(1, 4));
  CHECK(at_top[0].hi == Rational(3, 4));
  CHECK(at_top[0].is_interval());
}

TEST_CASE("jordan decomposition is minimal and reconstructs f") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 30; ++iter) {
    PLFunction f = random_pl(rng, 6);
    auto [g, h] = jordan_decompose(f);
    for (std::size_t i = 0; i + 1 < g.size(); ++i) {
      CHECK(g.values()[i + 1] >= g.values()[i]);
      CHECK(h.values()[i + 1] >= h.values()[i]);
    }
    for (std::size_t i = 0; i < f.size(); ++i)
      CHECK(g.values()[i] - h.values()[i] == f.values()[i]);
    Rational rise = (g.values().back() - g.values().front()) +
                    (h.values().back() - h.values().front());
    CHECK(rise == pl_total_variation(f));
  }
}

TEST_CASE("normalization drops collinear interior points only") {
  PLFunction padded({Rational(0), Rational(1, 2), Rational(1), Rational(2)},
                    {Rational(0), Rational(1, 2), Rational(1), Rational(0)});
  PLFunction norm = pl_normalize(padded);
  CHECK(norm.size() == 3);
  CHECK(norm.breakpoints()[1] == 1);
  CHECK(pl_same_function(padded, norm));
  CHECK_FALSE(pl_same_function(padded, tent()));
}

TEST_CASE("sum obeys the exact variation triangle inequality") {
  std::mt19937_64 rng(13);
  for (int iter = 0; iter < 20; ++iter) {
    PLFunction f = random_pl(rng, 5);
    std::vector<Rational> ys2;
    for (std::size_t i = 0; i < f.size(); ++i) {
      Rational y(static_cast<long>(rng() % 9) - 4, 3);
      y.canonicalize();
      ys2.push_back(y);
    }
    PLFunction g(f.breakpoints(), ys2);
    PLFunction sum = pl_add(f, g);
    CHECK(pl_total_variation(sum) <= pl_total_variation(f) + pl_total_variation(g));
    for (const Rational& x : sum.breakpoints())
      CHECK(pl_eval(sum, x) == pl_eval(f, x) + pl_eval(g, x));
  }
}
