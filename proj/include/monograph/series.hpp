#pragma once

#include <utility>

#include "monograph/evaluator.hpp"
#include "monograph/rational.hpp"

namespace monograph {

// Partial sum of sum_k 2^-k * dist(2^(k^2) y, Z) over k = 0..K, with the
// certified tail bound 2^(-K-1).
std::pair<Rational, Rational> nomp_eval(const Rational& y, int truncation);

// The local refutation data around y at scale n: points x < y < z with
// x = y - (i/4) 2^(-n^2), z = x + 2^(-n^2), i in {1, 3} chosen so that
// |dist(2^(n^2)y, Z) - dist(2^(n^2)y - i/4, Z)| >= 1/4, and the closed-form
// lower bound (2^(-n-2) - n 2^(2-3n)) / (n 2^(2-3n) + 2^(-n^2)) for the
// quotient |f(y)-f(x)| / (|f(z)-f(x)| + |z-x|).
struct NompWitness {
  int n;
  int shift_quarter;  // the chosen i
  Rational x, z;
  Rational ratio_lb;
};
NompWitness nomp_witness(const Rational& y, int n);

// Partial sum of the Takagi series sum_n 2^-n * dist(2^n x, Z) over
// n = 0..K. The error is 2^-K, tightened to 0 when x = p/2^m with K >= m
// (all later terms vanish).
std::pair<Rational, Rational> takagi_eval(const Rational& x, int truncation);

class NompEvaluator : public CertifiedEvaluator {
 public:
  explicit NompEvaluator(int truncation) : truncation_(truncation) {}
  CertifiedValue at(const Rational& x) const override {
    auto [v, e] = nomp_eval(x, truncation_);
    return {v, e};
  }
  Rational domain_lo() const override { return Rational(-1000); }
  Rational domain_hi() const override { return Rational(1000); }

 private:
  int truncation_;
};

class TakagiEvaluator : public CertifiedEvaluator {
 public:
  explicit TakagiEvaluator(int truncation) : truncation_(truncation) {}
  CertifiedValue at(const Rational& x) const override {
    auto [v, e] = takagi_eval(x, truncation_);
    return {v, e};
  }
  Rational domain_lo() const override { return Rational(-1000); }
  Rational domain_hi() const override { return Rational(1000); }

 private:
  int truncation_;
};

}  // namespace monograph
