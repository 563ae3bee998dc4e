#pragma once

#include "monograph/mzv.hpp"
#include "monograph/pl_function.hpp"
#include "monograph/rational.hpp"

namespace monograph {

// A function value together with a certified bound on its distance from the
// true (limit) value.
struct CertifiedValue {
  Rational value;
  Rational error;
};

// Pointwise evaluator with certified error bounds.
class CertifiedEvaluator {
 public:
  virtual ~CertifiedEvaluator() = default;
  virtual CertifiedValue at(const Rational& x) const = 0;
  virtual Rational domain_lo() const = 0;
  virtual Rational domain_hi() const = 0;
  bool contains(const Rational& x) const { return x >= domain_lo() && x <= domain_hi(); }
};

// Exact evaluator for a piecewise-linear function.
class PLEvaluator : public CertifiedEvaluator {
 public:
  explicit PLEvaluator(PLFunction f) : f_(std::move(f)) {}
  CertifiedValue at(const Rational& x) const override { return {pl_eval(f_, x), Rational(0)}; }
  Rational domain_lo() const override { return f_.domain_lo(); }
  Rational domain_hi() const override { return f_.domain_hi(); }
  const PLFunction& fn() const { return f_; }

 private:
  PLFunction f_;
};

// Limit of the five-point subdivision scheme via local block descent.
class MzvLimitEvaluator : public CertifiedEvaluator {
 public:
  explicit MzvLimitEvaluator(int depth) : depth_(depth) {}
  CertifiedValue at(const Rational& x) const override {
    auto [v, e] = mzv_limit_eval(x, depth_);
    return {v, e};
  }
  Rational domain_lo() const override { return Rational(0); }
  Rational domain_hi() const override { return Rational(1); }

 private:
  int depth_;
};

}  // namespace monograph
