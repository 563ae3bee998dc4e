#include "monograph/series.hpp"

namespace monograph {

namespace {

Rational pow2_int(long e2) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e2));
  return Rational(p);
}

}  // namespace

std::pair<Rational, Rational> nomp_eval(const Rational& y, int truncation) {
  Rational sum = 0;
  for (int k = 0; k <= truncation; ++k) {
    Rational scale = pow2_int(static_cast<long>(k) * k);
    sum += dist_to_integers(scale * y) * pow2(-k);
  }
  return {sum, pow2(-truncation - 1)};
}

NompWitness nomp_witness(const Rational& y, int n) {
  if (n < 2) throw std::invalid_argument("nomp witness needs n >= 2");
  Rational scale = pow2_int(static_cast<long>(n) * n);
  Rational base = dist_to_integers(scale * y);
  int i = 1;
  if (abs(base - dist_to_integers(scale * y - Rational(1, 4))) < Rational(1, 4)) {
    i = 3;
    if (abs(base - dist_to_integers(scale * y - Rational(3, 4))) < Rational(1, 4))
      throw std::logic_error("quarter-shift selection failed");
  }
  Rational h = 1 / scale;  // 2^(-n^2)
  Rational x = y - Rational(i, 4) * h;
  Rational small = Rational(n) * pow2(2 - 3 * n);
  Rational ratio_lb = (pow2(-n - 2) - small) / (small + h);
  return {n, i, x, x + h, ratio_lb};
}

std::pair<Rational, Rational> takagi_eval(const Rational& x, int truncation) {
  Rational sum = 0;
  Rational scale = 1;
  for (int k = 0; k <= truncation; ++k) {
    sum += dist_to_integers(scale * x) * pow2(-k);
    scale *= 2;
  }
  Rational err = pow2(-truncation);
  // Dyadic x = p/2^m: terms with index >= m vanish.
  const Integer& den = x.get_den();
  if (mpz_popcount(den.get_mpz_t()) == 1) {
    auto m = mpz_sizeinbase(den.get_mpz_t(), 2) - 1;
    if (static_cast<long>(m) <= truncation) err = 0;
  }
  return {sum, err};
}

}  // namespace monograph
