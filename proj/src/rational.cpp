#include "monograph/rational.hpp"

namespace monograph {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  mpq_class q;
  if (q.set_str(text, 10) != 0)
    throw std::invalid_argument("malformed rational literal: " + text);
  if (q.get_den() == 0)
    throw std::invalid_argument("zero denominator in rational literal: " + text);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Integer rational_floor(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Rational pow2(long e) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
  if (e >= 0) return Rational(p);
  Rational r(1, p);
  r.canonicalize();
  return r;
}

Rational sqrt_lower_bound(const Rational& r, const Integer& denominator) {
  if (r < 0) throw std::invalid_argument("sqrt of negative rational");
  // floor(sqrt(p/q * D^2)) / D = floor(sqrt(p*D^2/q)) / D, rounded down.
  Integer scaled_num = r.get_num() * denominator * denominator;
  Integer t;
  mpz_fdiv_q(t.get_mpz_t(), scaled_num.get_mpz_t(), r.get_den_mpz_t());
  Integer root;
  mpz_sqrt(root.get_mpz_t(), t.get_mpz_t());
  Rational out(root, denominator);
  out.canonicalize();
  return out;
}

Rational sqrt_upper_bound(const Rational& r, const Integer& denominator) {
  Rational lo = sqrt_lower_bound(r, denominator);
  if (lo * lo == r) return lo;
  Rational out = lo + Rational(1, denominator);
  out.canonicalize();
  return out;
}

Rational dist_to_integers(const Rational& r) {
  Rational frac = r - Rational(rational_floor(r));
  Rational other = 1 - frac;
  return frac < other ? frac : other;
}

}  // namespace monograph
