#include "bessum/rational.hpp"

#include <stdexcept>

namespace bessum {

Rational make_rational(long numerator, long denominator) {
  if (denominator == 0) throw std::invalid_argument("zero denominator");
  Rational q(numerator, denominator);
  q.canonicalize();
  return q;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Rational pochhammer(const Rational& x, long n) {
  if (n < 0) throw std::invalid_argument("pochhammer: negative count");
  Rational out(1);
  Rational term = x;
  for (long i = 0; i < n; ++i) {
    out *= term;
    if (out == 0) return out;
    term += 1;
  }
  return out;
}

Rational factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(f);
}

Rational double_factorial(long n) {
  if (n < -1) throw std::invalid_argument("double factorial: argument below -1");
  if (n <= 0) return Rational(1);
  Integer f;
  mpz_2fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(f);
}

Rational binomial(long n, long k) {
  if (k < 0) return Rational(0);
  if (n >= 0) {
    if (k > n) return Rational(0);
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(b);
  }
  Integer b;
  mpz_bin_ui(b.get_mpz_t(), Integer(n).get_mpz_t(), static_cast<unsigned long>(k));
  return Rational(b);
}

Rational pow2(long e) {
  Integer one(1);
  Integer p;
  mpz_mul_2exp(p.get_mpz_t(), one.get_mpz_t(), static_cast<mp_bitcnt_t>(e < 0 ? -e : e));
  if (e >= 0) return Rational(p);
  Rational q(Integer(1), p);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

}  // namespace bessum
