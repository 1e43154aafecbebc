#pragma once

#include <gmpxx.h>

#include <string>

namespace bessum {

/// Exact rational, always canonical (lowest terms, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long numerator, long denominator = 1);

bool is_integer(const Rational& q);

/// Rising factorial (x)_n for integer n >= 0; (x)_0 = 1.
Rational pochhammer(const Rational& x, long n);

Rational factorial(long n);

/// n!! for n >= -1, with (-1)!! = 0!! = 1.
Rational double_factorial(long n);

/// Binomial coefficient; zero when k < 0, or when n >= 0 and k > n.
/// Negative n uses the falling-product extension n(n-1)...(n-k+1)/k!.
Rational binomial(long n, long k);

/// Exact 2^e for any integer e.
Rational pow2(long e);

/// (-1)^n for any integer n.
inline int parity_sign(long n) { return (n % 2 == 0) ? 1 : -1; }

/// "p/q" or "p" in lowest terms.
std::string to_string(const Rational& q);

}  // namespace bessum
