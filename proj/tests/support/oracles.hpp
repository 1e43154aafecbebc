#pragma once

// Reference computations that share no code path with the library's
// hypergeometric or Pochhammer-ratio formulas.

#include <mpfr.h>

#include <vector>

#include "bessum/rational.hpp"
#include "bessum/real.hpp"

namespace oracle {

using bessum::Integer;
using bessum::Rational;
using bessum::Real;

inline Rational fact(long n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(f);
}

inline Rational rpow(const Rational& b, long e) {
  Rational r = 1;
  for (long i = 0; i < e; ++i) r *= b;
  return r;
}

// Monomial coefficients by the three-term recurrences, exact.
inline std::vector<std::vector<Rational>> legendre_monomials(int nmax) {
  std::vector<std::vector<Rational>> p(nmax + 1);
  p[0] = {1};
  if (nmax >= 1) p[1] = {0, 1};
  for (int n = 1; n < nmax; ++n) {
    std::vector<Rational> next(n + 2, 0);
    for (int j = 0; j <= n; ++j) next[j + 1] += Rational(2 * n + 1, n + 1) * p[n][j];
    for (int j = 0; j < n; ++j) next[j] -= Rational(n, n + 1) * p[n - 1][j];
    for (auto& c : next) c.canonicalize();
    p[n + 1] = std::move(next);
  }
  return p;
}

inline std::vector<std::vector<Rational>> chebyshev_monomials(int nmax) {
  std::vector<std::vector<Rational>> t(nmax + 1);
  t[0] = {1};
  if (nmax >= 1) t[1] = {0, 1};
  for (int n = 1; n < nmax; ++n) {
    std::vector<Rational> next(n + 2, 0);
    for (int j = 0; j <= n; ++j) next[j + 1] += 2 * t[n][j];
    for (int j = 0; j < n; ++j) next[j] -= t[n - 1][j];
    t[n + 1] = std::move(next);
  }
  return t;
}

inline std::vector<std::vector<Rational>> gegenbauer_monomials(int nmax, const Rational& lambda) {
  std::vector<std::vector<Rational>> c(nmax + 1);
  c[0] = {1};
  if (nmax >= 1) c[1] = {0, 2 * lambda};
  for (int n = 1; n < nmax; ++n) {
    std::vector<Rational> next(n + 2, 0);
    const Rational a = 2 * (n + lambda) / (n + 1);
    const Rational b = (n + 2 * lambda - 1) / (n + 1);
    for (int j = 0; j <= n; ++j) next[j + 1] += a * c[n][j];
    for (int j = 0; j < n; ++j) next[j] -= b * c[n - 1][j];
    for (auto& v : next) v.canonicalize();
    c[n + 1] = std::move(next);
  }
  return c;
}

// Maclaurin coefficients of J_nu(kx)/(kx)^nu for integer nu, in powers x^2m,
// with k rational: (-1)^m (k/2)^2m / (2^nu m! (m+nu)!).
inline std::vector<Rational> bessel_even_part(int nu, const Rational& k, int terms) {
  std::vector<Rational> t(terms);
  for (int m = 0; m < terms; ++m) {
    Rational v = rpow(k * k / 4, m) / (fact(m) * fact(m + nu) * rpow(Rational(2), nu));
    t[m] = (m % 2 == 0) ? v : Rational(-v);
  }
  return t;
}

// Fourier-Legendre coefficient (2L+1)/2 * integral of J_N(kx) P_L(x) over
// [-1, 1], from exact moments of x^n.
inline Rational legendre_moment_coeff(int L, int N, const Rational& k, const std::vector<Rational>& pl,
                                      int terms = 70) {
  if ((L + N) % 2 != 0) return 0;
  const auto t = bessel_even_part(N, k, terms);
  const Rational kn = rpow(k, N);
  Rational sum = 0;
  for (int m = 0; m < terms; ++m) {
    for (std::size_t j = 0; j < pl.size(); ++j) {
      if (pl[j] == 0) continue;
      const long n = 2 * m + N + static_cast<long>(j);
      if (n % 2 != 0) continue;
      sum += t[m] * kn * pl[j] * Rational(2, n + 1);
    }
  }
  Rational r = sum * Rational(2 * L + 1, 2);
  r.canonicalize();
  return r;
}

// Chebyshev coefficient of J_nu(kx)/(kx)^nu in T_2L, plain-sum convention:
// (2 - delta_L0)/pi * integral f T_2L / sqrt(1-x^2); the pi cancels exactly.
inline Rational chebyshev_moment_coeff(int L, int nu, const Rational& k, const std::vector<Rational>& t2l,
                                       int terms = 80) {
  const auto t = bessel_even_part(nu, k, terms);
  auto weight_moment = [](long n) {  // integral x^n / sqrt(1-x^2) / pi, n even
    Integer a;
    Integer b;
    mpz_2fac_ui(a.get_mpz_t(), static_cast<unsigned long>(n - 1 < 0 ? 0 : n - 1));
    mpz_2fac_ui(b.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(a, b);
  };
  Rational sum = 0;
  for (int m = 0; m < terms; ++m) {
    for (std::size_t j = 0; j < t2l.size(); j += 2) {
      if (t2l[j] != 0) sum += t[m] * t2l[j] * weight_moment(2 * m + static_cast<long>(j));
    }
  }
  Rational r = sum * (L == 0 ? 1 : 2);
  r.canonicalize();
  return r;
}

// Gegenbauer coefficient of J_nu(kx)/(kx)^nu in C^lambda_2L by orthogonality,
// with weight moments from MPFR's own gamma.
inline Real gegenbauer_moment_coeff(int L, int nu, const Rational& k, const Rational& lambda,
                                    const std::vector<Rational>& c2l, mpfr_prec_t bits, int terms = 80) {
  auto mg = [bits](const Real& x) {
    Real out(bits);
    mpfr_gamma(out.get(), x.get(), MPFR_RNDN);
    return out;
  };
  const Real lam(lambda, bits);
  const Real half(Rational(1, 2), bits);
  const auto t = bessel_even_part(nu, k, terms);
  Real sum(bits);
  for (int m = 0; m < terms; ++m) {
    for (std::size_t j = 0; j < c2l.size(); j += 2) {
      if (c2l[j] == 0) continue;
      const long p = m + static_cast<long>(j) / 2;  // x^(2p)
      Real mom = mg(Real(p, bits) + half) * mg(lam + half) / mg(Real(p + 1, bits) + lam);
      sum += mom * Real(t[m] * c2l[j], bits);
    }
  }
  const long n = 2L * L;
  Real pi(bits);
  mpfr_const_pi(pi.get(), MPFR_RNDN);
  Real norm = pi * ldexp(Real(1, bits), 1) / pow(Real(2, bits), lam * 2L);
  norm *= mg(Real(n, bits) + lam * 2L);
  norm /= Real(fact(n), bits) * (Real(n, bits) + lam) * mg(lam) * mg(lam);
  return sum / norm;
}

// Partial sums of exact hypergeometric series with rational parameters.
inline Rational pfq_rational(const std::vector<Rational>& a, const std::vector<Rational>& b, const Rational& z,
                             int terms) {
  Rational term = 1;
  Rational sum = 0;
  for (int m = 0; m < terms; ++m) {
    sum += term;
    Rational ratio = z / (m + 1);
    for (const auto& ai : a) ratio *= ai + m;
    for (const auto& bi : b) ratio /= bi + m;
    term *= ratio;
  }
  sum.canonicalize();
  return sum;
}

inline Real mpfr_gamma_of(const Real& x) {
  Real out(x.precision());
  mpfr_gamma(out.get(), x.get(), MPFR_RNDN);
  return out;
}

inline Real rel_diff(const Real& a, const Real& b) {
  Real d = bessum::abs(a - b);
  return b.is_zero() ? d : d / bessum::abs(b);
}

}  // namespace oracle

#ifdef DOCTEST_LIBRARY_INCLUDED
#include "bessum/format.hpp"
namespace doctest {
template <>
struct StringMaker<bessum::Real> {
  static String convert(const bessum::Real& v) {
    return v.is_finite() ? bessum::format_decimal(v, 12).c_str() : "non-finite";
  }
};
}  // namespace doctest
#endif
