#include <cmath>
#include <mutex>
#include <vector>

#include "bessum/errors.hpp"
#include "bessum/special.hpp"

namespace bessum {

namespace {

// Arguments at or below this size take the exact factorial paths.
constexpr long kExactPathLimit = 20000;
// Extra bits carried through log/exp inside the Stirling route.
constexpr mpfr_prec_t kGammaGuardBits = 32;

class BernoulliTable {
 public:
  Rational get(int n) {
    std::lock_guard<std::mutex> lock(mutex_);
    while (static_cast<int>(values_.size()) <= n) extend();
    return values_[static_cast<std::size_t>(n)];
  }

 private:
  // B_m = -1/(m+1) * sum_{j<m} C(m+1, j) B_j
  void extend() {
    const long m = static_cast<long>(values_.size());
    if (m == 0) {
      values_.emplace_back(1);
      return;
    }
    Rational acc(0);
    for (long j = 0; j < m; ++j) acc += binomial(m + 1, j) * values_[static_cast<std::size_t>(j)];
    Rational b = -acc / Rational(m + 1);
    b.canonicalize();
    values_.push_back(b);
  }

  std::mutex mutex_;
  std::vector<Rational> values_;
};

BernoulliTable& bernoulli_table() {
  static BernoulliTable table;
  return table;
}

bool is_half_integer(const Real& x) {
  Real twice = ldexp(x, 1);
  return twice.is_integer() && !x.is_integer();
}

bool fits_exact_path(const Real& x) { return x <= kExactPathLimit; }

// Gamma(n) for positive integer n.
Real gamma_integer(long n, mpfr_prec_t bits) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n - 1));
  Real out(bits);
  mpfr_set_z(out.get(), f.get_mpz_t(), MPFR_RNDN);
  return out;
}

// Gamma(n + 1/2) = (2n-1)!! sqrt(pi) / 2^n.
Real gamma_half_integer(long n, const PrecisionContext& ctx) {
  Integer df(1);
  if (n > 0) mpz_2fac_ui(df.get_mpz_t(), static_cast<unsigned long>(2 * n - 1));
  Real out(ctx.bits());
  mpfr_set_z(out.get(), df.get_mpz_t(), MPFR_RNDN);
  out *= ctx.sqrt_pi();
  return ldexp(out, -n);
}

// Stirling series for ln Gamma(y), y >= threshold(bits). After n terms the
// remainder is bounded by the first omitted term (y real and positive), and
// that term drops below 2^-bits once y exceeds bits * ln2 / (2 pi).
Real log_gamma_stirling(const Real& y, mpfr_prec_t bits) {
  Real two_pi(bits);
  mpfr_const_pi(two_pi.get(), MPFR_RNDN);
  two_pi = ldexp(two_pi, 1);

  Real half(1, bits);
  half = ldexp(half, -1);
  Real result = (y - half) * log(y) - y + ldexp(log(two_pi), -1);

  Real tol(1, bits);
  tol = ldexp(tol, -static_cast<long>(bits));
  tol *= abs(result);

  const Real y2 = y * y;
  Real ypow = y;  // y^(2j-1)
  Real previous(bits);
  for (int j = 1;; ++j) {
    Real term(bernoulli(2 * j), bits);
    term /= static_cast<long>(2 * j) * static_cast<long>(2 * j - 1);
    term /= ypow;
    const Real magnitude = abs(term);
    if (j > 1 && magnitude > previous) {
      throw std::logic_error("Stirling series diverged before reaching tolerance");
    }
    result += term;
    if (magnitude < tol) break;
    previous = magnitude;
    ypow *= y2;
  }
  return result;
}

Real gamma_general(const Real& x, const PrecisionContext& ctx) {
  const mpfr_prec_t bits = ctx.bits() + kGammaGuardBits;
  const double threshold = std::ceil(static_cast<double>(bits) * std::log(2.0) / (2.0 * M_PI)) + 1.0;

  Real y = x.with_precision(bits);
  Real shift_product(1, bits);
  while (y.to_double() < threshold) {
    shift_product *= y;
    y += 1;
  }
  Real g = exp(log_gamma_stirling(y, bits)) / shift_product;
  return g.with_precision(ctx.bits());
}

}  // namespace

Rational bernoulli(int n) {
  if (n < 0) throw std::invalid_argument("bernoulli: negative index");
  return bernoulli_table().get(n);
}

Real gamma(const Real& x, const PrecisionContext& ctx) {
  if (!(x > 0)) throw DomainError("gamma: argument must be positive");
  if (fits_exact_path(x)) {
    if (x.is_integer()) return gamma_integer(x.to_long(), ctx.bits());
    if (is_half_integer(x)) return gamma_half_integer(floor(x).to_long(), ctx);
  }
  return gamma_general(x, ctx);
}

Real reciprocal_gamma(const Real& x, const PrecisionContext& ctx) {
  if (x > 0) {
    Real one = ctx.make(1);
    return one / gamma(x, ctx);
  }
  if (x.is_integer()) return ctx.zero();

  // Reflection: 1/Gamma(x) = Gamma(1 - x) sin(pi x) / pi, with x reduced mod 2
  // exactly before the sine so accuracy near the poles is kept.
  const mpfr_prec_t bits = ctx.bits() + 64;
  Real reduced(bits);
  Real two(2, bits);
  mpfr_fmod(reduced.get(), x.get(), two.get(), MPFR_RNDN);
  Real pi(bits);
  mpfr_const_pi(pi.get(), MPFR_RNDN);
  Real s = sin(pi * reduced);
  Real one_minus_x = Real(1, bits) - x.with_precision(bits);
  Real g = gamma(one_minus_x, ctx).with_precision(bits);
  return (g * s / pi).with_precision(ctx.bits());
}

Real pochhammer(const Real& x, long n, const PrecisionContext& ctx) {
  if (n < 0) return pochhammer(x, ctx.make(n), ctx);
  Real out = ctx.make(1);
  Real factor = x.with_precision(std::max(ctx.bits(), x.precision()));
  for (long i = 0; i < n; ++i) {
    out *= factor;
    if (out.is_zero()) break;
    factor += 1;
  }
  return out;
}

Real pochhammer(const Real& x, const Real& n, const PrecisionContext& ctx) {
  if (n.is_integer() && n >= 0) return pochhammer(x, n.to_long(), ctx);
  Real end = x + n;
  if (!(x > 0) || !(end > 0)) {
    throw DomainError("pochhammer: non-integer count needs x > 0 and x + n > 0");
  }
  return gamma(end, ctx) / gamma(x, ctx);
}

Real beta(const Real& a, const Real& b, const PrecisionContext& ctx) {
  if (!(a > 0) || !(b > 0)) throw DomainError("beta: arguments must be positive");
  // B(a, n) = (n-1)! / (a)_n for positive integer n.
  if (b.is_integer() && b <= kExactPathLimit) {
    const long n = b.to_long();
    return gamma_integer(n, ctx.bits()) / pochhammer(a, n, ctx);
  }
  if (a.is_integer() && a <= kExactPathLimit) {
    const long n = a.to_long();
    return gamma_integer(n, ctx.bits()) / pochhammer(b, n, ctx);
  }
  return gamma(a, ctx) * gamma(b, ctx) / gamma(a + b, ctx);
}

}  // namespace bessum
