#include "bessum/errors.hpp"
#include "bessum/expansions.hpp"
#include "bessum/special.hpp"

namespace bessum {

namespace {

// Extra bits for the alternating Maclaurin sums; at z = 8 the largest term
// exceeds the result by a few decades.
constexpr mpfr_prec_t kReferenceGuardBits = 64;

// sum_m s^m (z/2)^(2m+nu) / (m! Gamma(m+nu+1)), s = -1 for J and +1 for I.
Real maclaurin(const Real& nu_in, const Real& z_in, int sign, const PrecisionContext& ctx) {
  const PrecisionContext wide(ctx.working_digits() + 20, ctx.display_digits());
  const mpfr_prec_t bits = std::max(wide.bits(), ctx.bits() + kReferenceGuardBits);
  const Real nu = nu_in.with_precision(bits);
  const Real z = z_in.with_precision(bits);

  if (z.is_zero()) return nu.is_zero() ? ctx.make(1) : ctx.zero();
  const Real half_z = ldexp(z, -1);
  Real term(bits);
  if (nu.is_integer()) {
    term = pow(half_z, nu.to_long());
  } else {
    if (z.sign() < 0) throw DomainError("non-integer order needs z >= 0");
    term = pow(half_z, nu);
  }
  term *= reciprocal_gamma(nu + 1L, wide).with_precision(bits);

  Real quarter_z2 = half_z * half_z;
  if (sign < 0) quarter_z2 = -quarter_z2;
  Real tol = wide.series_tolerance().with_precision(bits);

  Real sum(bits);
  int run = 0;
  for (long m = 0;; ++m) {
    sum += term;
    Real scale = abs(sum);
    if (scale < 1) scale = Real(1, bits);
    if (abs(term) < tol * scale) {
      if (++run >= 3) break;
    } else {
      run = 0;
    }
    term *= quarter_z2;
    term /= m + 1;
    term /= nu + (m + 1);
  }
  return sum.with_precision(ctx.bits());
}

}  // namespace

Real bessel_j_ref(const Real& nu, const Real& z, const PrecisionContext& ctx) {
  if (nu < 0) throw DomainError("Bessel order must be nonnegative");
  return maclaurin(nu, z, -1, ctx);
}

Real bessel_i_ref(int n, const Real& z, const PrecisionContext& ctx) {
  if (n < 0) throw DomainError("Bessel order must be nonnegative");
  return maclaurin(ctx.make(n), z, +1, ctx);
}

}  // namespace bessum
