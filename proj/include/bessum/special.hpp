#pragma once

#include "bessum/real.hpp"

namespace bessum {

/// Gamma function for x > 0.
///
/// Integers and half-integers take an exact path: Gamma(n) = (n-1)! and
/// Gamma(n+1/2) = (2n-1)!! sqrt(pi) / 2^n. Other arguments are shifted upward
/// past a precision-dependent threshold and evaluated by the Stirling series.
/// Throws DomainError for x <= 0.
Real gamma(const Real& x, const PrecisionContext& ctx);

/// 1/Gamma(x) for any real x; exactly zero at the poles x = 0, -1, -2, ...
Real reciprocal_gamma(const Real& x, const PrecisionContext& ctx);

/// Rising factorial (x)_n. Nonnegative integer n uses the finite product for
/// any x; otherwise requires x > 0 and x + n > 0 and returns Gamma(x+n)/Gamma(x).
Real pochhammer(const Real& x, const Real& n, const PrecisionContext& ctx);
Real pochhammer(const Real& x, long n, const PrecisionContext& ctx);

/// B(a, b) = Gamma(a) Gamma(b) / Gamma(a + b) for a, b > 0.
Real beta(const Real& a, const Real& b, const PrecisionContext& ctx);

/// Exact Bernoulli number B_n (B_1 = -1/2).
Rational bernoulli(int n);

}  // namespace bessum
