#pragma once

#include <variant>
#include <vector>

#include "bessum/rational.hpp"
#include "bessum/real.hpp"

namespace bessum {

struct LegendreP {};
struct ChebyshevT {};
/// C_n^lambda with lambda > -1/2 and lambda != 0.
struct GegenbauerC {
  Rational lambda;
};

using PolyKind = std::variant<LegendreP, ChebyshevT, GegenbauerC>;

/// Throws DomainError for an invalid Gegenbauer parameter.
void validate(const PolyKind& kind);

/// poly(x) = sum_j coeffs[j] x^j; entries of the wrong parity are zero.
struct MonomialExpansion {
  int degree = 0;
  std::vector<Rational> coeffs;

  Rational at(int j) const {
    return (j >= 0 && j < static_cast<int>(coeffs.size())) ? coeffs[static_cast<std::size_t>(j)] : Rational(0);
  }
};

/// Forward three-term recurrence at the context's working precision.
Real eval_poly(const PolyKind& kind, int n, const Real& x, const PrecisionContext& ctx);

/// Exact monomial coefficients from the terminating 2F1 forms:
///   P_n(x)   = 2^-n C(2n,n) x^n 2F1(-n/2, (1-n)/2; 1/2-n; 1/x^2)
///   T_n(x)   = 2^(n-1) [1 + delta_n0] x^n 2F1(-n/2, (1-n)/2; 1-n; 1/x^2)
///   C_2L(x)  = (-1)^L (lambda)_L / L! 2F1(-L, L+lambda; 1/2; x^2)
///   C_2L+1(x)= (-1)^L 2 (lambda)_(L+1) / L! x 2F1(-L, L+lambda+1; 3/2; x^2)
MonomialExpansion monomial_coeffs(const PolyKind& kind, int n);

/// Value of the expansion at x (Horner, working precision).
Real eval_monomials(const MonomialExpansion& expansion, const Real& x, const PrecisionContext& ctx);

}  // namespace bessum
