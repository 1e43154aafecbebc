#pragma once

#include <string>
#include <variant>
#include <vector>

#include "bessum/orthopoly.hpp"
#include "bessum/rational.hpp"
#include "bessum/real.hpp"

namespace bessum {

/// J_N(kx) = sum_L a_LN(k) P_L(x); L is the polynomial degree.
struct Legendre {
  int order = 0;
};
/// J_nu(kx) = (kx)^nu sum_L C_L(k) T_2L(x).
struct Chebyshev {
  Rational nu;
};
/// J_nu(kx) = (kx)^nu sum_L b_L(k) C^lambda_2L(x).
struct Gegenbauer {
  Rational nu;
  Rational lambda;
};

using ExpansionKind = std::variant<Legendre, Chebyshev, Gegenbauer>;

/// Throws DomainError for a negative order or an invalid lambda.
void validate(const ExpansionKind& kind);

/// Bessel order carried by the expansion (N for Legendre).
Rational bessel_order(const ExpansionKind& kind);
PolyKind basis(const ExpansionKind& kind);
/// Degree of the basis polynomial paired with coefficient index L.
int basis_degree(const ExpansionKind& kind, int L);
/// Lmax giving 22 nonvanishing terms: 21 for Chebyshev/Gegenbauer,
/// 42 + N for Legendre (odd-parity entries vanish).
int default_lmax(const ExpansionKind& kind);
std::string kind_name(const ExpansionKind& kind);

/// Fourier-Legendre coefficient a_LN(k) through the regularized 2F~3 form.
/// Zero exactly when L + N is odd; finite when N > L.
Real legendre_coeff(int L, int N, const Real& k, const PrecisionContext& ctx);
/// Regularized 2F~3 form for any N.
Real legendre_coeff_general(int L, int N, const Real& k, const PrecisionContext& ctx);
/// Reduced 1F2 forms, N in {0, 1} only.
Real legendre_coeff_reduced(int L, int N, const Real& k, const PrecisionContext& ctx);

/// C_Lnu(k) = (-1)^L k^2L 2^(-4L-nu) (2 - delta_L0) / (L! Gamma(L+nu+1))
///            * 1F2(L+1/2; L+nu+1, 2L+1; -k^2/4), plain-sum convention.
Real chebyshev_coeff(int L, const Real& nu, const Real& k, const PrecisionContext& ctx);

/// b_Lnu(k) = (-1)^L k^2L 2^(2L-nu) (lambda+1/2)_2L
///            / (sqrt(pi) (2 lambda)_2L (2L+2 lambda)_2L (L+1/2)_(nu+1/2))
///            * 1F2(L+1/2; 2L+lambda+1, L+nu+1; -k^2/4)
Real gegenbauer_coeff(int L, const Real& nu, const Real& lambda, const Real& k, const PrecisionContext& ctx);

Real expansion_coeff(const ExpansionKind& kind, int L, const Real& k, const PrecisionContext& ctx);

struct TableEntry {
  int L;
  Real value;
};

struct CoefficientTable {
  ExpansionKind kind;
  Real k;
  std::vector<TableEntry> entries;
};

CoefficientTable coefficient_table(const ExpansionKind& kind, const Real& k, int lmax, const PrecisionContext& ctx);

/// Truncated expansion at x in [-1, 1], including the (kx)^nu prefactor for
/// the Chebyshev and Gegenbauer kinds. Non-integer nu requires x >= 0.
Real eval_expansion(const ExpansionKind& kind, const Real& k, const Real& x, int lmax, const PrecisionContext& ctx);
/// Same, reusing an already computed table.
Real eval_expansion(const CoefficientTable& table, const Real& x, const PrecisionContext& ctx);

/// Maclaurin series of J_nu(z). Non-integer nu requires z >= 0.
Real bessel_j_ref(const Real& nu, const Real& z, const PrecisionContext& ctx);
/// Maclaurin series of I_n(z) (all terms positive for z > 0).
Real bessel_i_ref(int n, const Real& z, const PrecisionContext& ctx);

}  // namespace bessum
