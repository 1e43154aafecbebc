#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bessum/expansions.hpp"
#include "bessum/rational.hpp"
#include "bessum/real.hpp"

namespace bessum {

/// Families of summed 1F2 series. Each sums, over the expansion index L,
/// the contribution of one basis polynomial to the power x^(2h+nu).
enum class IdentityId {
  LegendreJ0,          ///< Fourier-Legendre series of J_0, power x^2h
  LegendreJ1,          ///< Fourier-Legendre series of J_1, power x^(2h+1)
  ChebyshevEven,       ///< Chebyshev series of J_0
  ChebyshevOdd,        ///< Chebyshev series of J_1
  ChebyshevGeneralNu,  ///< Chebyshev series of J_nu, any nu >= 0
  GegenbauerNu0,       ///< Gegenbauer series of J_0, any lambda
  GegenbauerGeneral,   ///< Gegenbauer series of J_nu, any nu and lambda
  ClenshawSumRule,     ///< sum_L (-1)^L C_L0(k) = 1
};

std::string_view identity_name(IdentityId id);
std::optional<IdentityId> parse_identity(std::string_view name);
std::vector<IdentityId> all_identities();

struct IdentityCase {
  IdentityId id = IdentityId::ChebyshevEven;
  int h = 0;
  Rational k = 1;
  Rational nu = 0;      ///< used by ChebyshevGeneralNu and GegenbauerGeneral
  Rational lambda = 0;  ///< used by the Gegenbauer families
  int lmax = 0;         ///< last L summed (inclusive, from L = 0)
  Rational tolerance = Rational(1, 1000);
  /// Modified-Bessel variant k -> i kappa: 1F2 argument +k^2/4, no (-1)^h.
  bool sign_flip = false;
};

/// Bessel order whose Maclaurin coefficient the family reproduces.
Rational identity_order(const IdentityCase& c);

/// Throws DomainError when the case violates its family's constraints.
void validate(const IdentityCase& c);

/// The L-th summand. Exactly zero for L below the first contributing index
/// and for parity-excluded L; no 1F2 is evaluated in those cases.
Real identity_term(const IdentityCase& c, int L, const PrecisionContext& ctx);

/// (-1)^h 2^(-2h-nu) k^(2h+nu) / (h! Gamma(h+nu+1)); 1 for the sum rule.
Real identity_rhs(const IdentityCase& c, const PrecisionContext& ctx);

/// The general-nu Chebyshev family's right-hand side in its printed
/// nu = 1 shape, (-1)^h 2^(-2h-1) k^(2h+1) / (h! Gamma(h+2)).
Real chebyshev_nu_rhs_printed(const IdentityCase& c, const PrecisionContext& ctx);

struct TraceEntry {
  int L;
  Real value;
};

struct VerificationReport {
  IdentityCase input;
  Real lhs;
  Real rhs;
  Real abs_diff;
  Real rel_diff;
  int terms_used;
  bool pass;
  std::vector<TraceEntry> trace;
  /// ChebyshevGeneralNu only: the printed-RHS reading, for comparison.
  std::optional<Real> printed_rhs;
};

/// Sums identity_term for L = 0..lmax in ascending order (compensated) and
/// compares with identity_rhs; pass iff rel_diff <= tolerance.
VerificationReport verify_identity(const IdentityCase& c, const PrecisionContext& ctx, bool keep_trace = false);

/// sum_{L=0}^{lmax} (-1)^L C_L0(k) against 1.
VerificationReport clenshaw_sum_rule(const Rational& k, int lmax, const Rational& tolerance,
                                     const PrecisionContext& ctx);

/// The two closed forms of the coefficient of x^2h in P_L (L even).
enum class BraceForm {
  FromConstantTerm,  ///< (-1)^(L/2) 2^(-L/2) (L-1)!! (L/2+1/2)_h (-L/2)_h / (h! (L/2)! (1/2)_h)
  FromLeadingTerm,   ///< 2^-L C(2L,L) (1/2-L/2)_j (-L/2)_j / (j! (1/2-L)_j), j = L/2 - h
};

/// Exact; zero when L is odd or L < 2h.
Rational brace_factor_legendre(int L, int h, BraceForm form);

/// Maclaurin coefficient of x^(2h+nu) in J_nu(kx).
Real taylor_coefficient(const Rational& nu, int h, const Real& k, const PrecisionContext& ctx);

struct OracleRow {
  int h;
  Real gathered;
  Real taylor;
  Real rel_diff;
};

/// Expands every basis polynomial into monomials, weights by the expansion
/// coefficients and gathers the coefficient of x^(2h+nu), h = 0..hmax.
/// Requires lmax >= 2 hmax.
std::vector<OracleRow> power_gather_oracle(const ExpansionKind& kind, const Real& k, int hmax, int lmax,
                                           const PrecisionContext& ctx);

/// Truncation limit for `--lmax auto`: max(h_top + offset, h + floor), where
/// h_top is the largest h being verified and (offset, floor) are the
/// published term counts for the family and scale.
int auto_lmax(IdentityId id, const Rational& k, int h, int h_top);

}  // namespace bessum
