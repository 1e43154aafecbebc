#include "bessum/errors.hpp"
#include "bessum/identities.hpp"
#include "bessum/orthopoly.hpp"

namespace bessum {

std::vector<OracleRow> power_gather_oracle(const ExpansionKind& kind, const Real& k, int hmax, int lmax,
                                           const PrecisionContext& ctx) {
  if (hmax < 0) throw DomainError("hmax must be nonnegative");
  if (lmax < 2 * hmax) throw DomainError("oracle needs Lmax >= 2 hmax");
  const CoefficientTable table = coefficient_table(kind, k, lmax, ctx);
  const Rational nu = bessel_order(kind);
  const bool legendre = std::holds_alternative<Legendre>(kind);
  const int shift = legendre ? static_cast<int>(nu.get_d()) : 0;

  std::vector<CompensatedSum> sums(hmax + 1, CompensatedSum(ctx.bits()));
  for (const auto& e : table.entries) {
    if (e.value.is_zero()) continue;
    const MonomialExpansion mono = monomial_coeffs(basis(kind), basis_degree(kind, e.L));
    for (int h = 0; h <= hmax; ++h) {
      const Rational& m = mono.at(2 * h + shift);
      if (m != 0) sums[h].add(e.value * m);
    }
  }

  const Real kr = k.with_precision(ctx.bits());
  const Real scale = (legendre || nu == 0) ? ctx.make(1) : pow(kr, ctx.make(nu));
  std::vector<OracleRow> rows;
  for (int h = 0; h <= hmax; ++h) {
    Real gathered = sums[h].value() * scale;
    Real taylor = taylor_coefficient(nu, h, kr, ctx);
    Real rel = abs(gathered - taylor) / abs(taylor);
    rows.push_back({h, gathered, taylor, rel});
  }
  return rows;
}

}  // namespace bessum
