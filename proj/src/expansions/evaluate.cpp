#include "bessum/errors.hpp"
#include "bessum/expansions.hpp"

namespace bessum {

namespace {

// (kx)^nu; integer nu allows negative x.
Real order_prefactor(const Rational& nu, const Real& kx, const PrecisionContext& ctx) {
  if (nu == 0) return ctx.make(1);
  if (is_integer(nu)) return pow(kx, nu.get_num().get_si());
  if (kx.sign() < 0) throw DomainError("non-integer order needs x >= 0");
  return pow(kx, ctx.make(nu));
}

}  // namespace

Real eval_expansion(const CoefficientTable& table, const Real& x_in, const PrecisionContext& ctx) {
  const Real x = x_in.with_precision(ctx.bits());
  if (abs(x) > 1) throw DomainError("expansion argument must lie in [-1, 1]");
  const Rational nu = bessel_order(table.kind);
  const bool legendre = std::holds_alternative<Legendre>(table.kind);
  if (!legendre && !is_integer(nu) && x.sign() < 0) throw DomainError("non-integer order needs x >= 0");

  const PolyKind poly = basis(table.kind);
  CompensatedSum sum(ctx.bits());
  for (const TableEntry& entry : table.entries) {
    if (entry.value.is_zero()) continue;
    sum.add(entry.value * eval_poly(poly, basis_degree(table.kind, entry.L), x, ctx));
  }
  Real value = sum.value();
  if (legendre) return value;
  return value * order_prefactor(nu, table.k * x, ctx);
}

Real eval_expansion(const ExpansionKind& kind, const Real& k, const Real& x, int lmax, const PrecisionContext& ctx) {
  if (abs(x) > 1) throw DomainError("expansion argument must lie in [-1, 1]");
  const Rational nu = bessel_order(kind);
  if (!std::holds_alternative<Legendre>(kind) && !is_integer(nu) && x.sign() < 0) {
    throw DomainError("non-integer order needs x >= 0");
  }
  return eval_expansion(coefficient_table(kind, k, lmax, ctx), x, ctx);
}

}  // namespace bessum
