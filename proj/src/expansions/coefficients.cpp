#include <stdexcept>

#include "bessum/errors.hpp"
#include "bessum/expansions.hpp"
#include "bessum/hypergeom.hpp"
#include "bessum/special.hpp"

namespace bessum {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Real half_int(long twice, const PrecisionContext& ctx) { return ctx.make(make_rational(twice, 2)); }

Real minus_k2_over_4(const Real& k) { return -ldexp(k * k, -2); }

void require_nonnegative(int L) {
  if (L < 0) throw DomainError("coefficient index L must be nonnegative");
}

}  // namespace

void validate(const ExpansionKind& kind) {
  std::visit(overloaded{
                 [](const Legendre& e) {
                   if (e.order < 0) throw DomainError("Legendre order N must be nonnegative");
                 },
                 [](const Chebyshev& e) {
                   if (e.nu < 0) throw DomainError("Bessel order nu must be nonnegative");
                 },
                 [](const Gegenbauer& e) {
                   if (e.nu < 0) throw DomainError("Bessel order nu must be nonnegative");
                   validate(PolyKind{GegenbauerC{e.lambda}});
                 },
             },
             kind);
}

Rational bessel_order(const ExpansionKind& kind) {
  return std::visit(overloaded{
                        [](const Legendre& e) { return Rational(e.order); },
                        [](const Chebyshev& e) { return e.nu; },
                        [](const Gegenbauer& e) { return e.nu; },
                    },
                    kind);
}

PolyKind basis(const ExpansionKind& kind) {
  return std::visit(overloaded{
                        [](const Legendre&) { return PolyKind{LegendreP{}}; },
                        [](const Chebyshev&) { return PolyKind{ChebyshevT{}}; },
                        [](const Gegenbauer& e) { return PolyKind{GegenbauerC{e.lambda}}; },
                    },
                    kind);
}

int basis_degree(const ExpansionKind& kind, int L) { return std::holds_alternative<Legendre>(kind) ? L : 2 * L; }

int default_lmax(const ExpansionKind& kind) {
  if (const auto* e = std::get_if<Legendre>(&kind)) return 42 + e->order;
  return 21;
}

std::string kind_name(const ExpansionKind& kind) {
  return std::visit(overloaded{
                        [](const Legendre&) { return std::string("legendre"); },
                        [](const Chebyshev&) { return std::string("chebyshev"); },
                        [](const Gegenbauer&) { return std::string("gegenbauer"); },
                    },
                    kind);
}

Real legendre_coeff_general(int L, int N, const Real& k, const PrecisionContext& ctx) {
  require_nonnegative(L);
  if (N < 0) throw DomainError("Legendre order N must be nonnegative");
  if ((L + N) % 2 != 0) return ctx.zero();
  // i^(L-N) (1 + (-1)^(L+N)) = 2 (-1)^((L-N)/2) once L - N is even.
  const int sign = parity_sign((L - N) / 2);

  HyperSpec spec{{half_int(L + 1, ctx), half_int(L + 2, ctx)},
                 {half_int(2 * L + 3, ctx), half_int(L - N + 2, ctx), half_int(L + N + 2, ctx)},
                 minus_k2_over_4(k.with_precision(ctx.bits()))};
  Real value = eval_regularized_pFq(spec, ctx);
  value *= ctx.sqrt_pi();
  value *= 2L * L + 1;
  value *= factorial(L);
  value *= pow(k.with_precision(ctx.bits()), static_cast<long>(L));
  value = ldexp(value, -2L * L - 1);
  return sign < 0 ? -value : value;
}

Real legendre_coeff_reduced(int L, int N, const Real& k, const PrecisionContext& ctx) {
  require_nonnegative(L);
  if (N != 0 && N != 1) throw DomainError("reduced Legendre form exists only for N = 0, 1");
  if ((L + N) % 2 != 0) return ctx.zero();
  const int sign = parity_sign((L - N) / 2);
  const Real kk = k.with_precision(ctx.bits());

  HyperSpec spec = (N == 0)
                       ? HyperSpec{{half_int(L + 1, ctx)}, {half_int(L + 2, ctx), half_int(2 * L + 3, ctx)},
                                   minus_k2_over_4(kk)}
                       : HyperSpec{{half_int(L + 2, ctx)}, {half_int(L + 3, ctx), half_int(2 * L + 3, ctx)},
                                   minus_k2_over_4(kk)};
  Real value = eval_pFq(spec, ctx);
  value *= ctx.sqrt_pi();
  value *= 2L * L + 1;
  value *= binomial(L, (L - N) / 2);
  value *= pow(kk, static_cast<long>(L));
  value /= gamma(half_int(2 * L + 3, ctx), ctx);
  value = ldexp(value, -2L * L - 1);
  return sign < 0 ? -value : value;
}

Real legendre_coeff(int L, int N, const Real& k, const PrecisionContext& ctx) {
  return legendre_coeff_general(L, N, k, ctx);
}

Real chebyshev_coeff(int L, const Real& nu_in, const Real& k_in, const PrecisionContext& ctx) {
  require_nonnegative(L);
  if (nu_in < 0) throw DomainError("Bessel order nu must be nonnegative");
  const Real nu = nu_in.with_precision(ctx.bits());
  const Real k = k_in.with_precision(ctx.bits());

  HyperSpec spec{{half_int(2 * L + 1, ctx)}, {nu + (L + 1L), ctx.make(2L * L + 1)}, minus_k2_over_4(k)};
  Real value = eval_pFq(spec, ctx);
  value *= pow(k, 2L * L);
  // 2^(-4L-nu) with the (2 - delta_L0) factor folded into the power of two.
  value = ldexp(value, L == 0 ? 0 : -4L * L + 1);
  if (!nu.is_zero()) value /= pow(ctx.make(2), nu);
  value /= ctx.make(factorial(L));
  value /= gamma(nu + (L + 1L), ctx);
  return (L % 2 == 0) ? value : -value;
}

Real gegenbauer_coeff(int L, const Real& nu_in, const Real& lambda_in, const Real& k_in, const PrecisionContext& ctx) {
  require_nonnegative(L);
  if (nu_in < 0) throw DomainError("Bessel order nu must be nonnegative");
  const Real nu = nu_in.with_precision(ctx.bits());
  const Real lambda = lambda_in.with_precision(ctx.bits());
  if (!(lambda > ctx.make(make_rational(-1, 2))) || lambda.is_zero()) {
    throw DomainError("Gegenbauer parameter must satisfy lambda > -1/2, lambda != 0");
  }
  const Real k = k_in.with_precision(ctx.bits());
  const Real half = half_int(1, ctx);

  HyperSpec spec{{half_int(2 * L + 1, ctx)}, {lambda + (2L * L + 1), nu + (L + 1L)}, minus_k2_over_4(k)};
  Real value = eval_pFq(spec, ctx);
  value *= pow(k, 2L * L);
  value = ldexp(value, 2L * L);
  if (!nu.is_zero()) value /= pow(ctx.make(2), nu);
  value *= pochhammer(lambda + half, 2L * L, ctx);
  value /= ctx.sqrt_pi();
  value /= pochhammer(ldexp(lambda, 1), 2L * L, ctx);
  value /= pochhammer(ldexp(lambda, 1) + 2L * L, 2L * L, ctx);
  value /= pochhammer(half_int(2 * L + 1, ctx), nu + half, ctx);
  return (L % 2 == 0) ? value : -value;
}

Real expansion_coeff(const ExpansionKind& kind, int L, const Real& k, const PrecisionContext& ctx) {
  return std::visit(overloaded{
                        [&](const Legendre& e) { return legendre_coeff(L, e.order, k, ctx); },
                        [&](const Chebyshev& e) { return chebyshev_coeff(L, ctx.make(e.nu), k, ctx); },
                        [&](const Gegenbauer& e) {
                          return gegenbauer_coeff(L, ctx.make(e.nu), ctx.make(e.lambda), k, ctx);
                        },
                    },
                    kind);
}

CoefficientTable coefficient_table(const ExpansionKind& kind, const Real& k, int lmax, const PrecisionContext& ctx) {
  validate(kind);
  if (lmax < 0) throw DomainError("Lmax must be nonnegative");
  if (!(k > 0)) throw DomainError("scale k must be positive");
  CoefficientTable table{kind, k.with_precision(ctx.bits()), {}};
  table.entries.reserve(static_cast<std::size_t>(lmax) + 1);
  for (int L = 0; L <= lmax; ++L) table.entries.push_back(TableEntry{L, expansion_coeff(kind, L, k, ctx)});
  return table;
}

}  // namespace bessum
