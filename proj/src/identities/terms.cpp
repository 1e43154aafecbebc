#include <algorithm>
#include <array>
#include <stdexcept>

#include "bessum/errors.hpp"
#include "bessum/hypergeom.hpp"
#include "bessum/identities.hpp"
#include "bessum/special.hpp"

namespace bessum {

namespace {

struct NamedIdentity {
  IdentityId id;
  std::string_view name;
};

constexpr std::array<NamedIdentity, 8> kNames{{
    {IdentityId::LegendreJ0, "legendre-j0"},
    {IdentityId::LegendreJ1, "legendre-j1"},
    {IdentityId::ChebyshevEven, "chebyshev-even"},
    {IdentityId::ChebyshevOdd, "chebyshev-odd"},
    {IdentityId::ChebyshevGeneralNu, "chebyshev-nu"},
    {IdentityId::GegenbauerNu0, "gegenbauer-nu0"},
    {IdentityId::GegenbauerGeneral, "gegenbauer"},
    {IdentityId::ClenshawSumRule, "clenshaw-sum-rule"},
}};

bool is_gegenbauer(IdentityId id) { return id == IdentityId::GegenbauerNu0 || id == IdentityId::GegenbauerGeneral; }

Real hyp1f2(const Real& a, const Real& b1, const Real& b2, const Real& z, const PrecisionContext& ctx) {
  return eval_pFq(HyperSpec{{a}, {b1, b2}, z}, ctx);
}

Real half_int(long twice, const PrecisionContext& ctx) { return ctx.make(make_rational(twice, 2)); }

// -k^2/4, or +k^2/4 for the modified-Bessel variant.
Real series_argument(const IdentityCase& c, const PrecisionContext& ctx) {
  Real k = ctx.make(c.k);
  Real z = ldexp(k * k, -2);
  return c.sign_flip ? z : -z;
}

// Written for k -> i kappa: the k-power of each summand contributes (-1)^p.
int sign_flip_factor(const IdentityCase& c, int L) {
  if (!c.sign_flip) return 1;
  switch (c.id) {
    case IdentityId::LegendreJ0:
      return parity_sign(L / 2);
    case IdentityId::LegendreJ1:
      return parity_sign((L - 1) / 2);
    default:
      return parity_sign(L);
  }
}

// (1/2 - L)_j (-L)_j / (j! (1 - 2L)_j): coefficient ratio of x^2h in T_2L, j = L - h.
Rational chebyshev_power_ratio(int L, int j) {
  Rational r = pochhammer(make_rational(1 - 2 * L, 2), j) * pochhammer(Rational(-L), j);
  r /= factorial(j) * pochhammer(Rational(1 - 2 * L), j);
  return r;
}

// (-L)_h (lambda+1/2)_2L (L+lambda)_h / (h! (1/2)_h (L+lambda) (2 lambda)_2L (2L+2 lambda)_2L B(lambda, L+1))
// with B(lambda, L+1) = L! / (lambda)_(L+1), exact for rational lambda.
Rational gegenbauer_power_ratio(int L, int h, const Rational& lambda) {
  const Rational beta = factorial(L) / pochhammer(lambda, L + 1);
  Rational num = pochhammer(Rational(-L), h) * pochhammer(lambda + make_rational(1, 2), 2 * L) *
                 pochhammer(lambda + L, h);
  Rational den = factorial(h) * pochhammer(make_rational(1, 2), h) * (lambda + L) * pochhammer(2 * lambda, 2 * L) *
                 pochhammer(2 * lambda + 2 * L, 2 * L) * beta;
  Rational r = num / den;
  r.canonicalize();
  return r;
}

Real legendre_j0_term(const IdentityCase& c, int L, const PrecisionContext& ctx) {
  if (L % 2 != 0 || L < 2 * c.h) return ctx.zero();
  const Real k = ctx.make(c.k);
  Rational exact = 2 * (2 * L + 1) * binomial(L, L / 2) * brace_factor_legendre(L, c.h, BraceForm::FromLeadingTerm);
  Real term = ctx.sqrt_pi() * exact;
  term = ldexp(term, -2L * L - 2);
  term /= gamma(half_int(2 * L + 3, ctx), ctx);
  term *= pow(k, static_cast<long>(L));
  term *= hyp1f2(half_int(L + 1, ctx), half_int(L + 2, ctx), half_int(2 * L + 3, ctx), series_argument(c, ctx), ctx);
  return parity_sign(L / 2) < 0 ? -term : term;
}

// a_L1(k) times the coefficient of x^(2h+1) in P_L.
Real legendre_j1_term(const IdentityCase& c, int L, const PrecisionContext& ctx) {
  if (L % 2 == 0) return ctx.zero();
  const int j = (L - 1) / 2 - c.h;
  if (j < 0) return ctx.zero();
  const Real k = ctx.make(c.k);
  Rational exact = 2 * (2 * L + 1) * binomial(L, (L - 1) / 2) * binomial(2L * L, L) / factorial(j);
  exact *= pochhammer(make_rational(1 - L, 2), j) * pochhammer(make_rational(-L, 2), j) /
           pochhammer(make_rational(1 - 2 * L, 2), j);
  Real term = ctx.sqrt_pi() * exact;
  term = ldexp(term, -3L * L - 2);
  term /= gamma(half_int(2 * L + 3, ctx), ctx);
  term *= pow(k, static_cast<long>(L));
  term *= hyp1f2(half_int(L + 2, ctx), half_int(L + 3, ctx), half_int(2 * L + 3, ctx), series_argument(c, ctx), ctx);
  return parity_sign((L - 1) / 2) < 0 ? -term : term;
}

// Chebyshev families share one shape; nu enters through Gamma(L+nu+1) and k^(2L+nu).
Real chebyshev_term(const IdentityCase& c, int L, const Real& nu, const PrecisionContext& ctx) {
  const int j = L - c.h;
  if (j < 0) return ctx.zero();
  const Real k = ctx.make(c.k);
  Rational exact = chebyshev_power_ratio(L, j) / factorial(L);
  Real term = ctx.make(exact);
  term = ldexp(term, -2L * L);
  if (!nu.is_zero()) {
    term /= pow(ctx.make(2), nu);
    term *= pow(k, nu);
  }
  term /= gamma(nu + (L + 1L), ctx);
  term *= pow(k, 2L * L);
  term *= hyp1f2(half_int(2 * L + 1, ctx), ctx.make(2L * L + 1), nu + (L + 1L), series_argument(c, ctx), ctx);
  return (L % 2 == 0) ? term : -term;
}

Real gegenbauer_term(const IdentityCase& c, int L, const Real& nu, const PrecisionContext& ctx) {
  if (L < c.h) return ctx.zero();
  const Real k = ctx.make(c.k);
  const Real lambda = ctx.make(c.lambda);
  Real term = ctx.make(gegenbauer_power_ratio(L, c.h, c.lambda));
  term = ldexp(term, 2L * L);
  if (!nu.is_zero()) {
    term /= pow(ctx.make(2), nu);
    term *= pow(k, nu);
  }
  term /= ctx.sqrt_pi();
  term /= pochhammer(half_int(2 * L + 1, ctx), nu + half_int(1, ctx), ctx);
  term *= pow(k, 2L * L);
  term *= hyp1f2(half_int(2 * L + 1, ctx), lambda + (2L * L + 1), nu + (L + 1L), series_argument(c, ctx), ctx);
  return term;
}

Real clenshaw_term(const IdentityCase& c, int L, const PrecisionContext& ctx) {
  // (-1)^L C_L0(k) = k^2L 2^(-4L) (2 - delta_L0) / (L!)^2 1F2(L+1/2; L+1, 2L+1; -k^2/4)
  const Real k = ctx.make(c.k);
  Real term = ctx.make(Rational(1) / (factorial(L) * factorial(L)));
  term = ldexp(term, L == 0 ? 0 : -4L * L + 1);
  term *= pow(k, 2L * L);
  term *= hyp1f2(half_int(2 * L + 1, ctx), ctx.make(L + 1L), ctx.make(2L * L + 1), series_argument(c, ctx), ctx);
  return term;
}

}  // namespace

std::string_view identity_name(IdentityId id) {
  for (const auto& n : kNames) {
    if (n.id == id) return n.name;
  }
  return "unknown";
}

std::optional<IdentityId> parse_identity(std::string_view name) {
  for (const auto& n : kNames) {
    if (n.name == name) return n.id;
  }
  return std::nullopt;
}

std::vector<IdentityId> all_identities() {
  std::vector<IdentityId> out;
  for (const auto& n : kNames) out.push_back(n.id);
  return out;
}

Rational identity_order(const IdentityCase& c) {
  switch (c.id) {
    case IdentityId::LegendreJ1:
    case IdentityId::ChebyshevOdd:
      return Rational(1);
    case IdentityId::ChebyshevGeneralNu:
    case IdentityId::GegenbauerGeneral:
      return c.nu;
    default:
      return Rational(0);
  }
}

void validate(const IdentityCase& c) {
  if (c.h < 0) throw DomainError("h must be a nonnegative integer");
  if (c.lmax < c.h) throw DomainError("Lmax must be at least h");
  if (c.k <= 0) throw DomainError("scale k must be positive");
  if (c.tolerance <= 0) throw DomainError("tolerance must be positive");
  if (c.nu < 0) throw DomainError("Bessel order nu must be nonnegative");
  if (is_gegenbauer(c.id) && (c.lambda <= make_rational(-1, 2) || c.lambda == 0)) {
    throw DomainError("Gegenbauer parameter must satisfy lambda > -1/2, lambda != 0");
  }
  if (c.id == IdentityId::ClenshawSumRule && c.h != 0) throw DomainError("the sum rule has h = 0 only");
}

Real identity_term(const IdentityCase& c, int L, const PrecisionContext& ctx) {
  if (L < 0) throw DomainError("summation index L must be nonnegative");
  Real term = [&]() {
    switch (c.id) {
      case IdentityId::LegendreJ0:
        return legendre_j0_term(c, L, ctx);
      case IdentityId::LegendreJ1:
        return legendre_j1_term(c, L, ctx);
      case IdentityId::ChebyshevEven:
        return chebyshev_term(c, L, ctx.zero(), ctx);
      case IdentityId::ChebyshevOdd:
        return chebyshev_term(c, L, ctx.make(1), ctx);
      case IdentityId::ChebyshevGeneralNu:
        return chebyshev_term(c, L, ctx.make(c.nu), ctx);
      case IdentityId::GegenbauerNu0:
        return gegenbauer_term(c, L, ctx.zero(), ctx);
      case IdentityId::GegenbauerGeneral:
        return gegenbauer_term(c, L, ctx.make(c.nu), ctx);
      case IdentityId::ClenshawSumRule:
        return clenshaw_term(c, L, ctx);
    }
    throw std::logic_error("unhandled identity");
  }();
  return sign_flip_factor(c, L) < 0 ? -term : term;
}

Real identity_rhs(const IdentityCase& c, const PrecisionContext& ctx) {
  if (c.id == IdentityId::ClenshawSumRule) return ctx.make(1);
  Real rhs = taylor_coefficient(identity_order(c), c.h, ctx.make(c.k), ctx);
  if (c.sign_flip && c.h % 2 != 0) rhs = -rhs;
  return rhs;
}

Real chebyshev_nu_rhs_printed(const IdentityCase& c, const PrecisionContext& ctx) {
  Real rhs = taylor_coefficient(Rational(1), c.h, ctx.make(c.k), ctx);
  if (c.sign_flip && c.h % 2 != 0) rhs = -rhs;
  return rhs;
}

Rational brace_factor_legendre(int L, int h, BraceForm form) {
  if (L < 0 || h < 0) throw DomainError("brace factor needs L, h >= 0");
  if (L % 2 != 0 || L < 2 * h) return Rational(0);
  const int n = L / 2;
  Rational r;
  if (form == BraceForm::FromConstantTerm) {
    r = parity_sign(n) * pow2(-n) * double_factorial(L - 1) * pochhammer(make_rational(L + 1, 2), h) *
        pochhammer(Rational(-n), h);
    r /= factorial(h) * factorial(n) * pochhammer(make_rational(1, 2), h);
  } else {
    const int j = n - h;
    r = pow2(-L) * binomial(2L * L, L) * pochhammer(make_rational(1 - L, 2), j) * pochhammer(Rational(-n), j);
    r /= factorial(j) * pochhammer(make_rational(1 - 2 * L, 2), j);
  }
  r.canonicalize();
  return r;
}

Real taylor_coefficient(const Rational& nu, int h, const Real& k_in, const PrecisionContext& ctx) {
  const Real k = k_in.with_precision(ctx.bits());
  const Real nu_r = ctx.make(nu);
  Real v = pow(ldexp(k, -1), 2L * h);
  if (nu != 0) v *= pow(ldexp(k, -1), nu_r);
  v /= ctx.make(factorial(h));
  v /= gamma(nu_r + (h + 1L), ctx);
  return (h % 2 == 0) ? v : -v;
}

int auto_lmax(IdentityId id, const Rational& k, int h, int h_top) {
  struct Prescription {
    int offset;
    int floor;
  };
  const Prescription generic{80, 80};
  Prescription p = generic;
  switch (id) {
    case IdentityId::LegendreJ0:
    case IdentityId::LegendreJ1:
      p = {74, 44};
      break;
    case IdentityId::ChebyshevEven:
    case IdentityId::ClenshawSumRule:
      if (k <= 5) {
        p = {15, 20};
      } else if (k <= 8) {
        p = {18, 24};
      }
      break;
    case IdentityId::ChebyshevOdd:
      if (k <= 5) {
        p = {16, 20};
      } else if (k <= 8) {
        p = {20, 23};
      }
      break;
    default:
      break;
  }
  return std::max(h_top + p.offset, h + p.floor);
}

}  // namespace bessum
