#include "bessum/orthopoly.hpp"

#include <stdexcept>

#include "bessum/errors.hpp"

namespace bessum {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Terminating sum over x^(n-2j), j = 0..floor(n/2), of
// lead * (a)_j (b)_j / (j! (c)_j), with a = -n/2, b = (1-n)/2.
MonomialExpansion descending_2f1(int n, const Rational& lead, const Rational& c) {
  MonomialExpansion out;
  out.degree = n;
  out.coeffs.assign(static_cast<std::size_t>(n) + 1, Rational(0));
  const Rational a = make_rational(-n, 2);
  const Rational b = make_rational(1 - n, 2);
  Rational ratio(1);
  for (int j = 0; 2 * j <= n; ++j) {
    if (j > 0) {
      ratio *= (a + (j - 1)) * (b + (j - 1));
      ratio /= Rational(j) * (c + (j - 1));
    }
    out.coeffs[static_cast<std::size_t>(n - 2 * j)] = lead * ratio;
  }
  return out;
}

// Terminating sum over x^(2m + offset) of lead * (-L)_m (e)_m / (m! (c)_m).
MonomialExpansion ascending_2f1(int n, int L, const Rational& e, const Rational& c, const Rational& lead) {
  MonomialExpansion out;
  out.degree = n;
  out.coeffs.assign(static_cast<std::size_t>(n) + 1, Rational(0));
  const int offset = n - 2 * L;
  Rational ratio(1);
  for (int m = 0; m <= L; ++m) {
    if (m > 0) {
      ratio *= Rational(m - 1 - L) * (e + (m - 1));
      ratio /= Rational(m) * (c + (m - 1));
    }
    out.coeffs[static_cast<std::size_t>(2 * m + offset)] = lead * ratio;
  }
  return out;
}

MonomialExpansion legendre_monomials(int n) {
  Rational lead = pow2(-n) * binomial(2L * n, n);
  return descending_2f1(n, lead, make_rational(1 - 2 * n, 2));
}

MonomialExpansion chebyshev_monomials(int n) {
  if (n == 0) return MonomialExpansion{0, {Rational(1)}};
  // The [1 + delta_n0] factor only matters at n = 0, where the sum is
  // 2^-1 * 2 = 1; for n >= 1 the lead is 2^(n-1).
  return descending_2f1(n, pow2(n - 1), Rational(1 - n));
}

MonomialExpansion gegenbauer_monomials(int n, const Rational& lambda) {
  const int L = n / 2;
  const int sign = parity_sign(L);
  if (n % 2 == 0) {
    Rational lead = sign * pochhammer(lambda, L) / factorial(L);
    return ascending_2f1(n, L, lambda + L, make_rational(1, 2), lead);
  }
  Rational lead = 2 * sign * pochhammer(lambda, L + 1) / factorial(L);
  return ascending_2f1(n, L, lambda + L + 1, make_rational(3, 2), lead);
}

}  // namespace

void validate(const PolyKind& kind) {
  if (const auto* g = std::get_if<GegenbauerC>(&kind)) {
    if (g->lambda <= make_rational(-1, 2) || g->lambda == 0) {
      throw DomainError("Gegenbauer parameter must satisfy lambda > -1/2, lambda != 0");
    }
  }
}

Real eval_poly(const PolyKind& kind, int n, const Real& x_in, const PrecisionContext& ctx) {
  if (n < 0) throw DomainError("polynomial degree must be nonnegative");
  validate(kind);
  const Real x = x_in.with_precision(ctx.bits());
  Real prev = ctx.make(1);
  if (n == 0) return prev;

  return std::visit(
      overloaded{
          [&](const LegendreP&) {
            Real cur = x;
            // (m+1) P_{m+1} = (2m+1) x P_m - m P_{m-1}
            for (int m = 1; m < n; ++m) {
              Real next = (x * cur * (2L * m + 1) - prev * m) / (m + 1L);
              prev = std::move(cur);
              cur = std::move(next);
            }
            return cur;
          },
          [&](const ChebyshevT&) {
            Real cur = x;
            for (int m = 1; m < n; ++m) {
              Real next = ldexp(x * cur, 1) - prev;
              prev = std::move(cur);
              cur = std::move(next);
            }
            return cur;
          },
          [&](const GegenbauerC& g) {
            const Real lambda = ctx.make(g.lambda);
            Real cur = ldexp(lambda * x, 1);
            // (m+1) C_{m+1} = 2 (m+lambda) x C_m - (m + 2 lambda - 1) C_{m-1}
            for (int m = 1; m < n; ++m) {
              Real next = (ldexp((lambda + m) * x * cur, 1) - (ldexp(lambda, 1) + (m - 1L)) * prev) / (m + 1L);
              prev = std::move(cur);
              cur = std::move(next);
            }
            return cur;
          },
      },
      kind);
}

MonomialExpansion monomial_coeffs(const PolyKind& kind, int n) {
  if (n < 0) throw DomainError("polynomial degree must be nonnegative");
  validate(kind);
  return std::visit(overloaded{
                        [&](const LegendreP&) { return legendre_monomials(n); },
                        [&](const ChebyshevT&) { return chebyshev_monomials(n); },
                        [&](const GegenbauerC& g) { return gegenbauer_monomials(n, g.lambda); },
                    },
                    kind);
}

Real eval_monomials(const MonomialExpansion& expansion, const Real& x, const PrecisionContext& ctx) {
  Real acc = ctx.zero();
  for (int j = expansion.degree; j >= 0; --j) {
    acc *= x;
    acc += ctx.make(expansion.at(j));
  }
  return acc;
}

}  // namespace bessum
