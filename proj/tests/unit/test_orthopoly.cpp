#include <random>

#include "bessum/errors.hpp"
#include "bessum/mpcore.hpp"
#include "bessum/orthopoly.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace bessum;

TEST_CASE("point values") {
  PrecisionContext ctx;
  CHECK(eval_poly(LegendreP{}, 2, ctx.make(1), ctx) == ctx.make(1));
  CHECK(eval_poly(ChebyshevT{}, 2, ctx.make(make_rational(1, 2)), ctx) == ctx.make(make_rational(-1, 2)));
  CHECK(eval_poly(GegenbauerC{make_rational(1, 4)}, 2, ctx.zero(), ctx) == ctx.make(make_rational(-1, 4)));
  CHECK(eval_poly(ChebyshevT{}, 0, ctx.make(make_rational(3, 10)), ctx) == ctx.make(1));
}

TEST_CASE("small monomial expansions") {
  auto t0 = monomial_coeffs(ChebyshevT{}, 0);
  REQUIRE(t0.coeffs.size() == 1);
  CHECK(t0.at(0) == 1);

  auto p2 = monomial_coeffs(LegendreP{}, 2);
  CHECK(p2.at(0) == make_rational(-1, 2));
  CHECK(p2.at(1) == 0);
  CHECK(p2.at(2) == make_rational(3, 2));

  auto c2 = monomial_coeffs(GegenbauerC{make_rational(1, 4)}, 2);
  CHECK(c2.at(0) == make_rational(-1, 4));
  CHECK(c2.at(2) == make_rational(5, 8));
  CHECK(c2.at(7) == 0);
}

TEST_CASE("monomial coefficients match the exact recurrences") {
  const int nmax = 50;
  const auto p = oracle::legendre_monomials(nmax);
  const auto t = oracle::chebyshev_monomials(nmax);
  for (const auto lam : {make_rational(1, 4), Rational(4), make_rational(-1, 3), make_rational(1, 1048576)}) {
    const auto c = oracle::gegenbauer_monomials(nmax, lam);
    for (int n = 0; n <= nmax; ++n) {
      auto mc = monomial_coeffs(GegenbauerC{lam}, n);
      for (int j = 0; j <= n; ++j) REQUIRE(mc.at(j) == c[n][j]);
    }
  }
  for (int n = 0; n <= nmax; ++n) {
    auto mp = monomial_coeffs(LegendreP{}, n);
    auto mt = monomial_coeffs(ChebyshevT{}, n);
    CHECK(mp.degree == n);
    for (int j = 0; j <= n; ++j) {
      REQUIRE(mp.at(j) == p[n][j]);
      REQUIRE(mt.at(j) == t[n][j]);
    }
  }
}

TEST_CASE("recurrence evaluation agrees with the monomial form") {
  PrecisionContext ctx;
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> num(-1000, 1000);
  const Real tol = pow(ctx.make(10), static_cast<long>(3 - ctx.working_digits()));
  const std::vector<PolyKind> kinds{LegendreP{}, ChebyshevT{}, GegenbauerC{make_rational(1, 4)},
                                    GegenbauerC{Rational(4)}};
  for (const auto& kind : kinds) {
    for (int n = 0; n <= 50; n += 7) {
      auto mono = monomial_coeffs(kind, n);
      for (int i = 0; i < 20; ++i) {
        Real x = ctx.make(make_rational(num(rng), 1000));
        Real a = eval_poly(kind, n, x, ctx);
        Real b = eval_monomials(mono, x, ctx);
        // cancellation in the monomial form grows with n; compare on the O(1) scale
        Real scale = abs(a) > ctx.make(1) ? abs(a) : ctx.make(1);
        REQUIRE(abs(a - b) <= tol * scale * pow(ctx.make(2), static_cast<long>(2 * n)));
      }
    }
  }
}

TEST_CASE("values at x = 1") {
  PrecisionContext ctx;
  const Rational lam = make_rational(1, 4);
  for (int n = 0; n <= 30; ++n) {
    CHECK(eval_poly(LegendreP{}, n, ctx.make(1), ctx) == ctx.make(1));
    CHECK(eval_poly(ChebyshevT{}, n, ctx.make(1), ctx) == ctx.make(1));
    Rational expect = pochhammer(2 * lam, n) / factorial(n);
    Rational sum = 0;
    for (const auto& c : monomial_coeffs(GegenbauerC{lam}, n).coeffs) sum += c;
    CHECK(sum == expect);
  }
}

TEST_CASE("parity and constant terms") {
  const Rational lam = make_rational(3, 7);
  for (int L = 0; L <= 20; ++L) {
    auto t = monomial_coeffs(ChebyshevT{}, 2 * L);
    CHECK(t.at(0) == parity_sign(L));
    auto c = monomial_coeffs(GegenbauerC{lam}, 2 * L);
    CHECK(c.at(0) == parity_sign(L) * pochhammer(lam, L) / factorial(L));
    // (-1)^L / ((L+lambda) B(lambda, L+1)) with B = L!/(lambda)_(L+1)
    CHECK(c.at(0) == parity_sign(L) * pochhammer(lam, L + 1) / (factorial(L) * (lam + L)));
    for (int j = 1; j < 2 * L; j += 2) {
      CHECK(t.at(j) == 0);
      CHECK(c.at(j) == 0);
    }
    int nonzero = 0;
    for (const auto& v : t.coeffs) nonzero += (v != 0);
    CHECK(nonzero <= L + 1);
  }
}

TEST_CASE("invalid Gegenbauer parameters") {
  CHECK_THROWS_AS(validate(PolyKind{GegenbauerC{Rational(0)}}), DomainError);
  CHECK_THROWS_AS(validate(PolyKind{GegenbauerC{make_rational(-1, 2)}}), DomainError);
  CHECK_NOTHROW(validate(PolyKind{GegenbauerC{make_rational(-1, 4)}}));
  PrecisionContext ctx;
  CHECK_THROWS_AS(eval_poly(GegenbauerC{Rational(0)}, 2, ctx.zero(), ctx), DomainError);
}
