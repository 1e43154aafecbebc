#include <random>

#include "bessum/errors.hpp"
#include "bessum/hypergeom.hpp"
#include "bessum/mpcore.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace bessum;

namespace {

Real q(const PrecisionContext& ctx, long n, long d = 1) { return ctx.make(make_rational(n, d)); }

Real tol_digits(const PrecisionContext& ctx, int lost) {
  return pow(ctx.make(10), static_cast<long>(lost - ctx.working_digits()));
}

}  // namespace

TEST_CASE("pFq at zero argument") {
  PrecisionContext ctx;
  HyperSpec s{{q(ctx, 3, 2), q(ctx, 7)}, {q(ctx, 2), q(ctx, 5, 3), q(ctx, 9)}, ctx.zero()};
  CHECK(eval_pFq(s, ctx) == ctx.make(1));
  HyperSpec r{{q(ctx, 1, 2)}, {q(ctx, 1), q(ctx, 3, 2)}, ctx.zero()};
  Real expect = ctx.make(2) / ctx.sqrt_pi();
  CHECK(oracle::rel_diff(eval_regularized_pFq(r, ctx), expect) <= tol_digits(ctx, 1));
}

TEST_CASE("1F2 against an exact rational partial sum") {
  PrecisionContext ctx;
  HyperSpec s{{q(ctx, 1, 2)}, {q(ctx, 1), q(ctx, 3, 2)}, q(ctx, -1, 4)};
  Rational exact = oracle::pfq_rational({make_rational(1, 2)}, {Rational(1), make_rational(3, 2)},
                                        make_rational(-1, 4), 200);
  PrecisionContext wide(100, 34);
  CHECK(oracle::rel_diff(eval_pFq(s, ctx), wide.make(exact).with_precision(ctx.bits())) <= tol_digits(ctx, 1));
}

TEST_CASE("1F2 at large negative argument") {
  PrecisionContext ctx;
  // k = 8: z = -16, the largest argument the tables need
  HyperSpec s{{q(ctx, 41, 2)}, {q(ctx, 22), q(ctx, 41)}, q(ctx, -16)};
  Rational exact = oracle::pfq_rational({make_rational(41, 2)}, {Rational(22), Rational(41)}, Rational(-16), 200);
  CHECK(oracle::rel_diff(eval_pFq(s, ctx), ctx.make(exact)) <= tol_digits(ctx, 2));
}

TEST_CASE("poles and divergence are rejected") {
  PrecisionContext ctx;
  HyperSpec s{{q(ctx, 1)}, {q(ctx, -2), q(ctx, 1)}, q(ctx, -1)};
  CHECK_THROWS_AS(eval_pFq(s, ctx), PoleError);
  HyperSpec d{{q(ctx, 1), q(ctx, 1), q(ctx, 1)}, {q(ctx, 2)}, q(ctx, 1, 2)};
  CHECK_THROWS_AS(eval_pFq(d, ctx), DomainError);
}

TEST_CASE("regularized series equals plain series over gamma products") {
  PrecisionContext ctx;
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> num(1, 60);
  std::uniform_int_distribution<int> den(1, 4);
  std::uniform_int_distribution<int> zn(-64, 0);
  for (int i = 0; i < 40; ++i) {
    std::vector<Real> a{q(ctx, num(rng), den(rng)), q(ctx, num(rng), den(rng))};
    std::vector<Real> b{q(ctx, num(rng), den(rng)), q(ctx, num(rng), den(rng)), q(ctx, num(rng), den(rng))};
    HyperSpec s{a, b, q(ctx, zn(rng), 4)};
    Real plain = eval_pFq(s, ctx);
    // Cancellation amplifies rounding by sum|t_m| / |sum t_m|, the same series at -z.
    HyperSpec mirrored{a, b, -s.z};
    Real cond = eval_pFq(mirrored, ctx) / abs(plain);
    for (const auto& bj : b) plain /= oracle::mpfr_gamma_of(bj);
    REQUIRE(oracle::rel_diff(eval_regularized_pFq(s, ctx), plain) <= cond * tol_digits(ctx, 3));
  }
}

TEST_CASE("regularized 2F3 with a zero lower parameter") {
  // 2F~3(1/2, 1; 3/2, 0, 2; -1/4): the m = 0 term vanishes.
  PrecisionContext ctx;
  HyperSpec s{{q(ctx, 1, 2), q(ctx, 1)}, {q(ctx, 3, 2), q(ctx, 0), q(ctx, 2)}, q(ctx, -1, 4)};
  SeriesSum r = sum_regularized_pFq(s, ctx);

  // sum_{m>=1} (1/2)_m (1)_m z^m / (m! Gamma(3/2+m) Gamma(m) Gamma(2+m)),
  // with Gamma(3/2+m) = (2m+1)!! sqrt(pi) / 2^(m+1)
  Rational sum = 0;
  const Rational z = make_rational(-1, 4);
  for (int m = 1; m < 60; ++m) {
    Rational t = pochhammer(make_rational(1, 2), m) * pochhammer(Rational(1), m) * oracle::rpow(z, m);
    t /= factorial(m) * factorial(m - 1) * factorial(m + 1);
    t /= double_factorial(2 * m + 1) / pow2(m + 1);
    sum += t;
  }
  Real expect = ctx.make(sum) / ctx.sqrt_pi();
  CHECK(r.value.is_finite());
  CHECK(oracle::rel_diff(r.value, expect) <= tol_digits(ctx, 2));
}

TEST_CASE("truncation tail is below the working tolerance") {
  PrecisionContext ctx;
  for (int L = 0; L <= 42; L += 6) {
    HyperSpec s{{q(ctx, 2 * L + 1, 2)}, {q(ctx, L + 1), q(ctx, 2 * L + 1)}, q(ctx, -16)};
    SeriesSum r = sum_pFq(s, ctx);
    Real longer = eval_pFq_truncated(s, r.terms + 20, ctx);
    REQUIRE(abs(r.value - longer) <= abs(r.value) * tol_digits(ctx, 2));
  }
}
