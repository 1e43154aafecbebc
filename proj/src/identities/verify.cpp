#include "bessum/identities.hpp"

namespace bessum {

VerificationReport verify_identity(const IdentityCase& c, const PrecisionContext& ctx, bool keep_trace) {
  validate(c);
  CompensatedSum sum(ctx.bits());
  std::vector<TraceEntry> trace;
  for (int L = 0; L <= c.lmax; ++L) {
    Real t = identity_term(c, L, ctx);
    if (keep_trace) trace.push_back({L, t});
    sum.add(t);
  }
  Real lhs = sum.value();
  Real rhs = identity_rhs(c, ctx);
  Real diff = abs(lhs - rhs);
  Real rel = rhs.is_zero() ? diff : diff / abs(rhs);
  const bool pass = rel <= ctx.make(c.tolerance);

  VerificationReport r{c, lhs, rhs, diff, rel, c.lmax + 1, pass, std::move(trace), std::nullopt};
  if (c.id == IdentityId::ChebyshevGeneralNu) r.printed_rhs = chebyshev_nu_rhs_printed(c, ctx);
  return r;
}

VerificationReport clenshaw_sum_rule(const Rational& k, int lmax, const Rational& tolerance,
                                     const PrecisionContext& ctx) {
  IdentityCase c;
  c.id = IdentityId::ClenshawSumRule;
  c.k = k;
  c.lmax = lmax;
  c.tolerance = tolerance;
  return verify_identity(c, ctx);
}

}  // namespace bessum
