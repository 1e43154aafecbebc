#include "bessum/hypergeom.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "bessum/errors.hpp"
#include "bessum/special.hpp"

namespace bessum {

namespace {

constexpr int kNegligibleRun = 3;
constexpr std::size_t kMaxTerms = 1000000;

bool is_nonpositive_integer(const Real& b) { return b.is_integer() && b <= 0; }

// term_{m+1} = term_m * prod(a_i + m) / prod(b_j + m) * z / (m + 1)
void advance(Real& term, const HyperSpec& spec, long m) {
  for (const Real& a : spec.upper) term *= a + m;
  for (const Real& b : spec.lower) term /= b + m;
  term *= spec.z;
  term /= m + 1;
}

// Relative to the partial sum, so tiny regularized values keep full precision.
bool negligible(const Real& term, const Real& partial, const PrecisionContext& ctx) {
  if (term.is_zero()) return true;
  return abs(term) < ctx.series_tolerance() * abs(partial);
}

// Sums from index `start` with first term `term`, never stopping before `floor_index`.
SeriesSum run_series(const HyperSpec& spec, Real term, long start, long floor_index,
                     const PrecisionContext& ctx) {
  Real sum = ctx.zero();
  int run = 0;
  std::size_t count = 0;
  for (long m = start;; ++m) {
    sum += term;
    ++count;
    if (negligible(term, sum, ctx) && m >= floor_index) {
      if (++run >= kNegligibleRun) break;
    } else {
      run = 0;
    }
    if (count > kMaxTerms) throw std::runtime_error("hypergeometric series failed to converge");
    advance(term, spec, m);
  }
  return SeriesSum{sum, abs(term), count};
}

}  // namespace

SeriesSum sum_pFq(const HyperSpec& spec, const PrecisionContext& ctx) {
  for (const Real& b : spec.lower) {
    if (is_nonpositive_integer(b)) {
      throw PoleError("pFq: lower parameter " + std::to_string(b.to_long()) +
                      " is a pole; use the regularized series");
    }
  }
  if (spec.upper.size() > spec.lower.size() + 1) {
    throw DomainError("pFq: p > q + 1 diverges for all z != 0");
  }
  return run_series(spec, ctx.make(1), 0, 0, ctx);
}

Real eval_pFq(const HyperSpec& spec, const PrecisionContext& ctx) { return sum_pFq(spec, ctx).value; }

Real eval_pFq_truncated(const HyperSpec& spec, std::size_t terms, const PrecisionContext& ctx) {
  for (const Real& b : spec.lower) {
    if (is_nonpositive_integer(b)) throw PoleError("pFq: lower parameter is a pole");
  }
  Real sum = ctx.zero();
  Real term = ctx.make(1);
  for (std::size_t m = 0; m < terms; ++m) {
    sum += term;
    advance(term, spec, static_cast<long>(m));
  }
  return sum;
}

SeriesSum sum_regularized_pFq(const HyperSpec& spec, const PrecisionContext& ctx) {
  if (spec.upper.size() > spec.lower.size() + 1) {
    throw DomainError("pFq: p > q + 1 diverges for all z != 0");
  }
  // First index at which every 1/Gamma(b_j + m) is off its pole.
  long start = 0;
  double min_lower = 0.0;
  for (const Real& b : spec.lower) {
    min_lower = std::min(min_lower, b.to_double());
    if (is_nonpositive_integer(b)) start = std::max(start, 1 - b.to_long());
  }
  const long floor_index = static_cast<long>(std::ceil(-min_lower)) + kNegligibleRun;

  // term_start = prod (a_i)_start z^start / start! * prod 1/Gamma(b_j + start)
  Real term = ctx.make(1);
  for (const Real& a : spec.upper) term *= pochhammer(a, start, ctx);
  if (start > 0) {
    term *= pow(spec.z, start);
    for (long i = 2; i <= start; ++i) term /= i;
  }
  for (const Real& b : spec.lower) term *= reciprocal_gamma(b + start, ctx);

  if (term.is_zero() && spec.z.is_zero()) {
    return SeriesSum{ctx.zero(), ctx.zero(), 1};
  }
  return run_series(spec, std::move(term), start, floor_index, ctx);
}

Real eval_regularized_pFq(const HyperSpec& spec, const PrecisionContext& ctx) {
  return sum_regularized_pFq(spec, ctx).value;
}

}  // namespace bessum
