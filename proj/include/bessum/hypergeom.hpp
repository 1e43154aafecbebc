#pragma once

#include <cstddef>
#include <vector>

#include "bessum/real.hpp"

namespace bessum {

/// Parameters of pFq(a_1..a_p; b_1..b_q; z). Every series used here has
/// p <= q, so it converges for all finite z.
struct HyperSpec {
  std::vector<Real> upper;
  std::vector<Real> lower;
  Real z;
};

struct SeriesSum {
  Real value;
  /// Magnitude of the last term added; bounds the truncation error of the
  /// alternating tails met in practice.
  Real last_term;
  std::size_t terms;
};

/// Plain series sum_m prod(a_i)_m / prod(b_j)_m z^m / m!.
///
/// Stops once three consecutive terms fall below
/// 10^-(working_digits + 5) * max(1, |partial sum|). Throws PoleError when a
/// lower parameter is a nonpositive integer (use the regularized variant).
SeriesSum sum_pFq(const HyperSpec& spec, const PrecisionContext& ctx);
Real eval_pFq(const HyperSpec& spec, const PrecisionContext& ctx);

/// Exactly `terms` terms (m = 0 .. terms-1) of the plain series.
Real eval_pFq_truncated(const HyperSpec& spec, std::size_t terms, const PrecisionContext& ctx);

/// Regularized series sum_m prod(a_i)_m z^m / m! * prod 1/Gamma(b_j + m).
///
/// Finite for any real lower parameters: leading terms at poles are exactly
/// zero and summation starts at the first nonvanishing index. Never stops
/// before m exceeds max(0, ceil(-min b_j)) + 3.
SeriesSum sum_regularized_pFq(const HyperSpec& spec, const PrecisionContext& ctx);
Real eval_regularized_pFq(const HyperSpec& spec, const PrecisionContext& ctx);

}  // namespace bessum
