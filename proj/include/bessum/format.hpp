#pragma once

#include <string>
#include <string_view>

#include "bessum/real.hpp"

namespace bessum {

/// Decimal string with exactly `sig_digits` significant digits, correctly
/// rounded (ties to even).
///
/// Values with decimal exponent in [-5, sig_digits) print positionally
/// ("0.250", "0.00002919..."); anything else prints as "d.ddd...e-64".
/// Zero prints as "0".
std::string format_decimal(const Real& v, int sig_digits);

/// Parse a decimal literal ("-2.5e-3") into a value at the given precision.
Real parse_real(std::string_view text, mpfr_prec_t bits);

/// Number of significant digits on which `value` agrees with `reference`:
/// floor(-log10(|value - reference| / |reference|)), raised to the largest n
/// at which both round to the same n-digit string, clamped to [0, max_digits].
/// Absolute difference is used when the reference is zero.
int agreeing_digits(const Real& value, const Real& reference, int max_digits);

}  // namespace bessum
