#include "bessum/format.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace bessum {

std::string format_decimal(const Real& v, int sig_digits) {
  if (sig_digits < 1) throw std::invalid_argument("format_decimal: need at least one digit");
  if (!v.is_finite()) throw std::domain_error("format_decimal: non-finite value");
  if (v.is_zero()) return "0";

  mpfr_exp_t exp10 = 0;
  char* raw = mpfr_get_str(nullptr, &exp10, 10, static_cast<std::size_t>(sig_digits), v.get(), MPFR_RNDN);
  std::string digits(raw);
  mpfr_free_str(raw);

  std::string out;
  if (digits.front() == '-') {
    out.push_back('-');
    digits.erase(0, 1);
  }
  // value = 0.d1d2... * 10^exp10, so the scientific exponent is exp10 - 1.
  const long sci = static_cast<long>(exp10) - 1;
  if (sci >= -5 && sci < sig_digits) {
    if (sci < 0) {
      out += "0.";
      out.append(static_cast<std::size_t>(-sci - 1), '0');
      out += digits;
    } else {
      const auto int_len = static_cast<std::size_t>(sci + 1);
      out += digits.substr(0, int_len);
      if (digits.size() > int_len) {
        out.push_back('.');
        out += digits.substr(int_len);
      }
    }
    return out;
  }
  out.push_back(digits[0]);
  if (digits.size() > 1) {
    out.push_back('.');
    out += digits.substr(1);
  }
  out.push_back('e');
  if (sci >= 0) out.push_back('+');
  out += std::to_string(sci);
  return out;
}

Real parse_real(std::string_view text, mpfr_prec_t bits) {
  Real out(bits);
  const std::string s(text);
  if (mpfr_set_str(out.get(), s.c_str(), 10, MPFR_RNDN) != 0) {
    throw std::invalid_argument("not a decimal literal: " + s);
  }
  return out;
}

int agreeing_digits(const Real& value, const Real& reference, int max_digits) {
  Real diff = abs(value - reference);
  if (diff.is_zero()) return max_digits;
  double scale = log10_abs(diff);
  if (!reference.is_zero()) scale -= log10_abs(reference);
  const double digits = std::floor(-scale);
  const int by_size = static_cast<int>(std::clamp(digits, 0.0, static_cast<double>(max_digits)));
  if (reference.is_zero() || value.is_zero()) return by_size;
  // Rounding can make the displayed strings coincide one digit further.
  const int probe = std::min(max_digits, by_size + 2);
  for (int n = probe; n > by_size; --n) {
    if (format_decimal(value, n) == format_decimal(reference, n)) return n;
  }
  return by_size;
}

}  // namespace bessum
