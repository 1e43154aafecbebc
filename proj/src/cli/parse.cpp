#include <regex>
#include <string>

#include "bessum/cli.hpp"

namespace bessum::cli {

namespace {

Rational power_of(const Rational& base, long e) {
  if (e < 0 && base == 0) throw UsageError("zero to a negative power");
  Rational r = 1;
  const Rational b = e < 0 ? Rational(1 / base) : base;
  for (long i = 0; i < (e < 0 ? -e : e); ++i) r *= b;
  return r;
}

long parse_long(std::string_view text) {
  static const std::regex re(R"([+-]?\d+)");
  const std::string s(text);
  if (!std::regex_match(s, re)) throw UsageError("expected an integer, got '" + s + "'");
  try {
    return std::stol(s);
  } catch (const std::out_of_range&) {
    throw UsageError("integer out of range: '" + s + "'");
  }
}

Rational parse_decimal(std::string_view text) {
  static const std::regex re(R"(([+-]?)(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d+))?)");
  const std::string s(text);
  std::smatch m;
  if (!std::regex_match(s, m, re) || (m[2].length() == 0 && m[3].length() == 0)) {
    throw UsageError("not a number: '" + s + "'");
  }
  const std::string int_part = m[2].str();
  const std::string frac_part = m[3].str();
  const long exponent = m[4].matched ? parse_long(m[4].str()) : 0;
  Integer digits(int_part + frac_part, 10);
  Rational r(digits);
  r *= power_of(Rational(10), exponent - static_cast<long>(frac_part.size()));
  if (m[1].str() == "-") r = -r;
  r.canonicalize();
  return r;
}

}  // namespace

Rational parse_exact(std::string_view text) {
  if (text.empty()) throw UsageError("empty number");
  if (auto caret = text.find('^'); caret != std::string_view::npos) {
    return power_of(parse_exact(text.substr(0, caret)), parse_long(text.substr(caret + 1)));
  }
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Rational num = parse_decimal(text.substr(0, slash));
    Rational den = parse_decimal(text.substr(slash + 1));
    if (den == 0) throw UsageError("zero denominator");
    Rational r = num / den;
    r.canonicalize();
    return r;
  }
  return parse_decimal(text);
}

std::pair<int, int> parse_h_range(std::string_view text) {
  int lo = 0;
  int hi = 0;
  if (auto dots = text.find(".."); dots != std::string_view::npos) {
    lo = static_cast<int>(parse_long(text.substr(0, dots)));
    hi = static_cast<int>(parse_long(text.substr(dots + 2)));
  } else {
    lo = hi = static_cast<int>(parse_long(text));
  }
  if (lo < 0 || hi < lo) throw UsageError("bad h range '" + std::string(text) + "'");
  return {lo, hi};
}

OutputFormat parse_format(std::string_view text) {
  if (text == "text") return OutputFormat::Text;
  if (text == "csv") return OutputFormat::Csv;
  if (text == "json") return OutputFormat::Json;
  throw UsageError("unknown format '" + std::string(text) + "'");
}

}  // namespace bessum::cli
