#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <stdexcept>

#include "json.hpp"

#include "bessum/expansions.hpp"
#include "bessum/identities.hpp"
#include "bessum/rational.hpp"
#include "bessum/real.hpp"

namespace bessum::cli {

enum class OutputFormat { Text, Csv, Json };

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

/// Thrown for malformed command lines and parameter combinations.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exact parse of "3", "-0.25", "1e-33", "3/2", "2^-20".
Rational parse_exact(std::string_view text);
/// "5" -> {5, 5}; "0..42" -> {0, 42}.
std::pair<int, int> parse_h_range(std::string_view text);
OutputFormat parse_format(std::string_view text);

// Serialization. `digits` is the number of significant digits printed.
nlohmann::ordered_json table_json(const CoefficientTable& table, bool clenshaw, int digits,
                                  const PrecisionContext& ctx);
void write_table(std::ostream& os, const CoefficientTable& table, bool clenshaw, OutputFormat fmt, int digits,
                 const PrecisionContext& ctx);

nlohmann::ordered_json report_json(const VerificationReport& r, int digits, const PrecisionContext& ctx);
void write_reports(std::ostream& os, const std::vector<VerificationReport>& reports, OutputFormat fmt, int digits,
                   const PrecisionContext& ctx);

struct EvalResult {
  ExpansionKind kind;
  Rational k;
  Rational x;
  int lmax;
  Real expansion;
  Real reference;
  int agreeing;
};
void write_eval(std::ostream& os, const EvalResult& r, OutputFormat fmt, int digits, const PrecisionContext& ctx);

void write_oracle(std::ostream& os, const ExpansionKind& kind, const Rational& k, const std::vector<OracleRow>& rows,
                  OutputFormat fmt, int digits);

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bessum::cli
