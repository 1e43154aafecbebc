#include <ostream>

#include "bessum/cli.hpp"
#include "bessum/format.hpp"

namespace bessum::cli {

namespace {

using nlohmann::ordered_json;

// Diagnostics such as relative differences need few digits.
constexpr int kDiffDigits = 6;

ordered_json kind_params(const ExpansionKind& kind) {
  ordered_json j;
  j["kind"] = kind_name(kind);
  j["nu"] = to_string(bessel_order(kind));
  if (const auto* g = std::get_if<Gegenbauer>(&kind)) {
    j["lambda"] = to_string(g->lambda);
  } else {
    j["lambda"] = nullptr;
  }
  return j;
}

// Parameters print without padding zeros: 8 rather than 8.000...
std::string compact(const Real& v, int digits) {
  std::string s = format_decimal(v, digits);
  const auto e = s.find('e');
  std::string mantissa = s.substr(0, e);
  const std::string exponent = e == std::string::npos ? "" : s.substr(e);
  if (mantissa.find('.') != std::string::npos) {
    while (mantissa.back() == '0') mantissa.pop_back();
    if (mantissa.back() == '.') mantissa.pop_back();
  }
  return mantissa + exponent;
}

std::string lambda_text(const ExpansionKind& kind) {
  if (const auto* g = std::get_if<Gegenbauer>(&kind)) return " lambda=" + to_string(g->lambda);
  return "";
}

// Clenshaw tables print k^nu C_L with the L = 0 entry doubled.
Real displayed(const CoefficientTable& t, const TableEntry& e, bool clenshaw, const PrecisionContext& ctx) {
  if (!clenshaw) return e.value;
  Real v = e.value;
  const Rational nu = bessel_order(t.kind);
  if (nu != 0) v *= pow(t.k.with_precision(ctx.bits()), ctx.make(nu));
  if (e.L == 0) v = ldexp(v, 1);
  return v;
}

bool uses_nu(IdentityId id) { return id == IdentityId::ChebyshevGeneralNu || id == IdentityId::GegenbauerGeneral; }
bool uses_lambda(IdentityId id) { return id == IdentityId::GegenbauerNu0 || id == IdentityId::GegenbauerGeneral; }

}  // namespace

ordered_json table_json(const CoefficientTable& table, bool clenshaw, int digits, const PrecisionContext& ctx) {
  ordered_json j = kind_params(table.kind);
  j["k"] = compact(table.k, digits);
  j["convention"] = clenshaw ? "clenshaw" : "plain";
  ordered_json entries = ordered_json::array();
  for (const auto& e : table.entries) {
    entries.push_back({{"L", e.L}, {"value", format_decimal(displayed(table, e, clenshaw, ctx), digits)}});
  }
  j["entries"] = std::move(entries);
  return j;
}

void write_table(std::ostream& os, const CoefficientTable& table, bool clenshaw, OutputFormat fmt, int digits,
                 const PrecisionContext& ctx) {
  switch (fmt) {
    case OutputFormat::Json:
      os << table_json(table, clenshaw, digits, ctx).dump(2) << '\n';
      return;
    case OutputFormat::Csv:
      os << "L,value\n";
      for (const auto& e : table.entries) {
        os << e.L << ',' << format_decimal(displayed(table, e, clenshaw, ctx), digits) << '\n';
      }
      return;
    case OutputFormat::Text:
      os << "# " << kind_name(table.kind) << " nu=" << to_string(bessel_order(table.kind)) << lambda_text(table.kind)
         << " k=" << compact(table.k, digits) << " convention=" << (clenshaw ? "clenshaw" : "plain") << '\n';
      for (const auto& e : table.entries) {
        os << e.L << '\t' << format_decimal(displayed(table, e, clenshaw, ctx), digits) << '\n';
      }
      return;
  }
}

ordered_json report_json(const VerificationReport& r, int digits, const PrecisionContext& ctx) {
  const IdentityCase& c = r.input;
  ordered_json params;
  params["h"] = c.h;
  params["k"] = to_string(c.k);
  if (uses_nu(c.id)) params["nu"] = to_string(c.nu);
  if (uses_lambda(c.id)) params["lambda"] = to_string(c.lambda);
  params["lmax"] = c.lmax;
  params["tolerance"] = to_string(c.tolerance);
  params["sign_flip"] = c.sign_flip;

  ordered_json j;
  j["id"] = std::string(identity_name(c.id));
  j["params"] = std::move(params);
  j["lhs"] = format_decimal(r.lhs, digits);
  j["rhs"] = format_decimal(r.rhs, digits);
  j["rel_diff"] = format_decimal(r.rel_diff, kDiffDigits);
  j["terms_used"] = r.terms_used;
  j["pass"] = r.pass;
  if (r.printed_rhs) j["printed_rhs"] = format_decimal(*r.printed_rhs, digits);
  if (!r.trace.empty()) {
    ordered_json trace = ordered_json::array();
    for (const auto& t : r.trace) trace.push_back({{"L", t.L}, {"value", format_decimal(t.value, digits)}});
    j["trace"] = std::move(trace);
  }
  (void)ctx;
  return j;
}

void write_reports(std::ostream& os, const std::vector<VerificationReport>& reports, OutputFormat fmt, int digits,
                   const PrecisionContext& ctx) {
  if (fmt == OutputFormat::Json) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : reports) arr.push_back(report_json(r, digits, ctx));
    os << arr.dump(2) << '\n';
    return;
  }
  if (fmt == OutputFormat::Csv) {
    os << "id,h,k,lmax,terms_used,lhs,rhs,rel_diff,pass\n";
    for (const auto& r : reports) {
      os << identity_name(r.input.id) << ',' << r.input.h << ',' << to_string(r.input.k) << ',' << r.input.lmax << ','
         << r.terms_used << ',' << format_decimal(r.lhs, digits) << ',' << format_decimal(r.rhs, digits) << ','
         << format_decimal(r.rel_diff, kDiffDigits) << ',' << (r.pass ? "pass" : "fail") << '\n';
    }
    return;
  }
  int passed = 0;
  for (const auto& r : reports) {
    const IdentityCase& c = r.input;
    os << identity_name(c.id) << " h=" << c.h << " k=" << to_string(c.k);
    if (uses_nu(c.id)) os << " nu=" << to_string(c.nu);
    if (uses_lambda(c.id)) os << " lambda=" << to_string(c.lambda);
    if (c.sign_flip) os << " sign-flip";
    os << " lmax=" << c.lmax << '\n';
    for (const auto& t : r.trace) os << "  L=" << t.L << '\t' << format_decimal(t.value, digits) << '\n';
    os << "  lhs      " << format_decimal(r.lhs, digits) << '\n';
    os << "  rhs      " << format_decimal(r.rhs, digits) << '\n';
    if (r.printed_rhs) os << "  rhs(nu=1 form) " << format_decimal(*r.printed_rhs, digits) << '\n';
    os << "  rel_diff " << format_decimal(r.rel_diff, kDiffDigits) << "  terms=" << r.terms_used << "  "
       << (r.pass ? "PASS" : "FAIL") << '\n';
    if (r.pass) ++passed;
  }
  os << passed << '/' << reports.size() << " passed\n";
}

void write_eval(std::ostream& os, const EvalResult& r, OutputFormat fmt, int digits, const PrecisionContext& ctx) {
  (void)ctx;
  if (fmt == OutputFormat::Json) {
    ordered_json j = kind_params(r.kind);
    j["k"] = to_string(r.k);
    j["x"] = to_string(r.x);
    j["lmax"] = r.lmax;
    j["expansion"] = format_decimal(r.expansion, digits);
    j["reference"] = format_decimal(r.reference, digits);
    j["agreeing_digits"] = r.agreeing;
    os << j.dump(2) << '\n';
    return;
  }
  if (fmt == OutputFormat::Csv) {
    os << "expansion,reference,agreeing_digits\n"
       << format_decimal(r.expansion, digits) << ',' << format_decimal(r.reference, digits) << ',' << r.agreeing
       << '\n';
    return;
  }
  os << "expansion  " << format_decimal(r.expansion, digits) << '\n';
  os << "reference  " << format_decimal(r.reference, digits) << '\n';
  os << "agreeing digits  " << r.agreeing << '\n';
}

void write_oracle(std::ostream& os, const ExpansionKind& kind, const Rational& k, const std::vector<OracleRow>& rows,
                  OutputFormat fmt, int digits) {
  if (fmt == OutputFormat::Json) {
    ordered_json j = kind_params(kind);
    j["k"] = to_string(k);
    ordered_json arr = ordered_json::array();
    for (const auto& r : rows) {
      arr.push_back({{"h", r.h},
                     {"gathered", format_decimal(r.gathered, digits)},
                     {"taylor", format_decimal(r.taylor, digits)},
                     {"rel_diff", format_decimal(r.rel_diff, kDiffDigits)}});
    }
    j["rows"] = std::move(arr);
    os << j.dump(2) << '\n';
    return;
  }
  const char sep = fmt == OutputFormat::Csv ? ',' : '\t';
  os << "h" << sep << "gathered" << sep << "taylor" << sep << "rel_diff\n";
  for (const auto& r : rows) {
    os << r.h << sep << format_decimal(r.gathered, digits) << sep << format_decimal(r.taylor, digits) << sep
       << format_decimal(r.rel_diff, kDiffDigits) << '\n';
  }
}

}  // namespace bessum::cli
