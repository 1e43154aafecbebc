#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "bessum/cli.hpp"
#include "bessum/errors.hpp"
#include "bessum/format.hpp"

namespace bessum::cli {

namespace {

struct CommonOptions {
  int digits = PrecisionContext::kDefaultDisplayDigits;
  int working_digits = 0;  // 0: max(64, digits + 30)
  std::string format = "text";
  std::string out_path;

  void attach(CLI::App* app) {
    app->add_option("--digits", digits, "significant digits printed")->check(CLI::Range(1, 10000));
    app->add_option("--working-digits", working_digits, "working precision in decimal digits");
    app->add_option("--format", format, "text, csv or json");
    app->add_option("--out", out_path, "also write stdout bytes to this file");
  }

  PrecisionContext context() const {
    const int working = working_digits > 0 ? working_digits : std::max(PrecisionContext::kDefaultWorkingDigits, digits + 30);
    if (working < digits + PrecisionContext::kMinGuardDigits) throw UsageError("--working-digits must exceed --digits by at least 10");
    return PrecisionContext(working, digits);
  }
};

struct KindOptions {
  std::string kind = "chebyshev";
  int order = 0;
  std::string nu = "0";
  std::string lambda;

  void attach(CLI::App* app) {
    app->add_option("--kind", kind, "legendre, chebyshev or gegenbauer")->required();
    app->add_option("--N", order, "Bessel order for the Legendre kind");
    app->add_option("--nu", nu, "Bessel order for Chebyshev and Gegenbauer kinds");
    app->add_option("--lambda", lambda, "Gegenbauer parameter");
  }

  ExpansionKind build() const {
    ExpansionKind k;
    if (kind == "legendre") {
      k = Legendre{order};
    } else if (kind == "chebyshev") {
      k = Chebyshev{parse_exact(nu)};
    } else if (kind == "gegenbauer") {
      if (lambda.empty()) throw UsageError("gegenbauer needs --lambda");
      k = Gegenbauer{parse_exact(nu), parse_exact(lambda)};
    } else {
      throw UsageError("unknown kind '" + kind + "'");
    }
    if (kind != "gegenbauer" && !lambda.empty()) throw UsageError("--lambda applies to gegenbauer only");
    validate(k);
    return k;
  }
};

int cmd_coeffs(const CommonOptions& common, const KindOptions& kopt, const std::string& k_text, int lmax,
               const std::string& convention, std::ostream& out) {
  const ExpansionKind kind = kopt.build();
  if (convention != "plain" && convention != "clenshaw") throw UsageError("convention must be plain or clenshaw");
  const bool clenshaw = convention == "clenshaw";
  if (clenshaw && !std::holds_alternative<Chebyshev>(kind)) {
    throw UsageError("the clenshaw convention applies to chebyshev tables only");
  }
  const PrecisionContext ctx = common.context();
  const Rational k = parse_exact(k_text);
  const int limit = lmax >= 0 ? lmax : default_lmax(kind);
  const CoefficientTable table = coefficient_table(kind, ctx.make(k), limit, ctx);
  write_table(out, table, clenshaw, parse_format(common.format), common.digits, ctx);
  return kExitOk;
}

struct VerifyOptions {
  std::string id;
  std::string h = "0";
  std::string k = "1";
  std::string nu = "0";
  std::string lambda;
  std::string lmax = "auto";
  std::string tol = "1e-33";
  bool sign_flip = false;
  bool trace = false;
};

int cmd_verify(const CommonOptions& common, const VerifyOptions& v, std::ostream& out) {
  const auto id = parse_identity(v.id);
  if (!id) throw UsageError("unknown identity '" + v.id + "'");
  const auto [h_lo, h_hi] = parse_h_range(v.h);
  const PrecisionContext ctx = common.context();

  IdentityCase base;
  base.id = *id;
  base.k = parse_exact(v.k);
  base.nu = parse_exact(v.nu);
  if (!v.lambda.empty()) base.lambda = parse_exact(v.lambda);
  base.tolerance = parse_exact(v.tol);
  base.sign_flip = v.sign_flip;

  std::vector<IdentityCase> cases;
  for (int h = h_lo; h <= h_hi; ++h) {
    IdentityCase c = base;
    c.h = h;
    if (v.lmax == "auto") {
      c.lmax = auto_lmax(c.id, c.k, h, h_hi);
    } else {
      const Rational n = parse_exact(v.lmax);
      if (!is_integer(n)) throw UsageError("--lmax must be an integer or 'auto'");
      c.lmax = static_cast<int>(n.get_num().get_si());
    }
    validate(c);
    cases.push_back(c);
  }

  std::vector<VerificationReport> reports;
  for (const auto& c : cases) reports.push_back(verify_identity(c, ctx, v.trace));
  write_reports(out, reports, parse_format(common.format), common.digits, ctx);
  const bool all = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; });
  return all ? kExitOk : kExitFailed;
}

int cmd_eval(const CommonOptions& common, const KindOptions& kopt, const std::string& k_text,
             const std::string& x_text, int lmax, std::ostream& out) {
  const ExpansionKind kind = kopt.build();
  const PrecisionContext ctx = common.context();
  const Rational k = parse_exact(k_text);
  const Rational x = parse_exact(x_text);
  if (k <= 0) throw UsageError("--k must be positive");
  const int limit = lmax >= 0 ? lmax : default_lmax(kind);
  const Real kr = ctx.make(k);
  const Real xr = ctx.make(x);
  Real value = eval_expansion(kind, kr, xr, limit, ctx);
  Real ref = bessel_j_ref(ctx.make(bessel_order(kind)), kr * xr, ctx);
  const int agree = agreeing_digits(value, ref, ctx.working_digits());
  write_eval(out, EvalResult{kind, k, x, limit, value, ref, agree}, parse_format(common.format), common.digits, ctx);
  return kExitOk;
}

int cmd_oracle(const CommonOptions& common, const KindOptions& kopt, const std::string& k_text, int hmax, int lmax,
               std::ostream& out) {
  const ExpansionKind kind = kopt.build();
  const PrecisionContext ctx = common.context();
  const Rational k = parse_exact(k_text);
  if (k <= 0) throw UsageError("--k must be positive");
  const auto rows = power_gather_oracle(kind, ctx.make(k), hmax, lmax, ctx);
  write_oracle(out, kind, k, rows, parse_format(common.format), common.digits);
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bessel expansion coefficients and summed 1F2 series"};
  app.set_help_flag("--help", "print help");
  app.require_subcommand(1);

  CommonOptions coeffs_common;
  KindOptions coeffs_kind;
  std::string coeffs_k = "1";
  int coeffs_lmax = -1;
  std::string convention = "plain";
  CLI::App* coeffs = app.add_subcommand("coeffs", "print an expansion coefficient table");
  coeffs_common.attach(coeffs);
  coeffs_kind.attach(coeffs);
  coeffs->add_option("--k", coeffs_k, "scale k");
  coeffs->add_option("--lmax", coeffs_lmax, "last coefficient index");
  coeffs->add_option("--convention", convention, "plain or clenshaw");

  CommonOptions verify_common;
  VerifyOptions vopt;
  CLI::App* verify = app.add_subcommand("verify", "verify a summed series family");
  verify_common.attach(verify);
  verify->add_option("--id", vopt.id, "identity family")->required();
  verify->add_option("--h", vopt.h, "power index h or range lo..hi");
  verify->add_option("--k", vopt.k, "scale k");
  verify->add_option("--nu", vopt.nu, "Bessel order (general families)");
  verify->add_option("--lambda", vopt.lambda, "Gegenbauer parameter");
  verify->add_option("--lmax", vopt.lmax, "last L summed, or auto");
  verify->add_option("--tol", vopt.tol, "relative tolerance");
  verify->add_flag("--sign-flip", vopt.sign_flip, "modified Bessel variant");
  verify->add_flag("--trace", vopt.trace, "print every summand");

  CommonOptions eval_common;
  KindOptions eval_kind;
  std::string eval_k = "1";
  std::string eval_x = "1";
  int eval_lmax = -1;
  CLI::App* eval = app.add_subcommand("eval", "evaluate a truncated expansion against the Bessel series");
  eval_common.attach(eval);
  eval_kind.attach(eval);
  eval->add_option("--k", eval_k, "scale k");
  eval->add_option("--x", eval_x, "point in [-1, 1]");
  eval->add_option("--lmax", eval_lmax, "last coefficient index");

  CommonOptions oracle_common;
  KindOptions oracle_kind;
  std::string oracle_k = "1";
  int hmax = 0;
  int oracle_lmax = 0;
  CLI::App* oracle = app.add_subcommand("oracle", "gather monomial coefficients from the expansion");
  oracle_common.attach(oracle);
  oracle_kind.attach(oracle);
  oracle->add_option("--k", oracle_k, "scale k");
  oracle->add_option("--hmax", hmax, "largest h")->required();
  oracle->add_option("--lmax", oracle_lmax, "last coefficient index")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  const CommonOptions* common = &coeffs_common;
  if (verify->parsed()) common = &verify_common;
  if (eval->parsed()) common = &eval_common;
  if (oracle->parsed()) common = &oracle_common;

  std::ostringstream buffer;
  int code = kExitOk;
  try {
    if (coeffs->parsed()) {
      code = cmd_coeffs(coeffs_common, coeffs_kind, coeffs_k, coeffs_lmax, convention, buffer);
    } else if (verify->parsed()) {
      code = cmd_verify(verify_common, vopt, buffer);
    } else if (eval->parsed()) {
      code = cmd_eval(eval_common, eval_kind, eval_k, eval_x, eval_lmax, buffer);
    } else {
      code = cmd_oracle(oracle_common, oracle_kind, oracle_k, hmax, oracle_lmax, buffer);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  const std::string bytes = buffer.str();
  out << bytes;
  if (!common->out_path.empty()) {
    std::ofstream file(common->out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << common->out_path << '\n';
      return kExitUsage;
    }
    file << bytes;
  }
  return code;
}

}  // namespace bessum::cli
