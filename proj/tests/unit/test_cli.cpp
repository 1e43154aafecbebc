#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "bessum/cli.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace bessum;
using bessum::cli::parse_exact;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "bessum");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

// Round a plain or scientific decimal string to `sig` significant digits,
// half to even, working purely on the digit string.
std::string round_digits(const std::string& digits, std::size_t sig) {
  std::string head = digits.substr(0, sig);
  const std::string tail = digits.substr(sig);
  bool up = false;
  if (!tail.empty()) {
    if (tail[0] > '5') {
      up = true;
    } else if (tail[0] == '5') {
      up = tail.find_first_not_of('0', 1) != std::string::npos || ((head.back() - '0') % 2 == 1);
    }
  }
  if (up) {
    int i = static_cast<int>(head.size()) - 1;
    while (i >= 0 && head[i] == '9') head[i--] = '0';
    if (i >= 0) {
      ++head[i];
    } else {
      head.insert(head.begin(), '1');
      head.pop_back();
    }
  }
  return head;
}

std::string significant(const std::string& s) {
  std::string d;
  for (char c : s.substr(0, s.find('e'))) {
    if (std::isdigit(static_cast<unsigned char>(c))) d += c;
  }
  return d.substr(std::min(d.find_first_not_of('0'), d.size()));
}

}  // namespace

TEST_CASE("exact parameter parsing") {
  CHECK(parse_exact("0.25") == make_rational(1, 4));
  CHECK(parse_exact("025") == 25);
  CHECK(parse_exact("-1.5e3") == -1500);
  CHECK(parse_exact("1e-33") == Rational(Integer(1), Integer("1" + std::string(33, '0'))));
  CHECK(parse_exact("3/2") == make_rational(3, 2));
  CHECK(parse_exact("2^-20") == make_rational(1, 1048576));
  CHECK(parse_exact("2^20") == 1048576);
  CHECK(parse_exact(".5") == make_rational(1, 2));
  CHECK_THROWS_AS(parse_exact("abc"), cli::UsageError);
  CHECK_THROWS_AS(parse_exact("1/0"), cli::UsageError);
  CHECK_THROWS_AS(parse_exact(""), cli::UsageError);
  CHECK(cli::parse_h_range("0..42") == std::pair<int, int>{0, 42});
  CHECK(cli::parse_h_range("7") == std::pair<int, int>{7, 7});
  CHECK_THROWS_AS(cli::parse_h_range("5..2"), cli::UsageError);
}

TEST_CASE("coeffs command") {
  auto r = run({"coeffs", "--kind", "chebyshev", "--nu", "0", "--k", "8", "--lmax", "21", "--digits", "34",
                "--convention", "clenshaw", "--format", "csv"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("0,0.3154559429497802391275502330199159\n") != std::string::npos);

  auto leg = run({"coeffs", "--kind", "legendre", "--N", "0", "--k", "1", "--lmax", "3", "--format", "csv"});
  CHECK(leg.out == "L,value\n0,0.9197304100897602393144211940806200\n1,0\n"
                   "2,-0.1579420586258518875737139671443637\n3,0\n");

  auto geg = run({"coeffs", "--kind", "gegenbauer", "--nu", "1", "--lambda", "0.25", "--k", "1", "--lmax", "0",
                  "--digits", "33", "--format", "json"});
  auto j = nlohmann::json::parse(geg.out);
  CHECK(j["entries"][0]["value"] == "0.475683429275416807386224265471041");
  CHECK(j["lambda"] == "1/4");
  CHECK(j["convention"] == "plain");
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({"coeffs", "--kind", "legendre", "--convention", "clenshaw"}).code == 2);
  CHECK(run({"coeffs", "--kind", "bogus"}).code == 2);
  CHECK(run({"coeffs", "--kind", "gegenbauer", "--lambda", "0"}).code == 2);
  CHECK(run({"verify", "--id", "nope"}).code == 2);
  CHECK(run({"verify", "--id", "chebyshev-even", "--h", "5", "--lmax", "2"}).code == 2);
  CHECK(run({"eval", "--kind", "chebyshev", "--x", "2"}).code == 2);
  CHECK(run({"oracle", "--kind", "chebyshev", "--hmax", "5", "--lmax", "3"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  auto bad = run({"coeffs", "--kind", "chebyshev", "--k", "x"});
  CHECK(bad.code == 2);
  CHECK(bad.out.empty());
  CHECK_FALSE(bad.err.empty());
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("verify exit codes") {
  auto ok = run({"verify", "--id", "legendre-j0", "--h", "1", "--k", "1", "--lmax", "75", "--tol", "1e-33"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("rhs      -0.2500000000000000000000000000000000") != std::string::npos);
  auto fail = run({"verify", "--id", "chebyshev-even", "--h", "0..3", "--k", "8", "--lmax", "10"});
  CHECK(fail.code == 1);
  auto range = run({"verify", "--id", "chebyshev-even", "--h", "0..42", "--k", "8", "--lmax", "auto", "--tol",
                    "1e-33", "--format", "json"});
  CHECK(range.code == 0);
  auto arr = nlohmann::json::parse(range.out);
  CHECK(arr.size() == 43);
  for (const auto& rep : arr) CHECK(rep["pass"] == true);

  auto trace = run({"verify", "--id", "gegenbauer-nu0", "--h", "1", "--k", "1", "--lambda", "1048576", "--lmax", "7",
                    "--tol", "1e-25", "--trace", "--format", "json"});
  CHECK(trace.code == 0);
  auto t = nlohmann::json::parse(trace.out)[0];
  CHECK(t["trace"].size() == 8);
  CHECK(t["trace"][1]["value"].get<std::string>().rfind("-0.24999995529664875664569456808574", 0) == 0);
  for (const char* key : {"id", "params", "lhs", "rhs", "rel_diff", "terms_used", "pass"}) CHECK(t.contains(key));
}

TEST_CASE("eval and oracle commands") {
  auto e = run({"eval", "--kind", "chebyshev", "--nu", "0", "--k", "1", "--x", "1", "--format", "json"});
  REQUIRE(e.code == 0);
  auto j = nlohmann::json::parse(e.out);
  CHECK(j["agreeing_digits"].get<int>() >= 33);
  CHECK(j["expansion"].get<std::string>().rfind("0.765197686557966551449717526102663", 0) == 0);
  auto g = run({"eval", "--kind", "gegenbauer", "--lambda", "1/4", "--x", "1", "--format", "json"});
  CHECK(nlohmann::json::parse(g.out)["agreeing_digits"].get<int>() >= 33);
  auto zero = run({"eval", "--kind", "legendre", "--x", "0", "--format", "json"});
  CHECK(nlohmann::json::parse(zero.out)["reference"] == "1.000000000000000000000000000000000");

  auto o = run({"oracle", "--kind", "chebyshev", "--k", "1", "--hmax", "5", "--lmax", "30", "--format", "json"});
  REQUIRE(o.code == 0);
  auto rows = nlohmann::json::parse(o.out)["rows"];
  CHECK(rows.size() == 6);
  auto l = run({"oracle", "--kind", "legendre", "--hmax", "1", "--lmax", "44", "--format", "csv"});
  CHECK(l.out.find("\n1,-0.2500000000000000000000000000000000,") != std::string::npos);
  auto gg = run({"oracle", "--kind", "gegenbauer", "--lambda", "4", "--hmax", "0", "--lmax", "21", "--format", "csv"});
  CHECK(gg.out.find("\n0,1.000000000000000000000000000000000,") != std::string::npos);
}

TEST_CASE("json output round trips byte for byte") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"coeffs", "--kind", "gegenbauer", "--lambda", "2^-20", "--nu", "3/2", "--format", "json"},
           {"verify", "--id", "chebyshev-odd", "--h", "0..3", "--k", "5", "--format", "json", "--trace"},
           {"oracle", "--kind", "legendre", "--N", "1", "--hmax", "3", "--lmax", "20", "--format", "json"}}) {
    auto r = run(args);
    REQUIRE(r.code == 0);
    auto parsed = nlohmann::ordered_json::parse(r.out);
    CHECK(parsed.dump(2) + "\n" == r.out);
  }
}

TEST_CASE("fewer digits are a rounding of more digits") {
  for (int d : {5, 17, 34}) {
    auto shortr = run({"coeffs", "--kind", "chebyshev", "--k", "8", "--digits", std::to_string(d), "--format", "json"});
    auto longr =
        run({"coeffs", "--kind", "chebyshev", "--k", "8", "--digits", std::to_string(d + 10), "--format", "json"});
    auto a = nlohmann::json::parse(shortr.out)["entries"];
    auto b = nlohmann::json::parse(longr.out)["entries"];
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      const std::string sa = significant(a[i]["value"].get<std::string>());
      const std::string sb = significant(b[i]["value"].get<std::string>());
      CHECK(round_digits(sb, static_cast<std::size_t>(d)) == sa);
    }
  }
}

TEST_CASE("--out writes the same bytes") {
  const auto path = std::filesystem::temp_directory_path() / "bessum_cli_out_test.txt";
  auto r = run({"coeffs", "--kind", "chebyshev", "--k", "5", "--out", path.string()});
  REQUIRE(r.code == 0);
  std::ifstream in(path, std::ios::binary);
  std::stringstream file;
  file << in.rdbuf();
  CHECK(file.str() == r.out);
  std::filesystem::remove(path);
}
