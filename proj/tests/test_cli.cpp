#include <doctest.h>

#include <cstdlib>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"

using qparity::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

struct EnvVar {
  const char* name;
  EnvVar(const char* n, const char* value) : name(n) { ::setenv(n, value, 1); }
  ~EnvVar() { ::unsetenv(name); }
};

}  // namespace

TEST_CASE("enumerate prints the pairs as one JSON document") {
  const auto r = invoke({"enumerate", "c2", "7"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        R"({"id":"c2","n":7,"pairs":[{"j":1,"parts":[6,1]},{"j":1,"parts":[3,3,1]}]})"
        "\n");
}

TEST_CASE("enumerate respects the oracle bound") {
  CHECK(invoke({"enumerate", "c1", "61"}).code == 2);
  CHECK(invoke({"--oracle-bound", "10", "enumerate", "c1", "11"}).code == 2);
  CHECK(invoke({"--order", "5", "--oracle-bound", "10", "enumerate", "c1", "3"}).code == 2);
}

TEST_CASE("coeffs in all three formats") {
  const auto csv = invoke({"coeffs", "c2", "--order", "8", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out == "n,value\n0,0\n1,1\n2,0\n3,0\n4,2\n5,1\n6,1\n7,2\n8,2\n");

  const auto js = invoke({"coeffs", "c2", "--order", "8"});
  const auto rows = lines(js.out);
  REQUIRE(rows.size() == 9);
  for (std::size_t n = 0; n < rows.size(); ++n) {
    const auto j = nlohmann::json::parse(rows[n]);
    CHECK(j["n"] == n);
    CHECK(j["value"].get<std::string>() == lines(csv.out)[n + 1].substr(lines(csv.out)[n + 1].find(',') + 1));
  }

  const auto text = invoke({"coeffs", "c2", "--order", "4", "--format", "text", "--mod2"});
  CHECK(text.out == "q^0: 0\nq^1: 1\nq^2: 0\nq^3: 0\nq^4: 0\n");

  const auto side = invoke({"coeffs", "cube:rhs", "--order", "3", "--format", "csv"});
  CHECK(side.out == "n,value\n0,1\n1,-3\n2,0\n3,5\n");
}

TEST_CASE("scan reports residues") {
  const auto r = invoke({"scan", "c2", "--mod", "5", "--order", "2000"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["residues"] == nlohmann::json::array({2}));
  CHECK(j["modulus"] == 5);
  CHECK(j["min_support"] == 20);

  const auto csv = invoke({"scan", "c3", "--mod", "11", "--format", "csv"});
  CHECK(csv.out == "residue\n5\n7\n9\n");
}

TEST_CASE("residues subcommand") {
  const auto r = invoke({"residues", "--alpha", "3", "--beta", "1", "--mod", "5", "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out == "residues: 0, 2, 4\n");
  const auto half = invoke(
      {"residues", "--alpha", "1", "--beta", "1", "--delta", "2", "--mod", "5", "--format", "csv"});
  CHECK(half.out == "residue\n0\n1\n3\n");
}

TEST_CASE("verify exit codes follow the reports") {
  const auto ok = invoke({"verify", "identity", "slater.eq18", "--order", "300", "--no-timing"});
  CHECK(ok.code == 0);
  const auto report = nlohmann::json::parse(ok.out);
  CHECK(report["status"] == "pass");
  CHECK(report["first_failure"].is_null());
  CHECK(report["elapsed_ms"] == 0);

  const auto bad = invoke({"verify", "theorem", "C-c12-odd", "--order", "100", "--format", "text"});
  CHECK(bad.code == 1);
  CHECK(bad.out.starts_with("FAIL C-c12-odd (checked up to q^100): first failure at n = "));

  const auto all = invoke({"verify", "--all", "--order", "300", "--jobs", "4", "--no-timing"});
  bool every = true;
  std::size_t count = 0;
  for (const auto& line : lines(all.out)) {
    every = every && nlohmann::json::parse(line)["status"] == "pass";
    ++count;
  }
  CHECK(count > 40);
  CHECK(all.code == (every ? 0 : 1));
}

TEST_CASE("output is byte-stable and independent of the worker count") {
  const std::vector<std::string> base{"verify", "--all", "--order", "200", "--no-timing"};
  auto with_jobs = [&](const char* jobs) {
    auto args = base;
    args.insert(args.end(), {"--jobs", jobs});
    return invoke(args);
  };
  const auto one = with_jobs("1");
  CHECK(one.out == with_jobs("1").out);
  CHECK(one.out == with_jobs("8").out);
}

TEST_CASE("CSV and JSON verification reports carry the same data") {
  const auto js = invoke({"verify", "theorem", "T-c2", "--order", "500", "--no-timing"});
  const auto csv = invoke(
      {"verify", "theorem", "T-c2", "--order", "500", "--no-timing", "--format", "csv"});
  const auto j = nlohmann::json::parse(js.out);
  CHECK(csv.out == "id,order,status,first_failure,elapsed_ms\nT-c2,500," +
                       j["status"].get<std::string>() + ",,0\n");
}

TEST_CASE("usage errors and unknown ids exit with 2") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({"coeffs"}).code == 2);
  CHECK(invoke({"coeffs", "c2", "--order", "0"}).code == 2);
  CHECK(invoke({"coeffs", "c2", "--format", "xml"}).code == 2);
  CHECK(invoke({"verify", "identity"}).code == 2);

  const auto unknown = invoke({"verify", "identity", "slater.eq99"});
  CHECK(unknown.code == 2);
  CHECK(unknown.err.find("known ids:") != std::string::npos);
  CHECK(invoke({"coeffs", "c13"}).code == 2);
  CHECK(invoke({"scan", "c2", "--mod", "1"}).code == 2);
  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("environment supplies defaults and flags win") {
  EnvVar order("QPARITY_ORDER", "4");
  EnvVar format("QPARITY_FORMAT", "csv");
  CHECK(invoke({"coeffs", "c2"}).out == "n,value\n0,0\n1,1\n2,0\n3,0\n4,2\n");
  CHECK(lines(invoke({"coeffs", "c2", "--order", "2"}).out).size() == 4);
  CHECK(invoke({"coeffs", "c2", "--format", "text"}).out.starts_with("q^0: 0\n"));
}
