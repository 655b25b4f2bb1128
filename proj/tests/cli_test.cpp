#include "cli.hpp"

#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

#include "degenbell/rational.hpp"
#include "degenbell/stirling_bell.hpp"

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = degenbell::cli::run(args, out, err);
  return CliResult{code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("stirling emits the exact csv triangle") {
  const CliResult res = run({"stirling", "--nmax", "2", "--r", "1", "--lambda", "1/2",
                             "--format", "csv"});
  CHECK(res.code == 0);
  CHECK(res.out == "n,k,value\n0,0,1\n1,0,1\n1,1,1\n2,0,1/2\n2,1,5/2\n2,2,1\n");
  CHECK(res.err.empty());
}

TEST_CASE("stirling output round trips through both serializations") {
  using degenbell::Rational;
  using degenbell::StirlingTable;
  const StirlingTable direct(5, 2, Rational::parse("-1/3"));
  const CliResult csv = run({"stirling", "--nmax", "5", "--r", "2", "--lambda", "-1/3",
                             "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(StirlingTable::from_csv(csv.out, 2, Rational::parse("-1/3")) == direct);
  const CliResult json = run({"stirling", "--nmax", "5", "--r", "2", "--lambda", "-1/3",
                              "--format", "json"});
  CHECK(json.code == 0);
  CHECK(StirlingTable::from_json(nlohmann::json::parse(json.out)) == direct);
}

TEST_CASE("bell prints polynomials and values") {
  const CliResult res = run({"bell", "--nmax", "2", "--r", "1", "--lambda", "1/2"});
  CHECK(res.code == 0);
  CHECK(res.out.find("phi_2 = 1/2 + 5/2*x + 1*x^2") != std::string::npos);
  CHECK(res.out.find("->  4") != std::string::npos);
  const CliResult csv = run({"bell", "--nmax", "2", "--r", "1", "--lambda", "1/2",
                             "--format", "csv"});
  CHECK(csv.out == "n,value\n0,1\n1,2\n2,4\n");
}

TEST_CASE("normal-order prints canonical text and structured terms") {
  const CliResult res = run({"normal-order", "a ad"});
  CHECK(res.code == 0);
  CHECK(res.out == "1 (ad)^1 a^1 + 1\n");
  const CliResult json = run({"normal-order", "(N + 2)_{2, 1/2}", "--format", "json"});
  CHECK(json.code == 0);
  const nlohmann::json j = nlohmann::json::parse(json.out);
  CHECK(j["text"] == "1 (ad)^2 a^2 + 9/2 (ad)^1 a^1 + 3");
  CHECK(j["terms"].size() == 3);
}

TEST_CASE("normal-order reports parse errors with offsets on exit 2") {
  const CliResult res = run({"normal-order", "(a ad"});
  CHECK(res.code == 2);
  CHECK(res.out.empty());
  CHECK(res.err.find("offset 5") != std::string::npos);
  CHECK(res.err.find("')'") != std::string::npos);
}

TEST_CASE("dobinski reports value, bound and exact comparison") {
  const CliResult res = run({"dobinski", "--k", "2", "--r", "1", "--lambda", "1/2",
                             "--x", "1", "--format", "json"});
  CHECK(res.code == 0);
  const nlohmann::json j = nlohmann::json::parse(res.out);
  CHECK(j["exact"] == 4.0);
  CHECK(j["diff"].get<double>() < 1e-10);
  CHECK(j["bound"].get<double>() < 1e-10);
  CHECK(j["terms"].get<unsigned>() > 5);
}

TEST_CASE("expect reports the record fields") {
  const CliResult res = run({"expect", "--n", "2", "--r", "1", "--lambda", "1/2", "--z", "1",
                             "--format", "json"});
  CHECK(res.code == 0);
  const nlohmann::json j = nlohmann::json::parse(res.out);
  CHECK(j["value_re"].get<double>() == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(j["value_im"].get<double>() == 0.0);
  CHECK(j["dim"] == 64);
  CHECK(j["truncation_bound"].get<double>() < 1e-12);
}

TEST_CASE("genfun compares truncated sum against its closed form") {
  const CliResult res = run({"genfun", "--r", "1", "--lambda", "1/2", "--z", "1", "--t", "1",
                             "--format", "json"});
  CHECK(res.code == 0);
  const nlohmann::json j = nlohmann::json::parse(res.out);
  CHECK(j["diff"].get<double>() < 1e-12);
  CHECK(j["truncated"].get<double>() ==
        doctest::Approx(j["closed_form"].get<double>()).epsilon(1e-12));
  const CliResult bad = run({"genfun", "--lambda", "-1", "--t", "1"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("1 + lambda t") != std::string::npos);
}

TEST_CASE("verify runs suites and honors --format json") {
  const CliResult res = run({"verify", "--suite", "classical-bell"});
  CHECK(res.code == 0);
  CHECK(res.out.find("classical-bell") != std::string::npos);
  CHECK(res.out.find("ok") != std::string::npos);
  const CliResult json = run({"verify", "--suite", "confluence", "--seed", "7",
                              "--format", "json"});
  CHECK(json.code == 0);
  const nlohmann::json j = nlohmann::json::parse(json.out);
  CHECK(j["seed"] == 7);
  CHECK(j["suites"].size() == 1);
  CHECK(j["suites"][0]["suite"] == "confluence");
  CHECK(j["suites"][0]["cases"] == 200);
  CHECK(j["suites"][0]["failures"].empty());
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run({}).code == 2);                                         // no subcommand
  CHECK(run({"frobnicate"}).code == 2);                             // unknown subcommand
  CHECK(run({"stirling"}).code == 2);                               // missing required --nmax
  CHECK(run({"stirling", "--nmax", "2", "--format", "yaml"}).code == 2);
  CHECK(run({"stirling", "--nmax", "-3"}).code == 2);               // negative count
  CHECK(run({"stirling", "--nmax", "2", "--lambda", "1/0"}).code == 2);
  CHECK(run({"stirling", "--nmax", "2", "--lambda", "0.5"}).code == 2);
  CHECK(run({"dobinski", "--k", "1", "--x", "-1"}).code == 2);      // x must be positive
  CHECK(run({"dobinski", "--k", "1", "--tol", "0"}).code == 2);
  CHECK(run({"expect", "--n", "1", "--dim", "0"}).code == 2);
  CHECK(run({"expect", "--n", "1", "--z", "nope"}).code == 2);
  CHECK(run({"verify", "--suite", "nonsense"}).code == 2);
  const CliResult unknown = run({"verify", "--suite", "nonsense"});
  CHECK(unknown.err.find("valid names") != std::string::npos);
}

TEST_CASE("help is success and lists the subcommands") {
  const CliResult res = run({"--help"});
  CHECK(res.code == 0);
  for (const char* name :
       {"stirling", "bell", "normal-order", "dobinski", "expect", "genfun", "verify"})
    CHECK(res.out.find(name) != std::string::npos);
}
