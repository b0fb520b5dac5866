#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <regex>
#include <sstream>

#include "cli.hpp"

using namespace adams_cli;

namespace {

std::string scratch(const char* name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const auto parsed = parse_args(args, out, err);
  if (!parsed.config) return {parsed.exit_code, out.str(), err.str()};
  const int code = run(*parsed.config, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("defaults") {
  std::ostringstream out, err;
  const auto parsed = parse_args({"t0"}, out, err);
  REQUIRE(parsed.config);
  CHECK(parsed.config->command == "t0");
  CHECK(parsed.config->seed == 0);
  CHECK(parsed.config->output_format == "json");
  CHECK(parsed.config->quadrature.rel_tol == 1e-10);
  CHECK(parsed.config->quadrature.truncation_epsilon == 1e-12);
  CHECK_FALSE(parsed.config->output_path);
}

TEST_CASE("help lists the commands") {
  const auto r = invoke({"--help"});
  CHECK(r.code == 0);
  for (const char* name : {"constants", "level", "hardy", "rearrange", "cc", "extremal-sweep", "t0"}) {
    CHECK(r.out.find(name) != std::string::npos);
  }
}

TEST_CASE("malformed arguments exit 64") {
  CHECK(invoke({}).code == 64);
  CHECK(invoke({"bogus"}).code == 64);
  CHECK(invoke({"t0", "--unknown"}).code == 64);
  CHECK(invoke({"constants", "--m", "2"}).code == 64);
  CHECK(invoke({"constants", "--m", "x", "--n", "4"}).code == 64);
  CHECK(invoke({"--format", "xml", "t0"}).code == 64);
  CHECK(invoke({"cc", "--p", "2", "--family", "moser"}).code == 64);
  CHECK(invoke({"hardy", "--p", "2", "--q", "2"}).code == 64);
  const auto r = invoke({"t0", "--unknown"});
  CHECK(r.err.find("Usage") != std::string::npos);
}

TEST_CASE("domain errors are separate from parse errors") {
  std::ostringstream out, err;
  const auto parsed = parse_args({"constants", "--m", "3", "--n", "3"}, out, err);
  REQUIRE(parsed.config);
  CHECK(run(*parsed.config, out, err) == 2);
}

TEST_CASE("constants output") {
  const auto r = invoke({"constants", "--m", "2", "--n", "4"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(std::abs(j["beta0"].get<double>() - 315.82734083485946) < 1e-9);
  // Every float printed with 17 significant digits.
  CHECK(std::regex_search(r.out, std::regex(R"("beta0": 315\.\d{14}\b)")));
}

TEST_CASE("t0 output") {
  const auto r = invoke({"t0"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(std::abs(j["raw"].get<double>() - 51.9233) < 5e-4);
  CHECK(j["T0"] == 52);
  CHECK(j["n_threshold"] == 104);
  const auto csv = invoke({"--format", "csv", "t0"});
  CHECK(csv.out.rfind("raw,T0,n_threshold\n", 0) == 0);
}

TEST_CASE("cc moser family") {
  std::ostringstream out, err;
  const auto parsed = parse_args({"cc", "--p", "2", "--family", "moser", "--a", "1000"}, out, err);
  REQUIRE(parsed.config);
  CHECK(parsed.config->command == "cc");
  CHECK(parsed.config->params.at("a") == "1000");
  CHECK(run(*parsed.config, out, err) == 0);
  const auto j = nlohmann::json::parse(out.str());
  CHECK(std::abs(j["J"].get<double>() - 3.0040242) < 1e-6);
  CHECK(std::abs(j["energy"].get<double>() - 1.0) < 1e-12);
}

TEST_CASE("quadrature failures exit 3") {
  // g(t) = t makes the integrand e^{t^2 - t}, which diverges.
  const std::string path = scratch("cli_divergent.json");
  {
    std::ofstream f(path);
    f << R"([{"knot": 0, "piece_kind": "power_sum", "params": {"shift": 0, "terms": [{"coef": 1, "exponent": 1}]}}])";
  }
  CHECK(invoke({"cc", "--p", "2", "--family", "file", "--profile", path, "--unchecked"}).code == 3);
  CHECK(invoke({"cc", "--p", "2", "--family", "file", "--profile", path}).code == 2);
}

TEST_CASE("sweep CSV") {
  const auto r = invoke({"extremal-sweep", "--n-from", "100", "--n-to", "110", "--step", "2", "--assert"});
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "n,norm_chain,norm_quad,J_lower,J_quad,level,gap_analytic,gap_numeric");
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    const int n = std::stoi(line.substr(0, line.find(',')));
    if (n >= 104) CHECK(line.find(",true,true") != std::string::npos);
  }
  CHECK(rows == 6);
  CHECK(invoke({"extremal-sweep", "--n-from", "20", "--n-to", "10"}).code == 2);
}

TEST_CASE("rearrange reads measure,value rows") {
  const std::string path = scratch("cli_cells.csv");
  {
    std::ofstream f(path);
    f << "measure,value\n2,-1\n1,5\n";
  }
  const auto r = invoke({"rearrange", "--input", path});
  REQUIRE(r.code == 0);
  CHECK(r.out == "measure,value\n1,5\n2,1\n");
  const auto t = invoke({"rearrange", "--input", path, "--n", "2", "--talenti-R", "2"});
  REQUIRE(t.code == 0);
  CHECK(nlohmann::json::parse(t.out)["profile"].is_array());
}

TEST_CASE("environment tolerance and flag precedence") {
  ::setenv("ADAMS_QUAD_RTOL", "1e-8", 1);
  std::ostringstream out, err;
  auto parsed = parse_args({"t0"}, out, err);
  REQUIRE(parsed.config);
  CHECK(parsed.config->quadrature.rel_tol == 1e-8);
  parsed = parse_args({"--rel-tol", "1e-9", "t0"}, out, err);
  REQUIRE(parsed.config);
  CHECK(parsed.config->quadrature.rel_tol == 1e-9);
  ::setenv("ADAMS_QUAD_RTOL", "abc", 1);
  CHECK_FALSE(parse_args({"t0"}, out, err).config);
  ::unsetenv("ADAMS_QUAD_RTOL");
}

TEST_CASE("identical configurations give identical bytes") {
  const std::vector<std::string> args{"--seed", "4", "hardy", "--p", "2", "--q", "2", "--alpha", "0.5",
                                      "--theta", "-1.5", "--trials", "30"};
  const auto a = invoke(args);
  const auto b = invoke(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("shortest round-trip formatting") {
  CHECK(format_shortest(0.1) == "0.1");
  CHECK(format_shortest(1.0) == "1");
  CHECK(std::stod(format_shortest(1.0 / 3.0)) == 1.0 / 3.0);
}
