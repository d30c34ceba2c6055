#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "zpe/cli.hpp"

using namespace zpe::cli;

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "zpe");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int status = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

std::size_t line_count(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("spectrum default grid") {
  const auto r = invoke({"spectrum"});
  CHECK(r.status == kExitOk);
  CHECK(line_count(r.out) == 51);
  CHECK(r.out.rfind("beta,U,U_T,sigma2,C_V,S,Z\r\n", 0) == 0);
}

TEST_CASE("single beta and omega-derived e0") {
  const auto r = invoke({"spectrum", "--omega", "2", "--beta", "1"});
  CHECK(r.status == kExitOk);
  CHECK(r.out.find("1,1.3130352854993312,") != std::string::npos);
}

TEST_CASE("mc json record") {
  const auto r = invoke({"mc", "--beta", "1", "--samples", "1000", "--seed", "7", "--format", "json"});
  REQUIRE(r.status == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["meta"]["seed"] == 7);
  CHECK(j["meta"]["config"]["command"] == "mc");
  REQUIRE(j["rows"].size() == 4);
  for (const auto& row : j["rows"]) {
    CHECK(row.contains("mean"));
    CHECK(row.contains("variance"));
    CHECK(row.contains("std_error"));
  }
  CHECK(invoke({"mc", "--beta", "1", "--samples", "1000", "--seed", "7", "--format", "json"}).out == r.out);
}

TEST_CASE("every table command runs") {
  for (const char* command : {"variance", "discrete", "moments", "statistical", "wigner", "historical"}) {
    const auto r = invoke({command, "--beta-count", "3"});
    CHECK_MESSAGE(r.status == kExitOk, command);
    CHECK(line_count(r.out) >= 4);
  }
}

TEST_CASE("usage errors") {
  CHECK(invoke({}).status == kExitUsage);
  CHECK(invoke({"nonsense"}).status == kExitUsage);
  CHECK(invoke({"spectrum", "--beta-min", "0"}).status == kExitUsage);
  CHECK(invoke({"spectrum", "--beta-count", "0"}).status == kExitUsage);
  CHECK(invoke({"spectrum", "--beta-min", "5", "--beta-max", "1"}).status == kExitUsage);
  CHECK(invoke({"spectrum", "--e0", "1", "--omega", "3"}).status == kExitUsage);
  CHECK(invoke({"spectrum", "--format", "xml"}).status == kExitUsage);
  CHECK(invoke({"discrete", "--e0", "0"}).status == kExitUsage);
}

TEST_CASE("numeric and io errors echo the parameters") {
  const auto bad_ansatz = invoke({"variance", "--a0", "1", "--a1", "0", "--a2", "1"});
  CHECK(bad_ansatz.status == kExitNumeric);
  CHECK(bad_ansatz.err.find("\"a0\":1.0") != std::string::npos);
  const auto unwritable = invoke({"spectrum", "--out", "/nonexistent-dir/out.csv"});
  CHECK(unwritable.status == kExitNumeric);
  CHECK(unwritable.err.find("/nonexistent-dir/out.csv") != std::string::npos);
}

TEST_CASE("config echo") {
  RunConfig config;
  config.command = Command::wigner;
  config.a1 = 0.5;
  const auto j = config_echo(config);
  CHECK(j["command"] == "wigner");
  CHECK(j["a1"] == 0.5);
  CHECK(j["a0"].is_null());
  CHECK(command_name(Command::historical) == "historical");
}
