#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fracprob/cli.hpp"
#include "helpers.hpp"

using namespace fracprob;
using namespace fracprob::cli;

namespace {

const std::string kExp1 = R"({"kind":"exponential","params":{"lambda":1}})";
const std::string kExp2 = R"({"kind":"exponential","params":{"lambda":0.5}})";

int code_of(const std::vector<std::string>& args) {
  try {
    parse_args(args);
  } catch (const CliError& e) {
    return e.code();
  }
  return -1;
}

struct Ran {
  int code;
  std::string out, log;
};

Ran run_args(std::vector<std::string> args) {
  args.insert(args.begin(), "fracprob");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, log;
  const int code = main_entry(int(argv.size()), argv.data(), out, log);
  return {code, out.str(), log.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::filesystem::path scratch_dir() {
  const auto d = std::filesystem::temp_directory_path() / "fracprob_cli_test";
  std::filesystem::create_directories(d);
  return d;
}

}  // namespace

TEST_CASE("parse_args") {
  const RunConfig c = parse_args({"eqdist", "--dist", kExp1, "--alpha", "0.5", "--n", "2"});
  CHECK(c.command == Command::eqdist);
  REQUIRE(c.dist.has_value());
  CHECK(c.alphas == std::vector<double>{0.5});
  CHECK(c.ns == std::vector<int>{2});
  CHECK(c.grid == 30);

  CHECK(parse_args({"suite"}).command == Command::suite);
  CHECK(parse_args({"eqdist", "--dist", kExp1, "--alpha", "0.3,0.9"}).alphas.size() == 2);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(code_of({"frobnicate"}) == kExitUsage);
  CHECK(code_of({}) == kExitUsage);
  CHECK(code_of({"eqdist", "--dist", R"({"kind":"exponential","params":{"lambda":1})"}) == kExitUsage);
  CHECK(code_of({"eqdist", "--dist", R"({"kind":"exponential","params":{"lambda":-1}})"}) == kExitUsage);
  CHECK(code_of({"eqdist", "--dist", kExp1, "--grid", "7"}) == kExitUsage);
  CHECK(code_of({"eqdist", "--dist", kExp1, "--tol", "0"}) == kExitUsage);
  CHECK(code_of({"eqdist", "--dist", kExp1, "--alpha", "1.5"}) == kExitUsage);
  CHECK(code_of({"eqdist"}) == kExitUsage);
  CHECK(code_of({"mvt", "--x", kExp1}) == kExitUsage);
  CHECK(code_of({"eqdist", "--dist", kExp1, "--format", "csv"}) == kExitUsage);
  CHECK(code_of({"eqdist", "--dist", "/nonexistent/spec.json"}) == kExitIo);
}

TEST_CASE("malformed JSON names the location") {
  try {
    parse_args({"eqdist", "--dist", "{\"kind\":\n \"exponential\",,}"});
    FAIL("expected a usage error");
  } catch (const CliError& e) {
    CHECK(e.code() == kExitUsage);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("command outcomes") {
  CHECK(run_args({"eqdist", "--dist", kExp1}).code == kExitPass);
  CHECK(run_args({"characterize", "--dist", R"({"kind":"weibull","params":{"k":2,"lambda":1}})"}).code ==
        kExitPass);
  CHECK(run_args({"characterize", "--dist", R"({"kind":"weibull","params":{"k":2,"lambda":1}})", "--expect",
                  "fixed"})
            .code == kExitCheckFailed);

  const Ran order = run_args({"order", "--x", kExp1, "--y", kExp2, "--alpha", "0.5"});
  CHECK(order.code == kExitPass);
  const json rep = json::parse(order.out);
  CHECK(rep["header"].contains("config"));
  CHECK(rep["results"][0]["detail"]["holds"] == false);

  CHECK(run_args({"mvt", "--x", kExp1, "--y", kExp2, "--alpha", "0.5"}).code == kExitCheckFailed);
  CHECK(run_args({"mvt", "--x", kExp1, "--y", kExp2, "--alpha", "1,1.5"}).code == kExitPass);
  CHECK(run_args({"actuarial", "--dist", kExp1, "--u", "1", "--v", "2"}).code == kExitPass);
  CHECK(run_args({"taylor", "--dist", kExp1, "--alpha", "0.5", "--n", "0,1"}).code == kExitPass);
}

TEST_CASE("reports are deterministic and embed the config") {
  const std::vector<std::string> args = {"characterize", "--dist", kExp1, "--alpha", "0.5,1", "--n", "1,2"};
  const Ran a = run_args(args), b = run_args(args);
  CHECK(a.code == kExitPass);
  CHECK(a.out == b.out);
  const json rep = json::parse(a.out);
  CHECK(rep["header"]["config"]["command"] == "characterize");
  for (const auto& r : rep["results"]) {
    for (const char* key : {"check", "params", "lhs", "rhs", "residual", "tolerance", "pass"}) CHECK(r.contains(key));
  }
}

TEST_CASE("serial flag does not change results") {
  const std::vector<std::string> args = {"eqdist", "--dist", R"({"kind":"weibull","params":{"k":1.5,"lambda":1}})"};
  std::vector<std::string> serial = args;
  serial.push_back("--serial");
  json a = json::parse(run_args(args).out), b = json::parse(run_args(serial).out);
  CHECK(a["results"] == b["results"]);
}

TEST_CASE("CSV output, one file per order") {
  const auto dir = scratch_dir();
  const std::string base = (dir / "eq").string();
  const Ran r = run_args({"eqdist", "--dist", kExp1, "--alpha", "0.5,1", "--n", "2", "--format", "csv", "--out", base});
  CHECK(r.code == kExitPass);
  for (const char* suffix : {"_a0.5_n2.csv", "_a1_n2.csv"}) {
    const std::string body = slurp(base + suffix);
    CHECK(body.rfind("t,value,oracle_value,abs_diff\n", 0) == 0);
    CHECK(std::count(body.begin(), body.end(), '\n') == 31);
  }
  CHECK(std::filesystem::exists(base + ".json"));
  std::filesystem::remove_all(dir);
}

TEST_CASE("unwritable output exits with 4") {
  CHECK(run_args({"eqdist", "--dist", kExp1, "--out", "/nonexistent/dir/report.json"}).code == kExitIo);
}
