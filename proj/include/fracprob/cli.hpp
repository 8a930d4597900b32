#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fracprob/serialization.hpp"

namespace fracprob::cli {

enum ExitCode : int {
  kExitPass = 0,
  kExitCheckFailed = 1,
  kExitUsage = 2,
  kExitNonConvergence = 3,
  kExitIo = 4,
};

enum class Command { eqdist, characterize, taylor, mvt, order, actuarial, suite };
enum class Format { json, csv };
enum class Expect { fixed, not_fixed, any };

const char* to_string(Command c);

struct RunConfig {
  Command command = Command::suite;
  // Parsed distribution specs, already validated.
  std::optional<DistributionSpec> dist, x, y;
  std::optional<PowerSum> g;
  std::vector<double> alphas;
  std::vector<int> ns;
  std::size_t grid = 30;
  QuadratureConfig quad;
  std::optional<double> tol;  // overrides each command's check tolerance
  std::string out;
  Format format = Format::json;
  bool serial = false;
  bool caputo = false;
  Expect expect = Expect::any;
  double r = 0.5, s = 1.0;            // actuarial deductibles
  std::optional<double> u, v;         // actuarial ratio pair

  json to_json() const;
};

class CliError : public std::runtime_error {
 public:
  CliError(int code, const std::string& what) : std::runtime_error(what), code_(code) {}
  int code() const { return code_; }

 private:
  int code_;
};

// Throws CliError with kExitUsage on bad arguments or malformed JSON and
// kExitIo when a spec file cannot be read. --help throws CliError(0, text).
RunConfig parse_args(const std::vector<std::string>& args);

// Runs the campaign, writes the report and returns the exit code.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& log);

// parse_args + run with errors mapped to exit codes.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& log);

}  // namespace fracprob::cli
