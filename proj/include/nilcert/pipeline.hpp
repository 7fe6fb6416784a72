// Command-line front end: instance parsing, the run pipeline and reports.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "nilcert/engine.hpp"

namespace nilcert {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitNotAUnit = 2,
  kExitVerification = 3,
  kExitInternal = 4,
};

/// "1,-2,4" -> {1, -2, 4}
std::vector<mpz_class> parse_coefficients(const std::string& text);

struct RunFlags {
  std::string emit_dot;
  std::string emit_cert;
  std::string emit_json;
  bool json = false;        // JSON report on stdout instead of the text report
  bool early_stop = false;
  bool minimal = false;
  bool certificates = true; // generic mode only
};

struct TargetReport {
  unsigned target = 1;
  std::uint64_t exponent = 0;
  std::optional<std::uint64_t> minimal;
  std::string status;  // verified | failed | not-applicable
  std::optional<StructuralMetrics> metrics;  // per target under early stopping
};

struct RunReport {
  std::string mode;  // generic | concrete
  unsigned n = 0;
  unsigned m = 0;
  std::string ring;
  std::vector<std::string> f, g;  // concrete coefficients as given after reduction
  bool early_stop = false;
  std::vector<TargetReport> targets;
  std::optional<StructuralMetrics> metrics;
  std::string certificate;  // verified | failed | not-applicable
  std::vector<std::pair<std::string, std::string>> files;  // kind, path
  std::vector<std::string> notices;

  bool all_verified() const { return certificate != "failed"; }
  nlohmann::ordered_json to_json() const;
  std::string to_text() const;
};

/// Concrete instances must pass check_unit; throws NotAUnit otherwise.
RunReport run_pipeline(const ProblemInstance& instance, const RunFlags& flags);

/// Full command line (without the program name).  Writes reports to `out`,
/// errors as "ERROR:<class>: message" to `err`, returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nilcert
