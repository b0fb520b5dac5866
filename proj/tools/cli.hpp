#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "adams/adams.h"

namespace adams_cli {

enum Exit : int {
  kExitOk = 0,
  kExitDomain = 2,
  kExitQuadrature = 3,
  kExitAssertion = 4,
  kExitUsage = 64,
  kExitInternal = 70,
};

struct RunConfig {
  std::string command;
  std::map<std::string, std::string> params;  // subcommand options as given
  std::string output_format;                  // "json" or "csv"
  std::optional<std::string> output_path;
  std::uint64_t seed = 0;
  adams_quad_spec quadrature{};
};

struct ParseOutcome {
  std::optional<RunConfig> config;  // empty when the process should exit
  int exit_code = kExitOk;
};

/// Parses argv without the program name. Help and usage text go to `out` and
/// `err`; malformed arguments yield exit 64. ADAMS_QUAD_RTOL, when set,
/// replaces the default rel_tol (an explicit --rel-tol still wins).
ParseOutcome parse_args(const std::vector<std::string>& args, std::ostream& out,
                        std::ostream& err);

/// Executes the command and writes to the output path or `out`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Shortest round-trip decimal form.
std::string format_shortest(double v);

}  // namespace adams_cli
