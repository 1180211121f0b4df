#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace zetagaps {

/// Process exit statuses of the command-line tool.
enum ExitStatus : int {
  kExitOk = 0,
  kExitError = 1,
  /// Completed, but with a discrepancy worth flagging (count deficit,
  /// tabulated-vs-computed mismatch, inequality violation).
  kExitWarning = 2,
  kExitUsage = 64,
};

enum class OutputFormat { json, csv, text };

struct RunConfig {
  std::string subcommand;
  OutputFormat output_format = OutputFormat::json;
  std::optional<std::string> output_path;
  std::uint64_t seed = 20240101;
  unsigned threads = 0;
  bool timestamp = true;
  /// Effective tolerances and subcommand parameters echoed in every output.
  std::map<std::string, std::string> settings;
};

/// Parses `args` (without the program name), runs the subcommand, and
/// writes the artifact to `out` (or the --out file) and diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zetagaps
