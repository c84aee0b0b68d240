#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>

namespace mtlmon {

/// Exit statuses shared by every subcommand.
constexpr int kExitOk = 0;
constexpr int kExitViolations = 1;
constexpr int kExitError = 2;

struct CliConfig {
  std::string spec_path;
  std::string trace_path;             // "-" reads standard input
  std::string trace_format = "auto";  // csv | jsonl | auto (by extension)
  std::string report_format = "text"; // text | json
  bool fail_on_violation = false;
  bool oracle_check = false;          // debug cross-check, small traces only
  std::size_t residual_ceiling = 10000;
};

/// check: parse the spec, stream the trace through all monitors, render the
/// report. Exit 0 when clean (or fail_on_violation unset), 1 when violations
/// were found under --fail-on-violation, 2 on any input error.
int cmd_check(const CliConfig& config, std::ostream& out, std::ostream& err);

/// eval: print the reference-evaluator truth of one requirement at a
/// 1-based trace index ("true"/"false"). Exit 0 on success, 2 on errors.
int cmd_eval(const std::string& spec_path, const std::string& trace_path,
             const std::string& trace_format, const std::string& requirement,
             std::size_t index, std::ostream& out, std::ostream& err);

/// fixtures: write the bundled synthetic case study into a directory.
int cmd_fixtures(const std::string& output_dir, std::ostream& out,
                 std::ostream& err);

}  // namespace mtlmon
