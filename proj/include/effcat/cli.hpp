#pragma once

// Command-line entry point.  `effcat check --instance <tag> --suite <id|all>`
// runs law suites and emits a deterministic report.  Exit codes:
//   0 all laws pass, 1 at least one law fails, 2 configuration error,
//   3 budget exhausted or inconclusive coverage.  Precedence: 2 > 1 > 3 > 0.

#include <string>
#include <vector>

#include "effcat/lawsuite.hpp"

namespace effcat {

struct CliConfig {
  InstanceConfig instance;
  std::map<std::string, std::uint64_t> sizes = {{"A", 2}, {"B", 2}};
  HomBudget budget;
  unsigned workers = 1;
  std::vector<std::string> suites;  // resolved list (after `all` expansion)
  std::string report_path;          // empty: stdout only
  std::string format = "text";      // text | json
};

/// Applies one `--set key=value` override; throws config_error on bad keys.
void apply_set(CliConfig& cfg, const std::string& kv);

/// Serializes one or more reports in the requested format.
std::string emit_report(const std::vector<LawReport>& reports, const std::string& format);

int cli_main(int argc, const char* const* argv);

}  // namespace effcat
