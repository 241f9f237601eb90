#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "pararadon/norm_lab.hpp"
#include "pararadon_tools/config.hpp"
#include "pararadon_tools/report.hpp"

namespace pararadon::tools {

struct SuiteOutcome {
  std::vector<ResidualReport> reports;   ///< sorted by name
  std::vector<SlopeReport> slopes;       ///< scaling experiments, in alpha order
  [[nodiscard]] int failures() const;
};

/// A check together with the name it is filed under.
struct PlannedCheck {
  std::string suite;
  std::function<ResidualReport()> run;
};

/// The checks a configuration selects, without running them. Slope
/// experiments are appended to `slopes` by their check when run.
std::vector<PlannedCheck> plan_checks(const SuiteConfig& config, std::vector<SlopeReport>* slopes);

/// Runs every planned check (in parallel) and merges the reports by name.
SuiteOutcome execute_suite(const SuiteConfig& config);

/// Runs the suite and writes report.json, norms.csv and summary.txt into
/// config.output. Returns 0 when every check passes, 1 when any fails and
/// 2 when the output cannot be written. Progress lines go to `log`.
int run_suite(const SuiteConfig& config, std::ostream& log);

}  // namespace pararadon::tools
