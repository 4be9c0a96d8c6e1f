#pragma once

#include <string>

#include "experiment_config.hpp"

namespace secgraph::cli {

/// Exit codes shared by every command.
enum ExitCode : int { kOk = 0, kUsage = 1, kPartial = 2 };

struct CommandResult {
  std::string output;
  int exit_code = kOk;
  std::string diagnostics;  ///< human-readable notes for stderr
};

/// Runs one command. The output is a pure function of cfg; workers only
/// changes how runs are scheduled. Parameter errors propagate as
/// ParameterError.
CommandResult run_command(const ExperimentConfig& cfg, unsigned workers);

/// Value of a named closed-form quantity (see `secgraph analytic --help`).
double analytic_value(const std::string& quantity, const ExperimentConfig& cfg);

/// Names accepted by analytic_value.
const std::vector<std::string>& analytic_quantities();

}  // namespace secgraph::cli
