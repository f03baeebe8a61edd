#pragma once

#include <iosfwd>

#include "cli/run_spec.hpp"

namespace twinga::cli {

/// Exit statuses shared by every command.
enum ExitCode : int { kSuccess = 0, kRuntimeFailure = 1, kUsageError = 2 };

/// Runs spec.trials trials, writes the three CSV files into spec.output_dir
/// and prints the summary row on `out`.
int command_run(const RunSpec& spec, std::ostream& out, std::ostream& err);

/// Runs SGA and ATGA with otherwise identical settings (for every preset
/// when `all_functions` is set), prints a side-by-side table per function
/// and writes `compare_<function|all>_<seed>.summary.csv` plus the per-mode
/// CSV files.
int command_compare(const RunSpec& spec, bool all_functions, std::ostream& out, std::ostream& err);

}  // namespace twinga::cli
