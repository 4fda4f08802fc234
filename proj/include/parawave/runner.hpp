#pragma once

#include <string>
#include <vector>

#include "parawave/analysis.hpp"
#include "parawave/config.hpp"
#include "parawave/problem.hpp"
#include "parawave/solver.hpp"

namespace parawave {

// Exit codes of the command entry points.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 1;
inline constexpr int kExitSolverError = 2;

struct LoadedProblem {
  InverseProblem problem;  // horizon already set to the run's t_end
  ExactReference exact;
  std::string name;
  std::vector<double> report_t;  // defaults resolved
  int steps = 0;
};

// Resolves the problem choice, the horizon, the report grid, and the step
// count; validates compatibility and the interior trace at the report times.
// Throws ConfigError on any violation.
LoadedProblem load_problem(const RunConfig& cfg);

// One family's solve plus its error tables and per-step error series.
struct FamilyRun {
  WaveletFamily family;
  std::string label;  // "taylor" or "chebyshev"
  SolveOutput output;
  TableRows tables;                  // empty when no exact reference
  std::vector<ErrorReport> series;   // per step, empty when no exact reference
  double seconds = 0.0;
};

FamilyRun run_family(const LoadedProblem& loaded, WaveletFamily family,
                     const RunConfig& cfg);

// Writes solution_errors.csv, control_errors.csv, error_series.csv,
// diagnostics.csv, and timing.txt under cfg.output_dir. Returns an exit
// code; solver failures are reported on stderr.
int run_command(const RunConfig& cfg);

struct ComparisonRow {
  double t = 0.0;
  double x = 0.0;
  double twm_error = 0.0;
  double cwm_error = 0.0;
  double ratio = 0.0;  // cwm / twm
};

std::vector<ComparisonRow> build_comparison(const TableRows& taylor,
                                            const TableRows& chebyshev);

struct ComparisonSummary {
  double max_ratio = 0.0;
  double median_ratio = 0.0;
};

ComparisonSummary summarize_comparison(const std::vector<ComparisonRow>& rows);

// Runs both families, writes comparison.csv, and prints the max/median
// error-ratio summary line. Requires family = both and an exact reference.
int compare_command(const RunConfig& cfg);

}  // namespace parawave
