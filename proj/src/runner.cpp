#include "parawave/runner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "parawave/csv.hpp"

namespace parawave {

namespace {

std::ofstream open_output(const std::filesystem::path& dir,
                          const std::string& name) {
  std::ofstream out(dir / name);
  if (!out)
    throw std::runtime_error("cannot open output file " + (dir / name).string());
  return out;
}

std::vector<double> default_report_t(double t_end) {
  std::vector<double> out;
  for (int i = 1; i <= 10; ++i) out.push_back(i * t_end / 10.0);
  return out;
}

}  // namespace

LoadedProblem load_problem(const RunConfig& cfg) {
  LoadedProblem loaded;
  switch (cfg.problem) {
    case RunConfig::Problem::Example1: {
      auto ex = example_one();
      loaded.problem = std::move(ex.problem);
      loaded.exact = std::move(ex.exact);
      loaded.name = "example1";
      break;
    }
    case RunConfig::Problem::Example2: {
      auto ex = example_two();
      loaded.problem = std::move(ex.problem);
      loaded.exact = std::move(ex.exact);
      loaded.name = "example2";
      break;
    }
    case RunConfig::Problem::Custom: {
      auto ex = load_problem_file(cfg.problem_path);
      loaded.problem = std::move(ex.problem);
      loaded.exact = std::move(ex.exact);
      loaded.name = std::filesystem::path(cfg.problem_path).stem().string();
      break;
    }
  }
  const double horizon = cfg.t_end.value_or(loaded.problem.T);
  loaded.problem.T = horizon;
  const double steps = horizon / cfg.dt;
  if (std::abs(std::round(steps) * cfg.dt - horizon) > 1e-12)
    throw ConfigError("dt does not divide the run horizon", 0);
  loaded.steps = int(std::lround(steps));
  loaded.report_t = cfg.report_t.empty() ? default_report_t(horizon)
                                         : cfg.report_t;
  for (double t : loaded.report_t) {
    if (t < 0.0 || t > horizon + 1e-12)
      throw ConfigError("report_t entry outside the run horizon", 0);
  }

  const auto violations = validate(loaded.problem, loaded.report_t);
  if (!violations.empty()) {
    std::string what = "problem data invalid:";
    for (const auto& v : violations) what += "\n  " + v.message;
    throw ConfigError(what, 0);
  }
  return loaded;
}

FamilyRun run_family(const LoadedProblem& loaded, WaveletFamily family,
                     const RunConfig& cfg) {
  FamilyRun run{family,
                family == WaveletFamily::Taylor ? "taylor" : "chebyshev",
                {},
                {},
                {},
                0.0};
  SolverConfig scfg{BasisSpec(family, cfg.k, cfg.M),
                    cfg.dt,
                    loaded.steps,
                    cfg.solver,
                    cfg.gmres_tol,
                    cfg.gmres_restart,
                    cfg.gmres_maxiter};
  const auto start = std::chrono::steady_clock::now();
  run.output = parawave::run(loaded.problem, scfg);
  run.seconds = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  if (loaded.exact.present) {
    run.tables = build_tables(run.output, loaded.exact, loaded.problem,
                              scfg.basis, cfg.report_x, loaded.report_t);
    const Eigen::VectorXd x = collocation_points(scfg.basis);
    Eigen::VectorXd exact_vals(x.size());
    run.series.reserve(run.output.times.size());
    for (std::size_t r = 0; r < run.output.times.size(); ++r) {
      const double t = run.output.times[r];
      for (int i = 0; i < x.size(); ++i) exact_vals[i] = loaded.exact.y(x[i], t);
      run.series.push_back(
          make_error_report(x, exact_vals, run.output.snapshots[r].Y, t));
    }
  }
  return run;
}

int run_command(const RunConfig& cfg) {
  LoadedProblem loaded;
  try {
    loaded = load_problem(cfg);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  }

  std::vector<WaveletFamily> families;
  if (cfg.family != RunConfig::Family::Chebyshev)
    families.push_back(WaveletFamily::Taylor);
  if (cfg.family != RunConfig::Family::Taylor)
    families.push_back(WaveletFamily::ChebyshevFirstKind);

  std::vector<FamilyRun> runs;
  for (WaveletFamily family : families) {
    try {
      runs.push_back(run_family(loaded, family, cfg));
    } catch (const SolverError& e) {
      std::cerr << "solver failure (" << loaded.name << "): " << e.what()
                << "\n";
      return kExitSolverError;
    }
  }

  const std::filesystem::path dir(cfg.output_dir);
  std::filesystem::create_directories(dir);
  const std::string dt_str = csv::num(cfg.dt);

  auto solution = open_output(dir, "solution_errors.csv");
  csv::write_row(solution, {"family", "dt", "t", "x", "abs_error"});
  for (const auto& run : runs) {
    for (const auto& row : run.tables.solution) {
      csv::write_row(solution, {run.label, dt_str, csv::num(row.t),
                                csv::num(row.x), csv::num(row.abs_error)});
    }
  }

  auto control = open_output(dir, "control_errors.csv");
  csv::write_row(control, {"family", "dt", "t", "exact_X", "abs_error"});
  for (const auto& run : runs) {
    for (const auto& row : run.tables.control) {
      csv::write_row(control, {run.label, dt_str, csv::num(row.t),
                               csv::num(row.exact), csv::num(row.abs_error)});
    }
  }

  auto series = open_output(dir, "error_series.csv");
  csv::write_row(series, {"family", "t", "linf", "l2"});
  for (const auto& run : runs) {
    for (const auto& report : run.series) {
      csv::write_row(series, {run.label, csv::num(report.t),
                              csv::num(report.linf), csv::num(report.l2)});
    }
  }

  auto diagnostics = open_output(dir, "diagnostics.csv");
  csv::write_row(diagnostics, {"family", "step", "residual", "iterations"});
  for (const auto& run : runs) {
    for (std::size_t s = 0; s < run.output.diagnostics.size(); ++s) {
      const auto& diag = run.output.diagnostics[s];
      csv::write_row(diagnostics,
                     {run.label, std::to_string(s + 1),
                      csv::num(diag.residual), std::to_string(diag.iterations)});
    }
  }

  auto timing = open_output(dir, "timing.txt");
  for (const auto& run : runs) {
    timing << loaded.name << " " << run.label << " dt=" << dt_str
           << " wall_seconds=" << run.seconds << "\n";
  }

  if (!loaded.exact.present) {
    std::cerr << "note: no exact reference; error tables were left empty\n";
    std::cout << "recovered control parameter (" << loaded.name << "):\n";
    for (const auto& run : runs) {
      for (double t : loaded.report_t) {
        const auto& times = run.output.times;
        const auto it = std::min_element(
            times.begin(), times.end(), [t](double a, double b) {
              return std::abs(a - t) < std::abs(b - t);
            });
        const std::size_t r = std::size_t(it - times.begin());
        if (run.output.X_series[r].has_value()) {
          std::cout << "  " << run.label << " t=" << csv::num(times[r])
                    << " X=" << csv::num(*run.output.X_series[r]) << "\n";
        }
      }
    }
  }
  return kExitOk;
}

std::vector<ComparisonRow> build_comparison(const TableRows& taylor,
                                            const TableRows& chebyshev) {
  if (taylor.solution.size() != chebyshev.solution.size())
    throw std::invalid_argument("comparison: table sizes differ");
  std::vector<ComparisonRow> rows;
  rows.reserve(taylor.solution.size());
  for (std::size_t i = 0; i < taylor.solution.size(); ++i) {
    const auto& tw = taylor.solution[i];
    const auto& cw = chebyshev.solution[i];
    ComparisonRow row;
    row.t = tw.t;
    row.x = tw.x;
    row.twm_error = tw.abs_error;
    row.cwm_error = cw.abs_error;
    if (tw.abs_error == 0.0 && cw.abs_error == 0.0) {
      row.ratio = 1.0;
    } else if (tw.abs_error == 0.0) {
      row.ratio = std::numeric_limits<double>::infinity();
    } else {
      row.ratio = cw.abs_error / tw.abs_error;
    }
    rows.push_back(row);
  }
  return rows;
}

ComparisonSummary summarize_comparison(
    const std::vector<ComparisonRow>& rows) {
  ComparisonSummary summary;
  if (rows.empty()) return summary;
  std::vector<double> ratios;
  ratios.reserve(rows.size());
  for (const auto& row : rows) ratios.push_back(row.ratio);
  std::sort(ratios.begin(), ratios.end());
  summary.max_ratio = ratios.back();
  const std::size_t n = ratios.size();
  summary.median_ratio = n % 2 == 1
                             ? ratios[n / 2]
                             : 0.5 * (ratios[n / 2 - 1] + ratios[n / 2]);
  return summary;
}

int compare_command(const RunConfig& cfg) {
  if (cfg.family != RunConfig::Family::Both) {
    std::cerr << "config error: compare needs family = both\n";
    return kExitConfigError;
  }
  LoadedProblem loaded;
  try {
    loaded = load_problem(cfg);
    if (!loaded.exact.present)
      throw ConfigError("compare needs an exact reference solution", 0);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  }

  FamilyRun taylor, chebyshev;
  try {
    taylor = run_family(loaded, WaveletFamily::Taylor, cfg);
    chebyshev = run_family(loaded, WaveletFamily::ChebyshevFirstKind, cfg);
  } catch (const SolverError& e) {
    std::cerr << "solver failure (" << loaded.name << "): " << e.what() << "\n";
    return kExitSolverError;
  }

  const auto rows = build_comparison(taylor.tables, chebyshev.tables);
  const auto summary = summarize_comparison(rows);

  const std::filesystem::path dir(cfg.output_dir);
  std::filesystem::create_directories(dir);
  auto out = open_output(dir, "comparison.csv");
  csv::write_row(out, {"t", "x", "twm_error", "cwm_error", "ratio"});
  for (const auto& row : rows) {
    csv::write_row(out, {csv::num(row.t), csv::num(row.x),
                         csv::num(row.twm_error), csv::num(row.cwm_error),
                         csv::num(row.ratio)});
  }
  std::cout << "cwm/twm error ratio: max=" << csv::num(summary.max_ratio)
            << " median=" << csv::num(summary.median_ratio) << "\n";
  return kExitOk;
}

}  // namespace parawave
