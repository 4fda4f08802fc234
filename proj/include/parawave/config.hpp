#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "parawave/problem.hpp"
#include "parawave/solver.hpp"

namespace parawave {

class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& what, int line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

struct RunConfig {
  enum class Problem { Example1, Example2, Custom };
  enum class Family { Taylor, Chebyshev, Both };

  Problem problem = Problem::Example1;
  std::string problem_path;  // for Problem::Custom
  Family family = Family::Taylor;
  int k = 4;
  int M = 4;
  double dt = 1e-3;
  std::optional<double> t_end;  // defaults to the problem horizon
  std::vector<double> report_x = {0.125, 0.25, 0.375, 0.5,
                                  0.625, 0.75, 0.875};
  std::vector<double> report_t;  // defaults to ten equal divisions of t_end
  LinearMethod solver = LinearMethod::DirectLU;
  double gmres_tol = 1e-12;
  int gmres_restart = 0;
  int gmres_maxiter = 0;
  std::string output_dir = ".";
};

// Parses flat "key = value" text (blank lines and '#' comments allowed).
// A problem value other than example1/example2 names a problem file.
// Throws ConfigError with the offending line number.
RunConfig parse_config(const std::string& text);

// Reads a problem definition from key = value text whose values are
// closed-form expressions in x and t. Required keys: A, B, psi, y0, y0_x,
// y0_xx, f0, f0_t, f1, f1_t, Q, Q_t, x_in, T. Optional: exact_y, exact_X
// (both or neither).
ExampleProblem parse_problem_text(const std::string& text);

ExampleProblem load_problem_file(const std::string& path);

}  // namespace parawave
