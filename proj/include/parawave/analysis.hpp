#pragma once

#include <Eigen/Dense>

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "parawave/basis.hpp"
#include "parawave/problem.hpp"
#include "parawave/solver.hpp"

namespace parawave {

// Raised by table builders when the request cannot be served (no exact
// reference, or a report time off the step grid).
class ReportError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// max_l |exact_l - numeric_l|
double linf_error(const Eigen::VectorXd& exact, const Eigen::VectorXd& numeric);

// (1/N) * sqrt(sum_l |exact_l - numeric_l|^2); the 1/N prefactor sits
// outside the square root.
double l2_error(const Eigen::VectorXd& exact, const Eigen::VectorXd& numeric);

struct ErrorReport {
  double linf = 0.0;
  double l2 = 0.0;
  std::vector<std::pair<double, double>> pointwise;  // (x, |y - Y|)
  double t = 0.0;
};

ErrorReport make_error_report(const Eigen::VectorXd& x,
                              const Eigen::VectorXd& exact,
                              const Eigen::VectorXd& numeric, double t);

// Printed coefficient-decay bound for m >= 2:
//   Taylor:    L sqrt(2m+1) / (n^{5/2} (m+1)(m+2)(m+3))
//   Chebyshev: gamma_m pi L / (32 n^{5/2} (m-1)^2)
// Throws std::domain_error for m < 2.
double coefficient_bound(WaveletFamily family, int n, int m, double L);

// Square root of the truncated double tail series behind the convergence
// constant, with a monotone integral-test estimate of what the truncation
// dropped (propagated through the square root).
struct KappaTail {
  double value = 0.0;
  double remainder = 0.0;
};

KappaTail kappa_tail(WaveletFamily family, int k, int M, long trunc);

// The convergence constant kappa = lambda * tail; lambda has no computable
// formula, so it is user-supplied and the tail is reported on its own too.
struct BoundEstimate {
  WaveletFamily family;
  int k = 0;
  int M = 0;
  double L = 0.0;
  double lambda = 0.0;
  double tail = 0.0;
  double kappa = 0.0;
};

BoundEstimate make_bound_estimate(WaveletFamily family, int k, int M, double L,
                                  double lambda, long trunc = 10000);

struct DecayMargin {
  int n = 0;
  int m = 0;
  double coefficient = 0.0;
  double bound = 0.0;
  double margin = 0.0;  // bound - |coefficient|; negative means violated
};

struct DecayCheck {
  bool passed = true;
  std::vector<DecayMargin> margins;  // one entry per index with m >= 2
};

// Expands f in the given basis and compares every m >= 2 coefficient
// against coefficient_bound with the supplied L. Failures are reported
// data, not exceptions.
DecayCheck verify_coefficient_decay(const std::function<double(double)>& f,
                                    double L, const BasisSpec& spec);

// Evaluates the marched field at arbitrary x for any recorded step, by
// accumulating the per-step coefficient contributions of the solution
// representation on top of the initial data.
class FieldReconstructor {
 public:
  FieldReconstructor(const InverseProblem& problem, const BasisSpec& spec,
                     const SolveOutput& output);

  // Y(x, times[step])
  double value(double x, int step) const;
  const std::vector<double>& times() const { return times_; }

 private:
  const InverseProblem* problem_;
  BasisSpec spec_;
  std::vector<double> times_;
  std::vector<Eigen::VectorXd> weighted_prefix_;  // sum_{s<=r} dt_s D_s
  Eigen::VectorXd S_one_;
};

struct SolutionRow {
  double t = 0.0;
  double x = 0.0;
  double exact = 0.0;
  double numeric = 0.0;
  double abs_error = 0.0;
};

struct ControlRow {
  double t = 0.0;
  double exact = 0.0;
  double numeric = 0.0;
  double abs_error = 0.0;
};

struct TableRows {
  std::vector<SolutionRow> solution;
  std::vector<ControlRow> control;
};

// Error tables against the exact reference: solution errors on
// report_x x report_t (field values reconstructed at arbitrary x) and
// control errors at report_t. Each report time must land on the step grid
// within 1e-9.
TableRows build_tables(const SolveOutput& output, const ExactReference& exact,
                       const InverseProblem& problem, const BasisSpec& spec,
                       const std::vector<double>& report_x,
                       const std::vector<double>& report_t);

// Scientific notation with the given number of significant digits,
// e.g. format_scientific(8.721e-7, 4) == "8.721e-07".
std::string format_scientific(double value, int significant);

}  // namespace parawave
