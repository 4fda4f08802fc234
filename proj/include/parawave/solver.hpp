#pragma once

#include <Eigen/Dense>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "parawave/basis.hpp"
#include "parawave/problem.hpp"

namespace parawave {

enum class LinearMethod { DirectLU, RestartedGMRES };

struct SolverConfig {
  BasisSpec basis;
  double dt = 1e-3;
  int steps = 0;  // N_t; dt * steps must equal the problem horizon
  LinearMethod method = LinearMethod::DirectLU;
  double gmres_tol = 1e-12;
  int gmres_restart = 0;  // 0 -> basis size
  int gmres_maxiter = 0;  // 0 -> 10 * basis size
};

class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SingularSystemError : public SolverError {
 public:
  using SolverError::SolverError;
};

class ConvergenceError : public SolverError {
 public:
  ConvergenceError(const std::string& what, double residual)
      : SolverError(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

class DegenerateDataError : public SolverError {
 public:
  using SolverError::SolverError;
};

// Basis data shared by every step of a solve: basis vectors at the
// collocation points and at x_in, plus the assembled row blocks
// K = S - x (x) S(1) and L = R - 1 (x) S(1).
struct BasisWorkspace {
  BasisSpec spec;
  Eigen::VectorXd x;       // collocation points
  Eigen::MatrixXd I;       // row l = I(x_l)^T
  Eigen::MatrixXd R;
  Eigen::MatrixXd S;
  Eigen::VectorXd S_one;   // S(1)
  Eigen::VectorXd I_in, R_in, S_in;  // basis vectors at x_in
  Eigen::MatrixXd K;       // S - x * S(1)^T
  Eigen::MatrixXd L;       // R - 1 * S(1)^T

  BasisWorkspace(const BasisSpec& spec, double x_in);
};

// Field snapshots carried between steps. Y, Yx, Yxx live on the collocation
// grid; the interior point x_in and the reconstructed boundary values are
// tracked separately so no interpolation is ever needed.
struct StepState {
  int r = 0;
  double t = 0.0;
  Eigen::VectorXd Y, Yx, Yxx;
  double Y_in = 0.0, Yx_in = 0.0, Yxx_in = 0.0;
  double Y_left = 0.0, Y_right = 0.0;
  std::optional<Eigen::VectorXd> D_prev;  // absent at r = 0
  std::optional<double> X;                // absent at t = 0 when Q(0) = 0
};

struct Snapshot {
  Eigen::VectorXd Y, Yx, Yxx;
};

struct StepDiagnostics {
  double residual = 0.0;   // ||M D - b||_2 of the accepted solution
  int iterations = 0;      // 0 for a direct solve
  double boundary_gap = 0.0;
};

struct SolveOutput {
  std::vector<double> times;                      // steps + 1 entries
  std::vector<std::optional<double>> X_series;    // aligned with times
  std::vector<Snapshot> snapshots;                // aligned with times
  std::vector<Eigen::VectorXd> D_history;         // one per step
  std::vector<StepDiagnostics> diagnostics;       // one per step
};

// Fills the t = 0 snapshots from y0 and its supplied derivatives; X(0) is
// computed from the overspecified condition when |Q(0)| > 1e-12.
StepState init_state(const InverseProblem& problem, const BasisSpec& spec);

// Predicts X(t_{r+1}) by a first-order Taylor expansion of the interior
// derivatives, with the dt-corrections taken from the previous step's
// coefficients (zero on the bootstrap step where none exist). Throws
// DegenerateDataError when |Q(t_{r+1})| <= 1e-12.
double predict_control(const StepState& state, const InverseProblem& problem,
                       double dt, const BasisWorkspace& work);

struct AssembledSystem {
  Eigen::MatrixXd M;
  Eigen::VectorXd b;
};

// Collocated system for the new coefficients D at t_next: row l is
// K(x_l) - A dt I(x_l) - B dt L(x_l) - X dt K(x_l); the right side carries
// the t_r snapshots and the boundary data at both time levels.
AssembledSystem assemble(const StepState& state, double X_next,
                         const InverseProblem& problem, double t_next,
                         const BasisWorkspace& work);

struct LinearSolveResult {
  Eigen::VectorXd D;
  double residual = 0.0;
  int iterations = 0;
};

// Direct partial-pivoting LU or restarted GMRES, per cfg.method. Either way
// the returned D satisfies ||M D - b|| <= max(gmres_tol * ||b||, 1e-10).
LinearSolveResult linear_solve(const Eigen::MatrixXd& M,
                               const Eigen::VectorXd& b,
                               const SolverConfig& cfg);

struct GmresResult {
  Eigen::VectorXd x;
  double residual = 0.0;  // absolute ||b - A x||
  int iterations = 0;
  bool converged = false;
};

GmresResult gmres(const Eigen::MatrixXd& A, const Eigen::VectorXd& b,
                  int restart, int maxiter, double rel_tol);

// Propagates all snapshots to t + dt with the solved coefficients and stores
// them as D_prev for the next control prediction.
StepState advance(const StepState& state, const Eigen::VectorXd& D,
                  double X_next, const InverseProblem& problem, double dt,
                  const BasisWorkspace& work);

// Full march: init, then steps times (predict, assemble, solve, advance).
// Step-level failures are rethrown annotated with the step index and time.
// When |Q(t_{r+1})| <= 1e-12 the control prediction is skipped and the
// previous X is carried forward (0 if none exists yet).
SolveOutput run(const InverseProblem& problem, const SolverConfig& cfg);

}  // namespace parawave
