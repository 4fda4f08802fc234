#include "parawave/solver.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace parawave {

namespace {

constexpr double kTraceTol = 1e-12;

}  // namespace

BasisWorkspace::BasisWorkspace(const BasisSpec& spec_, double x_in)
    : spec(spec_), x(collocation_points(spec_)) {
  const int n = spec.size();
  I.resize(n, n);
  R.resize(n, n);
  S.resize(n, n);
  for (int l = 0; l < n; ++l) {
    const BasisVectors bv = basis_vectors(spec, x[l]);
    I.row(l) = bv.I;
    R.row(l) = bv.R;
    S.row(l) = bv.S;
  }
  S_one = basis_vectors(spec, 1.0).S;
  const BasisVectors at_in = basis_vectors(spec, x_in);
  I_in = at_in.I;
  R_in = at_in.R;
  S_in = at_in.S;
  K = S - x * S_one.transpose();
  L = R - Eigen::VectorXd::Ones(n) * S_one.transpose();
}

StepState init_state(const InverseProblem& problem, const BasisSpec& spec) {
  StepState st;
  const Eigen::VectorXd x = collocation_points(spec);
  const int n = spec.size();
  st.Y.resize(n);
  st.Yx.resize(n);
  st.Yxx.resize(n);
  for (int i = 0; i < n; ++i) {
    st.Y[i] = problem.y0(x[i]);
    st.Yx[i] = problem.y0_x(x[i]);
    st.Yxx[i] = problem.y0_xx(x[i]);
  }
  st.Y_in = problem.y0(problem.x_in);
  st.Yx_in = problem.y0_x(problem.x_in);
  st.Yxx_in = problem.y0_xx(problem.x_in);
  st.Y_left = problem.y0(0.0);
  st.Y_right = problem.y0(1.0);
  const double q0 = problem.Q(0.0);
  if (std::abs(q0) > kTraceTol) {
    st.X = (problem.Q_t(0.0) - problem.A * st.Yxx_in -
            problem.B * st.Yx_in - problem.psi(problem.x_in, 0.0)) /
           q0;
  }
  return st;
}

double predict_control(const StepState& state, const InverseProblem& problem,
                       double dt, const BasisWorkspace& work) {
  const double t_next = state.t + dt;
  const double q = problem.Q(t_next);
  if (std::abs(q) <= kTraceTol) {
    std::ostringstream msg;
    msg << "overspecified trace Q(t) vanishes at t=" << t_next
        << "; the control parameter is undefined there";
    throw DegenerateDataError(msg.str());
  }
  double w1 = 0.0;
  double w2 = 0.0;
  if (state.D_prev) {
    const Eigen::VectorXd& d = *state.D_prev;
    w2 = work.I_in.dot(d);
    w1 = work.R_in.dot(d) - work.S_one.dot(d) + problem.f1_t(state.t) -
         problem.f0_t(state.t);
  }
  return (problem.Q_t(t_next) - problem.A * (state.Yxx_in + dt * w2) -
          problem.B * (state.Yx_in + dt * w1) -
          problem.psi(problem.x_in, t_next)) /
         q;
}

AssembledSystem assemble(const StepState& state, double X_next,
                         const InverseProblem& problem, double t_next,
                         const BasisWorkspace& work) {
  const double t_r = state.t;
  const double dt = t_next - t_r;
  const double f0d = problem.f0(t_next) - problem.f0(t_r);
  const double f1d = problem.f1(t_next) - problem.f1(t_r);
  const double df0 = problem.f0_t(t_next);
  const double df1 = problem.f1_t(t_next);
  AssembledSystem sys;
  sys.M = (1.0 - X_next * dt) * work.K - (problem.A * dt) * work.I -
          (problem.B * dt) * work.L;
  const int n = work.spec.size();
  sys.b.resize(n);
  for (int l = 0; l < n; ++l) {
    const double xl = work.x[l];
    sys.b[l] = problem.psi(xl, t_next) - xl * (df1 - df0) - df0 +
               problem.A * state.Yxx[l] +
               problem.B * (state.Yx[l] + f1d - f0d) +
               X_next * (state.Y[l] + f0d + xl * (f1d - f0d));
  }
  return sys;
}

GmresResult gmres(const Eigen::MatrixXd& A, const Eigen::VectorXd& b,
                  int restart, int maxiter, double rel_tol) {
  const int n = int(b.size());
  GmresResult result;
  result.x = Eigen::VectorXd::Zero(n);
  const double bnorm = b.norm();
  if (bnorm == 0.0) {
    result.converged = true;
    return result;
  }
  restart = std::min(std::max(restart, 1), n);
  while (result.iterations < maxiter) {
    Eigen::VectorXd r = b - A * result.x;
    const double beta = r.norm();
    result.residual = beta;
    if (beta <= rel_tol * bnorm) {
      result.converged = true;
      return result;
    }
    Eigen::MatrixXd V(n, restart + 1);
    Eigen::MatrixXd H = Eigen::MatrixXd::Zero(restart + 1, restart);
    Eigen::VectorXd g = Eigen::VectorXd::Zero(restart + 1);
    Eigen::VectorXd cs(restart), sn(restart);
    V.col(0) = r / beta;
    g[0] = beta;
    int j = 0;
    bool breakdown = false;
    for (; j < restart && result.iterations < maxiter; ++j) {
      Eigen::VectorXd w = A * V.col(j);
      for (int i = 0; i <= j; ++i) {  // modified Gram-Schmidt
        H(i, j) = V.col(i).dot(w);
        w -= H(i, j) * V.col(i);
      }
      H(j + 1, j) = w.norm();
      if (H(j + 1, j) > 0.0) V.col(j + 1) = w / H(j + 1, j);
      for (int i = 0; i < j; ++i) {  // previously accumulated rotations
        const double tmp = cs[i] * H(i, j) + sn[i] * H(i + 1, j);
        H(i + 1, j) = -sn[i] * H(i, j) + cs[i] * H(i + 1, j);
        H(i, j) = tmp;
      }
      const double denom = std::hypot(H(j, j), H(j + 1, j));
      cs[j] = H(j, j) / denom;
      sn[j] = H(j + 1, j) / denom;
      H(j, j) = denom;
      H(j + 1, j) = 0.0;
      g[j + 1] = -sn[j] * g[j];
      g[j] = cs[j] * g[j];
      ++result.iterations;
      result.residual = std::abs(g[j + 1]);
      if (result.residual <= rel_tol * bnorm || H(j, j) == 0.0) {
        ++j;
        breakdown = true;
        break;
      }
    }
    // back-substitute the j x j triangular least-squares system
    Eigen::VectorXd y(j);
    for (int i = j - 1; i >= 0; --i) {
      double s = g[i];
      for (int l = i + 1; l < j; ++l) s -= H(i, l) * y[l];
      y[i] = s / H(i, i);
    }
    result.x += V.leftCols(j) * y;
    if (breakdown || result.residual <= rel_tol * bnorm) {
      const double true_res = (b - A * result.x).norm();
      result.residual = true_res;
      if (true_res <= rel_tol * bnorm) {
        result.converged = true;
        return result;
      }
    }
  }
  result.residual = (b - A * result.x).norm();
  result.converged = result.residual <= rel_tol * bnorm;
  return result;
}

LinearSolveResult linear_solve(const Eigen::MatrixXd& M,
                               const Eigen::VectorXd& b,
                               const SolverConfig& cfg) {
  if (M.rows() != M.cols() || M.rows() != b.size())
    throw std::invalid_argument("linear_solve: shape mismatch");
  const double bound = std::max(cfg.gmres_tol * b.norm(), 1e-10);
  if (cfg.method == LinearMethod::DirectLU) {
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(M);
    const double scale = M.cwiseAbs().maxCoeff();
    const double pivot_floor =
        scale * M.rows() * std::numeric_limits<double>::epsilon();
    if (scale == 0.0 ||
        lu.matrixLU().diagonal().cwiseAbs().minCoeff() <= pivot_floor)
      throw SingularSystemError("singular system in LU factorization");
    LinearSolveResult out;
    out.D = lu.solve(b);
    out.residual = (M * out.D - b).norm();
    if (out.residual > bound) {
      out.D += lu.solve(b - M * out.D);  // one refinement pass
      out.residual = (M * out.D - b).norm();
      if (out.residual > bound) {
        std::ostringstream msg;
        msg << "LU residual " << out.residual << " above bound " << bound;
        throw ConvergenceError(msg.str(), out.residual);
      }
    }
    return out;
  }
  const int n = int(M.rows());
  const int restart = cfg.gmres_restart > 0 ? cfg.gmres_restart : n;
  const int maxiter = cfg.gmres_maxiter > 0 ? cfg.gmres_maxiter : 10 * n;
  const GmresResult g = gmres(M, b, restart, maxiter, cfg.gmres_tol);
  if (!g.converged) {
    std::ostringstream msg;
    msg << "GMRES did not converge within " << maxiter
        << " iterations (residual " << g.residual << ")";
    throw ConvergenceError(msg.str(), g.residual);
  }
  return {g.x, g.residual, g.iterations};
}

StepState advance(const StepState& state, const Eigen::VectorXd& D,
                  double X_next, const InverseProblem& problem, double dt,
                  const BasisWorkspace& work) {
  const double t_old = state.t;
  const double t_new = t_old + dt;
  const double f0d = problem.f0(t_new) - problem.f0(t_old);
  const double f1d = problem.f1(t_new) - problem.f1(t_old);
  const int n = work.spec.size();
  StepState next;
  next.r = state.r + 1;
  next.t = t_new;
  next.Yxx = state.Yxx + dt * (work.I * D);
  next.Yx = state.Yx + dt * (work.L * D) +
            Eigen::VectorXd::Constant(n, f1d - f0d);
  next.Y = state.Y + dt * (work.K * D) +
           Eigen::VectorXd::Constant(n, f0d) + (f1d - f0d) * work.x;
  const double s1d = work.S_one.dot(D);
  next.Yxx_in = state.Yxx_in + dt * work.I_in.dot(D);
  next.Yx_in = state.Yx_in + dt * (work.R_in.dot(D) - s1d) + (f1d - f0d);
  const double x_in = problem.x_in;
  next.Y_in = state.Y_in + dt * (work.S_in.dot(D) - x_in * s1d) + f0d +
              x_in * (f1d - f0d);
  // S(0) = 0 and S(1) - 1*S(1) = 0, so the boundary updates reduce to the
  // boundary data increments.
  next.Y_left = state.Y_left + f0d;
  next.Y_right = state.Y_right + f1d;
  next.D_prev = D;
  next.X = X_next;
  return next;
}

SolveOutput run(const InverseProblem& problem, const SolverConfig& cfg) {
  if (cfg.steps < 1)
    throw std::invalid_argument("solver config: steps must be >= 1");
  if (std::abs(cfg.dt * cfg.steps - problem.T) > 1e-12) {
    std::ostringstream msg;
    msg << "solver config: dt*steps = " << cfg.dt * cfg.steps
        << " differs from the horizon T = " << problem.T;
    throw std::invalid_argument(msg.str());
  }
  const BasisWorkspace work(cfg.basis, problem.x_in);
  StepState state = init_state(problem, cfg.basis);
  SolveOutput out;
  out.times.reserve(cfg.steps + 1);
  out.times.push_back(state.t);
  out.X_series.push_back(state.X);
  out.snapshots.push_back({state.Y, state.Yx, state.Yxx});
  for (int r = 0; r < cfg.steps; ++r) {
    const double t_next = state.t + cfg.dt;
    try {
      double X_next;
      if (std::abs(problem.Q(t_next)) <= kTraceTol) {
        X_next = state.X.value_or(0.0);  // Q-guard: carry the control forward
      } else if (state.r == 0 && state.X.has_value()) {
        // No slope data exists before the first solve; the t = 0 control
        // value from the overspecified condition is the best available
        // prediction and avoids injecting a large bootstrap error.
        X_next = *state.X;
      } else {
        X_next = predict_control(state, problem, cfg.dt, work);
      }
      const AssembledSystem sys = assemble(state, X_next, problem, t_next, work);
      LinearSolveResult sol = linear_solve(sys.M, sys.b, cfg);
      state = advance(state, sol.D, X_next, problem, cfg.dt, work);
      StepDiagnostics diag;
      diag.residual = sol.residual;
      diag.iterations = sol.iterations;
      diag.boundary_gap =
          std::max(std::abs(state.Y_left - problem.f0(state.t)),
                   std::abs(state.Y_right - problem.f1(state.t)));
      out.times.push_back(state.t);
      out.X_series.push_back(state.X);
      out.snapshots.push_back({state.Y, state.Yx, state.Yxx});
      out.D_history.push_back(std::move(sol.D));
      out.diagnostics.push_back(diag);
    } catch (const SolverError& e) {
      std::ostringstream msg;
      msg << "step " << r + 1 << " (t=" << t_next << "): " << e.what();
      throw SolverError(msg.str());
    }
  }
  return out;
}

}  // namespace parawave
