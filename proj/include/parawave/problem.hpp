#pragma once

#include <functional>
#include <string>
#include <vector>

namespace parawave {

// Data of the 1D parabolic source-identification problem
//
//   y_t = A y_xx + B y_x + X(t) y + psi(x,t)   on (0,1) x (0,T]
//
// with initial value y0, Dirichlet boundary values f0/f1, and the
// overspecified interior trace y(x_in, t) = Q(t) that makes the unknown
// control X(t) recoverable. Derivatives are supplied analytically by the
// problem author; the scheme consumes them directly.
struct InverseProblem {
  double A = 0.0;  // diffusion coefficient
  double B = 0.0;  // advection coefficient
  std::function<double(double, double)> psi;  // source term psi(x, t)
  std::function<double(double)> y0;           // initial value
  std::function<double(double)> y0_x;
  std::function<double(double)> y0_xx;
  std::function<double(double)> f0;  // y(0, t)
  std::function<double(double)> f0_t;
  std::function<double(double)> f1;  // y(1, t)
  std::function<double(double)> f1_t;
  std::function<double(double)> Q;  // y(x_in, t)
  std::function<double(double)> Q_t;
  double x_in = 0.5;
  double T = 1.0;
};

// Closed-form reference solution, when one is known, for error reporting.
struct ExactReference {
  bool present = false;
  std::function<double(double, double)> y;  // y(x, t)
  std::function<double(double)> X;          // X(t)
};

struct ExampleProblem {
  InverseProblem problem;
  ExactReference exact;
};

// y = x e^t, X = 1 + t^2 on T = 1 (advection-diffusion with exponential
// boundary data).
ExampleProblem example_one();

// y = x sin t, X = t on T = 0.5. Q(0) = 0, which exercises the control
// bootstrap at t = 0.
ExampleProblem example_two();

struct Violation {
  enum class Kind {
    LeftBoundaryCompatibility,   // y0(0) != f0(0)
    RightBoundaryCompatibility,  // y0(1) != f1(0)
    InteriorCompatibility,       // y0(x_in) != Q(0)
    ZeroInteriorTrace,           // |Q(t)| <= 1e-12 at a sampled time
  };
  Kind kind;
  double where;     // t for trace violations, x for compatibility
  double expected;
  double actual;
  std::string message;
};

// Checks t = 0 compatibility (within 1e-10) and |Q(t)| > 1e-12 at each of
// the given times. Violations are data, not exceptions.
std::vector<Violation> validate(const InverseProblem& problem,
                                const std::vector<double>& times);

}  // namespace parawave
