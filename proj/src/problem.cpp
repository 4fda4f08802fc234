#include "parawave/problem.hpp"

#include <cmath>
#include <sstream>

namespace parawave {

namespace {

constexpr double kCompatTol = 1e-10;
constexpr double kTraceTol = 1e-12;

std::string describe(const char* what, double where, double expected,
                     double actual) {
  std::ostringstream msg;
  msg << what << " at " << where << ": expected " << expected << ", got "
      << actual;
  return msg.str();
}

}  // namespace

ExampleProblem example_one() {
  ExampleProblem ex;
  ex.problem.A = 1.0;
  ex.problem.B = 2.0;
  ex.problem.psi = [](double x, double t) {
    return -(2.0 + x * t * t) * std::exp(t);
  };
  ex.problem.y0 = [](double x) { return x; };
  ex.problem.y0_x = [](double) { return 1.0; };
  ex.problem.y0_xx = [](double) { return 0.0; };
  ex.problem.f0 = [](double) { return 0.0; };
  ex.problem.f0_t = [](double) { return 0.0; };
  ex.problem.f1 = [](double t) { return std::exp(t); };
  ex.problem.f1_t = [](double t) { return std::exp(t); };
  ex.problem.Q = [](double t) { return 0.5 * std::exp(t); };
  ex.problem.Q_t = [](double t) { return 0.5 * std::exp(t); };
  ex.problem.x_in = 0.5;
  ex.problem.T = 1.0;
  ex.exact.present = true;
  ex.exact.y = [](double x, double t) { return x * std::exp(t); };
  ex.exact.X = [](double t) { return 1.0 + t * t; };
  return ex;
}

ExampleProblem example_two() {
  ExampleProblem ex;
  ex.problem.A = 1.0;
  ex.problem.B = 0.0;
  ex.problem.psi = [](double x, double t) {
    return x * std::cos(t) - t * x * std::sin(t);
  };
  ex.problem.y0 = [](double) { return 0.0; };
  ex.problem.y0_x = [](double) { return 0.0; };
  ex.problem.y0_xx = [](double) { return 0.0; };
  ex.problem.f0 = [](double) { return 0.0; };
  ex.problem.f0_t = [](double) { return 0.0; };
  ex.problem.f1 = [](double t) { return std::sin(t); };
  ex.problem.f1_t = [](double t) { return std::cos(t); };
  ex.problem.Q = [](double t) { return 0.5 * std::sin(t); };
  ex.problem.Q_t = [](double t) { return 0.5 * std::cos(t); };
  ex.problem.x_in = 0.5;
  ex.problem.T = 0.5;
  ex.exact.present = true;
  ex.exact.y = [](double x, double t) { return x * std::sin(t); };
  ex.exact.X = [](double t) { return t; };
  return ex;
}

std::vector<Violation> validate(const InverseProblem& problem,
                                const std::vector<double>& times) {
  std::vector<Violation> out;
  const double left = problem.y0(0.0);
  const double f00 = problem.f0(0.0);
  if (std::abs(left - f00) > kCompatTol) {
    out.push_back({Violation::Kind::LeftBoundaryCompatibility, 0.0, f00, left,
                   describe("initial value disagrees with f0(0)", 0.0, f00,
                            left)});
  }
  const double right = problem.y0(1.0);
  const double f10 = problem.f1(0.0);
  if (std::abs(right - f10) > kCompatTol) {
    out.push_back({Violation::Kind::RightBoundaryCompatibility, 1.0, f10,
                   right,
                   describe("initial value disagrees with f1(0)", 1.0, f10,
                            right)});
  }
  const double interior = problem.y0(problem.x_in);
  const double q0 = problem.Q(0.0);
  if (std::abs(interior - q0) > kCompatTol) {
    out.push_back({Violation::Kind::InteriorCompatibility, problem.x_in, q0,
                   interior,
                   describe("initial value disagrees with Q(0)", problem.x_in,
                            q0, interior)});
  }
  for (double t : times) {
    const double q = problem.Q(t);
    if (std::abs(q) <= kTraceTol) {
      out.push_back({Violation::Kind::ZeroInteriorTrace, t, 0.0, q,
                     describe("overspecified trace Q vanishes", t, 0.0, q)});
    }
  }
  return out;
}

}  // namespace parawave
