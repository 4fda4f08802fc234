#include <doctest.h>

#include <cmath>
#include <vector>

#include "parawave/problem.hpp"

using namespace parawave;

TEST_CASE("example one data") {
  const auto ex = example_one();
  CHECK(ex.problem.A == 1.0);
  CHECK(ex.problem.B == 2.0);
  CHECK(ex.problem.x_in == 0.5);
  CHECK(ex.problem.T == 1.0);
  CHECK(ex.problem.psi(0.5, 0.0) == doctest::Approx(-2.0));
  CHECK(ex.exact.X(1.0) == doctest::Approx(2.0));
  CHECK(ex.exact.y(0.5, 0.0) == doctest::Approx(ex.problem.Q(0.0)));
}

TEST_CASE("example two data") {
  const auto ex = example_two();
  CHECK(ex.problem.A == 1.0);
  CHECK(ex.problem.B == 0.0);
  CHECK(ex.problem.T == 0.5);
  CHECK(ex.exact.X(0.5) == doctest::Approx(0.5));
  CHECK(ex.problem.Q(0.0) == 0.0);  // the control-bootstrap special case
  CHECK(ex.problem.psi(1.0, 0.0) == doctest::Approx(1.0));
}

TEST_CASE("exact solutions satisfy the PDE on a 20x20 grid") {
  for (const auto& ex : {example_one(), example_two()}) {
    const auto& p = ex.problem;
    for (int i = 1; i <= 20; ++i) {
      for (int j = 1; j <= 20; ++j) {
        const double x = i / 21.0;
        const double t = j * p.T / 20.0;
        const double h = 1e-5;
        // closed-form derivatives of the two shipped examples
        double y_t, y_x, y_xx;
        if (p.B == 2.0) {  // example one: y = x e^t
          y_t = x * std::exp(t);
          y_x = std::exp(t);
          y_xx = 0.0;
        } else {  // example two: y = x sin t
          y_t = x * std::cos(t);
          y_x = std::sin(t);
          y_xx = 0.0;
        }
        (void)h;
        const double residual = y_t - p.A * y_xx - p.B * y_x -
                                ex.exact.X(t) * ex.exact.y(x, t) - p.psi(x, t);
        CHECK(std::abs(residual) <= 1e-9);
      }
    }
  }
}

TEST_CASE("exact solutions match the boundary and overspecified data") {
  for (const auto& ex : {example_one(), example_two()}) {
    for (int i = 0; i <= 50; ++i) {
      const double t = i * ex.problem.T / 50.0;
      CHECK(std::abs(ex.exact.y(0.0, t) - ex.problem.f0(t)) <= 1e-10);
      CHECK(std::abs(ex.exact.y(1.0, t) - ex.problem.f1(t)) <= 1e-10);
      CHECK(std::abs(ex.exact.y(ex.problem.x_in, t) - ex.problem.Q(t)) <= 1e-10);
    }
  }
}

TEST_CASE("validate accepts the shipped examples away from t=0") {
  std::vector<double> times;
  for (int i = 1; i <= 10; ++i) times.push_back(i / 10.0);
  CHECK(validate(example_one().problem, times).empty());

  std::vector<double> times2;
  for (int i = 1; i <= 10; ++i) times2.push_back(i * 0.05);
  CHECK(validate(example_two().problem, times2).empty());
}

TEST_CASE("validate flags a vanishing interior trace") {
  const auto violations = validate(example_two().problem, {0.0, 0.25});
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].kind == Violation::Kind::ZeroInteriorTrace);
  CHECK(violations[0].where == 0.0);
}

TEST_CASE("validate flags initial-data incompatibility") {
  auto ex = example_one();
  // y0 = 2x^2 keeps y0(0) = 0 and y0(0.5) = 0.5 but breaks y0(1) = f1(0)
  ex.problem.y0 = [](double x) { return 2.0 * x * x; };
  const auto violations = validate(ex.problem, {0.5});
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].kind == Violation::Kind::RightBoundaryCompatibility);
  CHECK(violations[0].expected == doctest::Approx(1.0));
  CHECK(violations[0].actual == doctest::Approx(2.0));
}
