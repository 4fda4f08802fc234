#include <doctest.h>

#include <cmath>

#include "parawave/quadrature.hpp"

using namespace parawave;

TEST_CASE("gauss legendre rules have symmetric nodes and weights summing to 2") {
  for (int n : {5, 15, 30}) {
    const auto& rule = quadrature::gauss_legendre(n);
    REQUIRE(rule.nodes.size() == std::size_t(n));
    double wsum = 0.0;
    for (int i = 0; i < n; ++i) {
      wsum += rule.weights[i];
      CHECK(rule.nodes[i] == doctest::Approx(-rule.nodes[n - 1 - i]).epsilon(1e-14));
      CHECK(rule.weights[i] == doctest::Approx(rule.weights[n - 1 - i]).epsilon(1e-14));
    }
    CHECK(wsum == doctest::Approx(2.0).epsilon(1e-14));
  }
}

TEST_CASE("gauss legendre integrates polynomials up to degree 2n-1 exactly") {
  const auto& rule = quadrature::gauss_legendre(5);
  for (int deg = 0; deg <= 9; ++deg) {
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
      sum += rule.weights[i] * std::pow(rule.nodes[i], deg);
    const double exact = deg % 2 == 1 ? 0.0 : 2.0 / (deg + 1);
    CHECK(sum == doctest::Approx(exact).epsilon(1e-13));
  }
}

TEST_CASE("adaptive integration reproduces smooth antiderivatives") {
  CHECK(quadrature::integrate([](double x) { return x * x; }, 0.0, 1.0) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(quadrature::integrate([](double x) { return std::exp(x); }, 0.0, 2.0) ==
        doctest::Approx(std::exp(2.0) - 1.0).epsilon(1e-12));
  CHECK(quadrature::integrate([](double x) { return std::sin(50.0 * x); }, 0.0,
                              M_PI) ==
        doctest::Approx((1.0 - std::cos(50.0 * M_PI)) / 50.0).epsilon(1e-9));
  CHECK(quadrature::integrate([](double) { return 1.0; }, 0.3, 0.3) == 0.0);
}

TEST_CASE("exhausting the depth budget raises a diagnostic error") {
  const auto needle = [](double x) {
    return 1.0 / (1e-8 + (x - 0.337) * (x - 0.337));
  };
  CHECK_THROWS_AS(quadrature::integrate(needle, 0.0, 1.0, 1e-12, 3),
                  quadrature::QuadratureError);
  try {
    quadrature::integrate(needle, 0.0, 1.0, 1e-12, 3);
  } catch (const quadrature::QuadratureError& e) {
    CHECK(e.achieved_tol() > 1e-12);
  }
}

TEST_CASE("chebyshev weighted quadrature handles the endpoint singularities") {
  // int_{-1}^{1} 1/sqrt(1-t^2) dt = pi
  CHECK(quadrature::integrate_chebyshev_weighted([](double) { return 1.0; }) ==
        doctest::Approx(M_PI).epsilon(1e-13));
  // int t^2 / sqrt(1-t^2) = pi/2
  CHECK(quadrature::integrate_chebyshev_weighted(
            [](double t) { return t * t; }) ==
        doctest::Approx(M_PI / 2.0).epsilon(1e-13));
  // orthogonality of cos(3 acos t) against cos(acos t)
  CHECK(quadrature::integrate_chebyshev_weighted([](double t) {
          return std::cos(3.0 * std::acos(t)) * t;
        }) == doctest::Approx(0.0).epsilon(1e-12));
}
