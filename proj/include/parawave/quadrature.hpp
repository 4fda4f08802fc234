#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace parawave::quadrature {

// Raised when an integration routine cannot reach the requested tolerance.
// Carries the tolerance that was actually achieved as a diagnostic.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double achieved_tol)
      : std::runtime_error(what), achieved_tol_(achieved_tol) {}
  double achieved_tol() const { return achieved_tol_; }

 private:
  double achieved_tol_;
};

// Nodes and weights of an n-point Gauss-Legendre rule on [-1, 1].
struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

const Rule& gauss_legendre(int npoints);

// \int_a^b f(x) dx by adaptive bisection with a fixed-order Gauss-Legendre
// panel rule. Throws QuadratureError if max_depth is exhausted before the
// requested absolute tolerance is met.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-10, int max_depth = 40);

// \int_{-1}^{1} g(t) / sqrt(1 - t^2) dt by Gauss-Chebyshev rules with node
// counts doubled until two consecutive estimates agree to abs_tol.
double integrate_chebyshev_weighted(const std::function<double(double)>& g,
                                    double abs_tol = 1e-10,
                                    int max_nodes = 1 << 16);

}  // namespace parawave::quadrature
