#include "parawave/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

namespace parawave::quadrature {

namespace {

Rule compute_rule(int n) {
  Rule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const double eps = 1e-15;
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Newton iteration on P_n, seeded by the Chebyshev-angle estimate.
    double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p1 = 1.0;
      double p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) <= eps) break;
    }
    rule.nodes[i] = -z;
    rule.nodes[n - 1 - i] = z;
    rule.weights[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    rule.weights[n - 1 - i] = rule.weights[i];
  }
  return rule;
}

double panel(const std::function<double(double)>& f, double a, double b,
             const Rule& rule) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  }
  return half * sum;
}

double adapt(const std::function<double(double)>& f, double a, double b,
             double whole, double tol, int depth, const Rule& rule,
             double* worst) {
  const double mid = 0.5 * (a + b);
  const double left = panel(f, a, mid, rule);
  const double right = panel(f, mid, b, rule);
  const double err = std::abs(left + right - whole);
  if (err <= tol) return left + right;
  if (depth <= 0) {
    *worst = std::max(*worst, err);
    return left + right;
  }
  return adapt(f, a, mid, left, 0.5 * tol, depth - 1, rule, worst) +
         adapt(f, mid, b, right, 0.5 * tol, depth - 1, rule, worst);
}

double chebyshev_estimate(const std::function<double(double)>& g, int n) {
  double sum = 0.0;
  for (int i = 1; i <= n; ++i) {
    sum += g(std::cos((2.0 * i - 1.0) * M_PI / (2.0 * n)));
  }
  return M_PI / n * sum;
}

}  // namespace

const Rule& gauss_legendre(int npoints) {
  static std::map<int, Rule> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(npoints);
  if (it == cache.end()) it = cache.emplace(npoints, compute_rule(npoints)).first;
  return it->second;
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol, int max_depth) {
  if (a == b) return 0.0;
  const Rule& rule = gauss_legendre(15);
  double worst = 0.0;
  const double value =
      adapt(f, a, b, panel(f, a, b, rule), abs_tol, max_depth, rule, &worst);
  if (worst > 0.0) {
    std::ostringstream msg;
    msg << "adaptive Gauss-Legendre exhausted depth " << max_depth
        << " before reaching tolerance " << abs_tol
        << " (worst panel error " << worst << ")";
    throw QuadratureError(msg.str(), worst);
  }
  return value;
}

double integrate_chebyshev_weighted(const std::function<double(double)>& g,
                                    double abs_tol, int max_nodes) {
  double prev = chebyshev_estimate(g, 32);
  double delta = 0.0;
  for (int n = 64; n <= max_nodes; n *= 2) {
    const double cur = chebyshev_estimate(g, n);
    delta = std::abs(cur - prev);
    if (delta <= abs_tol) return cur;
    prev = cur;
  }
  std::ostringstream msg;
  msg << "Gauss-Chebyshev estimates did not settle within " << max_nodes
      << " nodes (last delta " << delta << ", requested " << abs_tol << ")";
  throw QuadratureError(msg.str(), delta);
}

}  // namespace parawave::quadrature
