#include "parawave/basis.hpp"

#include <cassert>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "parawave/quadrature.hpp"

namespace parawave {

namespace {

constexpr double kThetaClamp = 1e-12;
constexpr double kExpandTol = 1e-10;

double pow2(double e) { return std::exp2(e); }

struct SupportInfo {
  double lo;
  double hi;
  bool last;  // x == hi belongs to the subinterval only for the last n
};

SupportInfo support_of(const BasisSpec& spec, BasisIndex idx) {
  const double width = 1.0 / spec.translations();
  return {(idx.n - 1) * width, idx.n * width, idx.n == spec.translations()};
}

enum class Region { Before, Inside, After };

Region region_of(const SupportInfo& s, double x) {
  if (x < s.lo) return Region::Before;
  if (x < s.hi || (s.last && x == s.hi)) return Region::Inside;
  return Region::After;
}

void check_index(const BasisSpec& spec, BasisIndex idx) {
  if (idx.n < 1 || idx.n > spec.translations() || idx.m < 0 ||
      idx.m >= spec.M) {
    std::ostringstream msg;
    msg << "basis index (n=" << idx.n << ", m=" << idx.m
        << ") out of range for k=" << spec.k << ", M=" << spec.M;
    throw std::out_of_range(msg.str());
  }
}

double binom(int n, int j) {
  double value = 1.0;
  for (int i = 1; i <= j; ++i) value *= double(n - j + i) / i;
  return value;
}

// --- Taylor family ------------------------------------------------------

double taylor_value(const BasisSpec& spec, BasisIndex idx, double x) {
  const double tau = spec.translations() * x - idx.n + 1;
  return pow2(0.5 * (spec.k - 1)) * std::sqrt(2.0 * idx.m + 1.0) *
         std::pow(tau, idx.m);
}

double taylor_first_mid(const BasisSpec& spec, int m, double x, double lo) {
  return pow2((m + 0.5) * (spec.k - 1)) * std::sqrt(2.0 * m + 1.0) /
         (m + 1.0) * std::pow(x - lo, m + 1);
}

double taylor_second_mid(const BasisSpec& spec, int m, double x, double lo) {
  return pow2((m + 0.5) * (spec.k - 1)) * std::sqrt(2.0 * m + 1.0) /
         ((m + 1.0) * (m + 2.0)) * std::pow(x - lo, m + 2);
}

// P_i(x) = sum_j binom(m,j) 2^{(j+1/2)(k-1)} j! sqrt(2m+1)/(j+i)! (x-hi)^{j+i}
double taylor_tail_poly(const BasisSpec& spec, int m, double x, double hi,
                        int order) {
  const double root = std::sqrt(2.0 * m + 1.0);
  double sum = 0.0;
  for (int j = 0; j <= m; ++j) {
    const double denom =
        order == 1 ? (j + 1.0) : (j + 1.0) * (j + 2.0);  // j!/(j+i)!
    sum += binom(m, j) * pow2((j + 0.5) * (spec.k - 1)) * root / denom *
           std::pow(x - hi, j + order);
  }
  return sum;
}

// --- Chebyshev family ---------------------------------------------------

double gamma_m(int m) {
  return m == 0 ? std::sqrt(2.0 / M_PI) : 2.0 / std::sqrt(M_PI);
}

// mu_m = (-1)^{m-1}/(m-1) - (-1)^{m+1}/(m+1), m >= 2
double mu_m(int m) {
  const double s = m % 2 == 0 ? -1.0 : 1.0;
  return s * (1.0 / (m - 1.0) - 1.0 / (m + 1.0));
}

// rho_m = (1-(-1)^{m+1})/(m+1) - (1-(-1)^{m-1})/(m-1), m >= 2
double rho_m(int m) {
  if (m % 2 == 1) return 0.0;
  return 2.0 / (m + 1.0) - 2.0 / (m - 1.0);
}

double theta_of(const BasisSpec& spec, BasisIndex idx, double x) {
  return std::ldexp(x, spec.k) - 2.0 * idx.n + 1.0;
}

double cheb_value(const BasisSpec& spec, BasisIndex idx, double x) {
  return gamma_m(idx.m) * pow2(0.5 * (spec.k - 1)) *
         chebyshev_poly(idx.m, theta_of(spec, idx, x));
}

double cheb_first(const BasisSpec& spec, BasisIndex idx, double x,
                  Region region) {
  const int m = idx.m;
  const double kk = spec.k - 1.0;
  const double g = gamma_m(m);
  if (m == 0) {
    if (region == Region::After) return g * pow2(-0.5 * kk);
    const double th = theta_of(spec, idx, x);
    return g * pow2(-0.5 * kk - 1) * (chebyshev_poly(1, th) + 1.0);
  }
  if (m == 1) {
    if (region == Region::After) return 0.0;
    const double th = theta_of(spec, idx, x);
    return g * pow2(-0.5 * kk - 3) * (chebyshev_poly(2, th) - 1.0);
  }
  if (region == Region::After) return g * pow2(-0.5 * kk - 2) * rho_m(m);
  const double th = theta_of(spec, idx, x);
  return g * pow2(-0.5 * kk - 2) *
         (chebyshev_poly(m + 1, th) / (m + 1.0) -
          chebyshev_poly(m - 1, th) / (m - 1.0) + mu_m(m));
}

double cheb_second(const BasisSpec& spec, BasisIndex idx, double x,
                   Region region) {
  const int m = idx.m;
  const double kk = spec.k - 1.0;
  const double g = gamma_m(m);
  const double hi = double(idx.n) / spec.translations();
  if (m == 0) {
    if (region == Region::After)
      return g * pow2(-0.5 * kk) * (pow2(-spec.k) + x - hi);
    const double th = theta_of(spec, idx, x);
    return g * pow2(-1.5 * kk - 4) *
           (chebyshev_poly(2, th) + 4.0 * chebyshev_poly(1, th) + 3.0);
  }
  if (m == 1) {
    if (region == Region::After) return -g * pow2(-1.5 * kk - 1) / 3.0;
    const double th = theta_of(spec, idx, x);
    return g * pow2(-1.5 * kk - 4) *
           (chebyshev_poly(3, th) / 6.0 - 1.5 * chebyshev_poly(1, th) -
            4.0 / 3.0);
  }
  if (m == 2) {
    if (region == Region::After)
      return -g * pow2(-0.5 * kk) / 3.0 * (pow2(-spec.k) + x - hi);
    const double th = theta_of(spec, idx, x);
    return g * pow2(-1.5 * kk - 3) *
           ((chebyshev_poly(4, th) - 1.0) / 24.0 -
            (chebyshev_poly(2, th) - 1.0) / 3.0 -
            2.0 / 3.0 * (chebyshev_poly(1, th) + 1.0));
  }
  const auto sgn = [](int j) { return j % 2 == 0 ? 1.0 : -1.0; };
  if (region == Region::After) {
    return g * pow2(-1.5 * kk - 3) *
           ((1.0 - sgn(m + 2)) / (2.0 * (m + 1.0) * (m + 2.0)) -
            (1.0 - sgn(m)) / (2.0 * (m + 1.0) * m) -
            (1.0 - sgn(m)) / (2.0 * (m - 1.0) * m) +
            (1.0 - sgn(m - 2)) / (2.0 * (m - 1.0) * (m - 2.0)) +
            2.0 * mu_m(m) + std::ldexp(x - hi, spec.k) * rho_m(m));
  }
  const double th = theta_of(spec, idx, x);
  return g * pow2(-1.5 * kk - 3) *
         ((chebyshev_poly(m + 2, th) - sgn(m + 2)) /
              (2.0 * (m + 1.0) * (m + 2.0)) -
          (chebyshev_poly(m, th) - sgn(m)) / (2.0 * (m + 1.0) * m) -
          (chebyshev_poly(m, th) - sgn(m)) / (2.0 * (m - 1.0) * m) +
          (chebyshev_poly(m - 2, th) - sgn(m - 2)) /
              (2.0 * (m - 1.0) * (m - 2.0)) +
          (1.0 + chebyshev_poly(1, th)) * mu_m(m));
}

}  // namespace

BasisSpec::BasisSpec(WaveletFamily family_, int k_, int M_)
    : family(family_), k(k_), M(M_) {
  if (k < 1 || k > 30 || M < 1) {
    std::ostringstream msg;
    msg << "invalid basis spec: k=" << k << ", M=" << M
        << " (need k in [1,30], M >= 1)";
    throw std::invalid_argument(msg.str());
  }
}

BasisIndex BasisIndex::from_flat(const BasisSpec& spec, int flat) {
  if (flat < 0 || flat >= spec.size())
    throw std::out_of_range("flat basis index " + std::to_string(flat) +
                            " out of range for N=" + std::to_string(spec.size()));
  return {flat / spec.M + 1, flat % spec.M};
}

double chebyshev_poly(int m, double t) {
  assert(m >= 0);
  if (t > 1.0 && t <= 1.0 + kThetaClamp) t = 1.0;
  if (t < -1.0 && t >= -1.0 - kThetaClamp) t = -1.0;
  if (m == 0) return 1.0;
  double prev = 1.0;
  double cur = t;
  for (int j = 1; j < m; ++j) {
    const double next = 2.0 * t * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

std::pair<double, double> support(const BasisSpec& spec, BasisIndex idx) {
  check_index(spec, idx);
  const SupportInfo s = support_of(spec, idx);
  return {s.lo, s.hi};
}

double eval_wavelet(const BasisSpec& spec, BasisIndex idx, double x) {
  check_index(spec, idx);
  const SupportInfo s = support_of(spec, idx);
  if (region_of(s, x) != Region::Inside) return 0.0;
  return spec.family == WaveletFamily::Taylor ? taylor_value(spec, idx, x)
                                              : cheb_value(spec, idx, x);
}

double eval_first_integral(const BasisSpec& spec, BasisIndex idx, double x) {
  check_index(spec, idx);
  const SupportInfo s = support_of(spec, idx);
  const Region region = region_of(s, x);
  if (region == Region::Before) return 0.0;
  if (spec.family == WaveletFamily::Taylor) {
    const double mid = taylor_first_mid(spec, idx.m, x, s.lo);
    if (region == Region::Inside) return mid;
    return mid - taylor_tail_poly(spec, idx.m, x, s.hi, 1);
  }
  return cheb_first(spec, idx, x, region);
}

double eval_second_integral(const BasisSpec& spec, BasisIndex idx, double x) {
  check_index(spec, idx);
  const SupportInfo s = support_of(spec, idx);
  const Region region = region_of(s, x);
  if (region == Region::Before) return 0.0;
  if (spec.family == WaveletFamily::Taylor) {
    const double mid = taylor_second_mid(spec, idx.m, x, s.lo);
    if (region == Region::Inside) return mid;
    return mid - taylor_tail_poly(spec, idx.m, x, s.hi, 2);
  }
  return cheb_second(spec, idx, x, region);
}

BasisVectors basis_vectors(const BasisSpec& spec, double x) {
  const int n = spec.size();
  BasisVectors out{Eigen::VectorXd(n), Eigen::VectorXd(n), Eigen::VectorXd(n)};
  for (int flat = 0; flat < n; ++flat) {
    const BasisIndex idx = BasisIndex::from_flat(spec, flat);
    out.I[flat] = eval_wavelet(spec, idx, x);
    out.R[flat] = eval_first_integral(spec, idx, x);
    out.S[flat] = eval_second_integral(spec, idx, x);
  }
  return out;
}

Eigen::VectorXd collocation_points(const BasisSpec& spec) {
  const int n = spec.size();
  Eigen::VectorXd x(n);
  for (int l = 1; l <= n; ++l) x[l - 1] = (2.0 * l - 1.0) / (2.0 * n);
  return x;
}

Eigen::VectorXd expand(const std::function<double(double)>& f,
                       const BasisSpec& spec) {
  const int n = spec.size();
  Eigen::VectorXd d(n);
  for (int flat = 0; flat < n; ++flat) {
    const BasisIndex idx = BasisIndex::from_flat(spec, flat);
    const SupportInfo s = support_of(spec, idx);
    if (spec.family == WaveletFamily::Taylor) {
      d[flat] = quadrature::integrate(
          [&](double x) { return f(x) * eval_wavelet(spec, idx, x); }, s.lo,
          s.hi, kExpandTol);
    } else {
      // Substituting theta = 2^k x - 2n + 1 maps the weighted inner product
      // onto a Gauss-Chebyshev integral with dx = 2^{-k} dtheta.
      const double scale = pow2(-spec.k);
      d[flat] = scale * quadrature::integrate_chebyshev_weighted(
                            [&](double theta) {
                              const double x =
                                  std::ldexp(theta + 2.0 * idx.n - 1.0, -spec.k);
                              return f(x) * eval_wavelet(spec, idx, x);
                            },
                            kExpandTol / scale);
    }
  }
  return d;
}

}  // namespace parawave
