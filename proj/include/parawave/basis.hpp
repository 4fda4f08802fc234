#pragma once

#include <Eigen/Dense>

#include <functional>
#include <utility>

namespace parawave {

enum class WaveletFamily { Taylor, ChebyshevFirstKind };

// Resolution parameters of a wavelet basis on [0,1]: dilation level k >= 1
// and polynomial degree count M >= 1. The basis spans N = 2^(k-1) * M
// functions, one per (translation, degree) pair.
struct BasisSpec {
  WaveletFamily family;
  int k;
  int M;

  BasisSpec(WaveletFamily family_, int k_, int M_);

  // Number of dyadic translations 2^(k-1).
  int translations() const { return 1 << (k - 1); }
  // Basis dimension N.
  int size() const { return translations() * M; }
};

// Index of one basis function: translation n in [1, 2^(k-1)], degree m in
// [0, M-1]. The flat layout is n-major, m-minor, so
// flat = (n-1)*M + m enumerates [I_10 ... I_1(M-1), I_20 ...].
struct BasisIndex {
  int n;
  int m;

  static BasisIndex from_flat(const BasisSpec& spec, int flat);
  int flat(const BasisSpec& spec) const { return (n - 1) * spec.M + m; }
};

// Chebyshev polynomial of the first kind, C_m(t), by the three-term
// recurrence. Arguments within 1e-12 of +-1 are clamped onto the boundary to
// absorb rounding in theta = 2^k x - 2n + 1.
double chebyshev_poly(int m, double t);

// Support of I_nm: [(n-1)/2^(k-1), n/2^(k-1)). The right endpoint belongs to
// the subinterval only for the last translation, so values at x = 1 are
// defined.
std::pair<double, double> support(const BasisSpec& spec, BasisIndex idx);

// Wavelet value I_nm(x); zero outside the support.
double eval_wavelet(const BasisSpec& spec, BasisIndex idx, double x);

// First integral form R_nm(x) = int_0^x I_nm, closed form per branch.
double eval_first_integral(const BasisSpec& spec, BasisIndex idx, double x);

// Second integral form S_nm(x) = int_0^x int_0^xi I_nm, closed form.
double eval_second_integral(const BasisSpec& spec, BasisIndex idx, double x);

// All N basis values and their integral forms at one point, flat order.
struct BasisVectors {
  Eigen::VectorXd I;
  Eigen::VectorXd R;
  Eigen::VectorXd S;
};

BasisVectors basis_vectors(const BasisSpec& spec, double x);

// Midpoint collocation grid x_l = (2l-1)/(2N), l = 1..N. Interior points
// only, so the piecewise definitions never switch branch on a grid point,
// and the collocated system is square.
Eigen::VectorXd collocation_points(const BasisSpec& spec);

// Wavelet coefficients of f: plain L2 inner products for the Taylor family,
// omega-weighted inner products (omega = 1/sqrt(1-theta^2) per subinterval)
// for the Chebyshev family. Quadrature to 1e-10 absolute; throws
// quadrature::QuadratureError when that cannot be met.
Eigen::VectorXd expand(const std::function<double(double)>& f,
                       const BasisSpec& spec);

}  // namespace parawave
