#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "oracle.hpp"
#include "parawave/basis.hpp"
#include "parawave/quadrature.hpp"

using namespace parawave;

namespace {

const WaveletFamily kFamilies[] = {WaveletFamily::Taylor,
                                   WaveletFamily::ChebyshevFirstKind};

}  // namespace

TEST_CASE("chebyshev polynomial recurrence basics") {
  CHECK(chebyshev_poly(0, 0.3) == 1.0);
  CHECK(chebyshev_poly(1, 0.5) == 0.5);
  CHECK(chebyshev_poly(2, 0.5) == doctest::Approx(-0.5).epsilon(1e-15));
  // arguments a hair outside [-1,1] are clamped
  CHECK(chebyshev_poly(7, 1.0 + 5e-13) == doctest::Approx(1.0));
  CHECK(chebyshev_poly(7, -1.0 - 5e-13) == doctest::Approx(-1.0));
}

TEST_CASE("chebyshev polynomial matches cos(m acos)") {
  for (int m = 0; m <= 12; ++m) {
    for (int i = 0; i <= 40; ++i) {
      const double phi = i * M_PI / 40.0;
      CHECK(chebyshev_poly(m, std::cos(phi)) ==
            doctest::Approx(std::cos(m * phi)).epsilon(0).scale(1).epsilon(1e-10));
    }
  }
}

TEST_CASE("basis spec and index validation") {
  CHECK_THROWS_AS(BasisSpec(WaveletFamily::Taylor, 0, 4), std::invalid_argument);
  CHECK_THROWS_AS(BasisSpec(WaveletFamily::Taylor, 2, 0), std::invalid_argument);
  const BasisSpec spec(WaveletFamily::Taylor, 3, 4);
  CHECK(spec.translations() == 4);
  CHECK(spec.size() == 16);
  CHECK_THROWS_AS(eval_wavelet(spec, {5, 0}, 0.5), std::out_of_range);
  CHECK_THROWS_AS(eval_wavelet(spec, {1, 4}, 0.5), std::out_of_range);
  CHECK_THROWS_AS(eval_first_integral(spec, {0, 0}, 0.5), std::out_of_range);
  CHECK_THROWS_AS(eval_second_integral(spec, {1, -1}, 0.5), std::out_of_range);
  CHECK_THROWS_AS(BasisIndex::from_flat(spec, 16), std::out_of_range);
}

TEST_CASE("flat ordering round-trips and is n-major") {
  const BasisSpec spec(WaveletFamily::ChebyshevFirstKind, 3, 5);
  for (int flat = 0; flat < spec.size(); ++flat) {
    const BasisIndex idx = BasisIndex::from_flat(spec, flat);
    CHECK(idx.flat(spec) == flat);
  }
  CHECK(BasisIndex::from_flat(spec, 0).n == 1);
  CHECK(BasisIndex::from_flat(spec, 4).m == 4);
  CHECK(BasisIndex::from_flat(spec, 5).n == 2);
  CHECK(BasisIndex::from_flat(spec, 5).m == 0);
}

TEST_CASE("wavelet point values") {
  // Taylor k=1: single interval, T_0 normalization is 1
  CHECK(eval_wavelet(BasisSpec(WaveletFamily::Taylor, 1, 1), {1, 0}, 0.7) == 1.0);
  // outside the support
  CHECK(eval_wavelet(BasisSpec(WaveletFamily::Taylor, 2, 1), {2, 0}, 0.25) == 0.0);
  // Chebyshev k=1 m=0: gamma_0 = sqrt(2/pi)
  CHECK(eval_wavelet(BasisSpec(WaveletFamily::ChebyshevFirstKind, 1, 1), {1, 0},
                     0.7) == doctest::Approx(std::sqrt(2.0 / M_PI)).epsilon(1e-14));
  // Taylor k=2 m=1 on the second half: 2^{1/2} sqrt(3) (2x-1)
  CHECK(eval_wavelet(BasisSpec(WaveletFamily::Taylor, 2, 2), {2, 1}, 0.75) ==
        doctest::Approx(std::sqrt(2.0) * std::sqrt(3.0) * 0.5).epsilon(1e-14));
}

TEST_CASE("support convention: half-open intervals, x=1 on the last one") {
  for (WaveletFamily family : kFamilies) {
    const BasisSpec spec(family, 3, 3);
    for (int n = 1; n <= 4; ++n) {
      const auto [lo, hi] = support(spec, {n, 1});
      CHECK(eval_wavelet(spec, {n, 1}, lo) != 0.0);
      if (n < 4) {
        CHECK(eval_wavelet(spec, {n, 1}, hi) == 0.0);
      } else {
        CHECK(hi == 1.0);
        CHECK(eval_wavelet(spec, {n, 1}, 1.0) != 0.0);
      }
      if (lo > 0.0)
        CHECK(eval_wavelet(spec, {n, 1}, lo - 1e-12) == 0.0);
    }
  }
}

TEST_CASE("first integral closed forms: frozen examples") {
  // Taylor k=1 m=0: int_0^0.4 1 = 0.4
  CHECK(eval_first_integral(BasisSpec(WaveletFamily::Taylor, 1, 1), {1, 0}, 0.4) ==
        doctest::Approx(0.4).epsilon(1e-14));
  // Taylor k=2 m=0 past the support: total mass sqrt(2)*0.5
  CHECK(eval_first_integral(BasisSpec(WaveletFamily::Taylor, 2, 1), {1, 0}, 0.9) ==
        doctest::Approx(std::sqrt(2.0) * 0.5).epsilon(1e-13));
  // Chebyshev k=1 m=0: gamma_0 * x
  CHECK(eval_first_integral(BasisSpec(WaveletFamily::ChebyshevFirstKind, 1, 1),
                            {1, 0}, 0.4) ==
        doctest::Approx(std::sqrt(2.0 / M_PI) * 0.4).epsilon(1e-13));
}

TEST_CASE("second integral closed forms: frozen examples") {
  const BasisSpec taylor(WaveletFamily::Taylor, 1, 1);
  CHECK(eval_second_integral(taylor, {1, 0}, 0.5) ==
        doctest::Approx(0.125).epsilon(1e-14));
  CHECK(eval_second_integral(taylor, {1, 0}, 1.0) ==
        doctest::Approx(0.5).epsilon(1e-14));
  CHECK(eval_second_integral(BasisSpec(WaveletFamily::ChebyshevFirstKind, 1, 1),
                             {1, 0}, 1.0) ==
        doctest::Approx(std::sqrt(2.0 / M_PI) * 0.5).epsilon(1e-13));
}

TEST_CASE("closed-form integrals agree with the quadrature oracle") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (WaveletFamily family : kFamilies) {
    for (int k = 1; k <= 3; ++k) {
      const BasisSpec spec(family, k, 5);
      for (int flat = 0; flat < spec.size(); ++flat) {
        const BasisIndex idx = BasisIndex::from_flat(spec, flat);
        for (int trial = 0; trial < 50; ++trial) {
          const double x = uni(rng);
          CHECK(std::abs(eval_first_integral(spec, idx, x) -
                         oracle::first_integral(spec, idx, x)) <= 1e-8);
          CHECK(std::abs(eval_second_integral(spec, idx, x) -
                         oracle::second_integral(spec, idx, x)) <= 1e-8);
        }
      }
    }
  }
}

TEST_CASE("repeated-integration kernel oracle matches nested quadrature") {
  // validates the oracle itself on a few indices
  for (WaveletFamily family : kFamilies) {
    const BasisSpec spec(family, 2, 4);
    const BasisIndex idx{2, 3};
    const auto [lo, hi] = support(spec, idx);
    for (double x : {0.62, 0.83, 1.0}) {
      const auto inner = [&](double xi) {
        return oracle::first_integral(spec, idx, xi, 1e-12);
      };
      double nested = 0.0;
      if (x > lo) nested += quadrature::integrate(inner, lo, std::min(x, hi), 1e-10);
      if (x > hi) nested += quadrature::integrate(inner, hi, x, 1e-10);
      CHECK(oracle::second_integral(spec, idx, x) ==
            doctest::Approx(nested).epsilon(1e-8));
    }
  }
}

TEST_CASE("integral forms vanish left of the support and continue past it") {
  for (WaveletFamily family : kFamilies) {
    const BasisSpec spec(family, 3, 4);
    for (int flat = 0; flat < spec.size(); ++flat) {
      const BasisIndex idx = BasisIndex::from_flat(spec, flat);
      const auto [lo, hi] = support(spec, idx);
      if (lo > 0.0) {
        CHECK(eval_first_integral(spec, idx, 0.5 * lo) == 0.0);
        CHECK(eval_second_integral(spec, idx, 0.5 * lo) == 0.0);
      }
      if (hi < 1.0) {
        // R constant past the support, S affine with slope R
        const double r1 = eval_first_integral(spec, idx, hi);
        const double r2 = eval_first_integral(spec, idx, 0.5 * (hi + 1.0));
        CHECK(r1 == doctest::Approx(r2).epsilon(0).scale(1).epsilon(1e-12));
        const double s_a = eval_second_integral(spec, idx, hi);
        const double s_b = eval_second_integral(spec, idx, 1.0);
        CHECK(s_b - s_a == doctest::Approx(r1 * (1.0 - hi)).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("integral forms are continuous at both support breakpoints") {
  const double delta = 1e-13;
  for (WaveletFamily family : kFamilies) {
    for (int k = 1; k <= 3; ++k) {
      const BasisSpec spec(family, k, 5);
      for (int flat = 0; flat < spec.size(); ++flat) {
        const BasisIndex idx = BasisIndex::from_flat(spec, flat);
        const auto [lo, hi] = support(spec, idx);
        for (double bp : {lo, hi}) {
          const double left = bp > 0.0
                                  ? eval_first_integral(spec, idx, bp - delta)
                                  : eval_first_integral(spec, idx, 0.0);
          const double right = bp < 1.0
                                   ? eval_first_integral(spec, idx, bp + delta)
                                   : eval_first_integral(spec, idx, 1.0);
          CHECK(std::abs(left - right) <= 1e-10);
          const double sleft = bp > 0.0
                                   ? eval_second_integral(spec, idx, bp - delta)
                                   : eval_second_integral(spec, idx, 0.0);
          const double sright = bp < 1.0
                                    ? eval_second_integral(spec, idx, bp + delta)
                                    : eval_second_integral(spec, idx, 1.0);
          CHECK(std::abs(sleft - sright) <= 1e-10);
        }
      }
    }
  }
}

TEST_CASE("taylor wavelets have unit L2 norm") {
  for (int k = 1; k <= 3; ++k) {
    const BasisSpec spec(WaveletFamily::Taylor, k, 5);
    for (int flat = 0; flat < spec.size(); ++flat) {
      const BasisIndex idx = BasisIndex::from_flat(spec, flat);
      const auto [lo, hi] = support(spec, idx);
      const double norm2 = quadrature::integrate(
          [&](double x) {
            const double v = eval_wavelet(spec, idx, x);
            return v * v;
          },
          lo, hi, 1e-11);
      CHECK(norm2 == doctest::Approx(1.0).epsilon(1e-8));
    }
  }
}

TEST_CASE("chebyshev wavelets are orthonormal under the piecewise weight") {
  for (int k = 1; k <= 3; ++k) {
    const BasisSpec spec(WaveletFamily::ChebyshevFirstKind, k, 5);
    for (int a = 0; a < spec.size(); ++a) {
      const BasisIndex ia = BasisIndex::from_flat(spec, a);
      for (int b = a; b < spec.size(); ++b) {
        const BasisIndex ib = BasisIndex::from_flat(spec, b);
        const double ip = oracle::weighted_inner_product(spec, ia, ib);
        CHECK(std::abs(ip - (a == b ? 1.0 : 0.0)) <= 1e-8);
      }
    }
  }
}

TEST_CASE("basis_vectors layout and values at grid extremes") {
  // layout [I_10, I_11, I_20, I_21] and componentwise match with eval
  const BasisSpec spec(WaveletFamily::Taylor, 2, 2);
  const BasisVectors bv = basis_vectors(spec, 0.3);
  REQUIRE(bv.I.size() == 4);
  for (int flat = 0; flat < 4; ++flat) {
    const BasisIndex idx = BasisIndex::from_flat(spec, flat);
    CHECK(bv.I[flat] == eval_wavelet(spec, idx, 0.3));
    CHECK(bv.R[flat] == eval_first_integral(spec, idx, 0.3));
    CHECK(bv.S[flat] == eval_second_integral(spec, idx, 0.3));
  }
  // I at x=0 for k=1, M=2: [1, 0]
  const BasisVectors at0 = basis_vectors(BasisSpec(WaveletFamily::Taylor, 1, 2), 0.0);
  CHECK(at0.I[0] == 1.0);
  CHECK(at0.I[1] == 0.0);
  // R and S vanish at x=0 for any spec
  for (WaveletFamily family : kFamilies) {
    const BasisVectors v = basis_vectors(BasisSpec(family, 2, 3), 0.0);
    CHECK(v.R.cwiseAbs().maxCoeff() == 0.0);
    CHECK(v.S.cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("collocation points form the interior midpoint grid") {
  const Eigen::VectorXd a = collocation_points(BasisSpec(WaveletFamily::Taylor, 1, 4));
  REQUIRE(a.size() == 4);
  CHECK(a[0] == doctest::Approx(0.125));
  CHECK(a[1] == doctest::Approx(0.375));
  CHECK(a[2] == doctest::Approx(0.625));
  CHECK(a[3] == doctest::Approx(0.875));
  // same N, same grid
  const Eigen::VectorXd b = collocation_points(BasisSpec(WaveletFamily::Taylor, 2, 2));
  CHECK((a - b).cwiseAbs().maxCoeff() == 0.0);
  const Eigen::VectorXd c = collocation_points(BasisSpec(WaveletFamily::Taylor, 1, 1));
  REQUIRE(c.size() == 1);
  CHECK(c[0] == 0.5);
  // strictly increasing, strictly interior
  const Eigen::VectorXd d = collocation_points(BasisSpec(WaveletFamily::ChebyshevFirstKind, 3, 5));
  for (int i = 0; i < d.size(); ++i) {
    CHECK(d[i] > 0.0);
    CHECK(d[i] < 1.0);
    if (i > 0) CHECK(d[i] > d[i - 1]);
  }
}

TEST_CASE("expand: zero function, self-expansion, oracle cross-check") {
  const auto zero = [](double) { return 0.0; };
  for (WaveletFamily family : kFamilies) {
    const Eigen::VectorXd d = expand(zero, BasisSpec(family, 2, 3));
    CHECK(d.cwiseAbs().maxCoeff() == 0.0);
  }
  // Taylor k=1, M=1: I_10 = 1 on [0,1), unit norm, so d = (1)
  {
    const BasisSpec spec(WaveletFamily::Taylor, 1, 1);
    const Eigen::VectorXd d =
        expand([&](double x) { return eval_wavelet(spec, {1, 0}, x); }, spec);
    REQUIRE(d.size() == 1);
    CHECK(d[0] == doctest::Approx(1.0).epsilon(1e-10));
  }
  // Chebyshev orthonormality makes self-expansion exact for any index
  {
    const BasisSpec spec(WaveletFamily::ChebyshevFirstKind, 2, 3);
    const BasisIndex target{2, 1};
    const Eigen::VectorXd d = expand(
        [&](double x) { return eval_wavelet(spec, target, x); }, spec);
    for (int flat = 0; flat < spec.size(); ++flat) {
      const double want = flat == target.flat(spec) ? 1.0 : 0.0;
      CHECK(d[flat] == doctest::Approx(want).epsilon(0).scale(1).epsilon(1e-9));
    }
  }
  // Taylor coefficients are plain inner products: check one against direct
  // quadrature of f * I_nm
  {
    const BasisSpec spec(WaveletFamily::Taylor, 2, 4);
    const auto f = [](double x) { return std::sin(M_PI * x); };
    const Eigen::VectorXd d = expand(f, spec);
    const BasisIndex idx{2, 2};
    const auto [lo, hi] = support(spec, idx);
    const double direct = quadrature::integrate(
        [&](double x) { return f(x) * eval_wavelet(spec, idx, x); }, lo, hi,
        1e-12);
    CHECK(d[idx.flat(spec)] == doctest::Approx(direct).epsilon(1e-10));
  }
}
