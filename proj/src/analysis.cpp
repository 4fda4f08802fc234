#include "parawave/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace parawave {

namespace {

void check_same_size(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  if (a.size() != b.size() || a.size() < 1) {
    std::ostringstream msg;
    msg << "error norm: vector sizes " << a.size() << " and " << b.size()
        << " do not match";
    throw std::invalid_argument(msg.str());
  }
}

}  // namespace

double linf_error(const Eigen::VectorXd& exact,
                  const Eigen::VectorXd& numeric) {
  check_same_size(exact, numeric);
  return (exact - numeric).cwiseAbs().maxCoeff();
}

double l2_error(const Eigen::VectorXd& exact, const Eigen::VectorXd& numeric) {
  check_same_size(exact, numeric);
  return (exact - numeric).norm() / double(exact.size());
}

ErrorReport make_error_report(const Eigen::VectorXd& x,
                              const Eigen::VectorXd& exact,
                              const Eigen::VectorXd& numeric, double t) {
  check_same_size(exact, numeric);
  check_same_size(x, exact);
  ErrorReport report;
  report.t = t;
  report.linf = linf_error(exact, numeric);
  report.l2 = l2_error(exact, numeric);
  report.pointwise.reserve(x.size());
  for (int i = 0; i < x.size(); ++i) {
    report.pointwise.emplace_back(x[i], std::abs(exact[i] - numeric[i]));
  }
  return report;
}

double coefficient_bound(WaveletFamily family, int n, int m, double L) {
  if (m < 2)
    throw std::domain_error(
        "coefficient_bound: the printed bounds hold for m >= 2 only");
  if (n < 1) throw std::domain_error("coefficient_bound: n must be >= 1");
  const double n52 = std::pow(double(n), 2.5);
  if (family == WaveletFamily::Taylor) {
    return L * std::sqrt(2.0 * m + 1.0) /
           (n52 * (m + 1.0) * (m + 2.0) * (m + 3.0));
  }
  const double gamma = 2.0 / std::sqrt(M_PI);  // m >= 2, so never the m=0 case
  return gamma * M_PI * L / (32.0 * n52 * (m - 1.0) * (m - 1.0));
}

KappaTail kappa_tail(WaveletFamily family, int k, int M, long trunc) {
  if (trunc < 1000)
    throw std::invalid_argument("kappa_tail: trunc must be >= 1000");
  if (k < 1) throw std::domain_error("kappa_tail: k must be >= 1");
  const int min_M = family == WaveletFamily::ChebyshevFirstKind ? 2 : 1;
  if (M < min_M)
    throw std::domain_error("kappa_tail: M too small for the family's tail");

  // The double series factorizes as (sum over n) * (sum over m).
  const long n0 = 1L << (k - 1);
  double sum_n = 0.0;
  for (long n = n0 + trunc; n > n0; --n) {  // small terms first
    const double dn = double(n);
    sum_n += 1.0 / (dn * dn * dn * dn * dn);
  }
  const double n_last = double(n0 + trunc);
  const double rem_n = 1.0 / (4.0 * n_last * n_last * n_last * n_last);

  double sum_m = 0.0;
  for (long m = M + trunc - 1; m >= M; --m) {
    const double dm = double(m);
    if (family == WaveletFamily::Taylor) {
      const double d = (dm + 1.0) * (dm + 2.0) * (dm + 3.0);
      sum_m += (2.0 * dm + 1.0) / (d * d);
    } else {
      const double d = (dm - 1.0) * (dm - 1.0);
      sum_m += 1.0 / (d * d);
    }
  }
  const double m_last = double(M + trunc - 1);
  double rem_m;
  if (family == WaveletFamily::Taylor) {
    // (2m+1)/((m+1)(m+2)(m+3))^2 <= 2/(m+1)^5
    const double c = m_last + 1.0;
    rem_m = 0.5 / (c * c * c * c);
  } else {
    // 1/(m-1)^4 decreasing; integral test from m_last
    const double c = m_last - 1.0;
    rem_m = 1.0 / (3.0 * c * c * c);
  }

  const double total = sum_n * sum_m;
  const double dropped = rem_n * sum_m + sum_n * rem_m + rem_n * rem_m;
  KappaTail tail;
  tail.value = std::sqrt(total);
  tail.remainder = std::sqrt(total + dropped) - tail.value;
  return tail;
}

BoundEstimate make_bound_estimate(WaveletFamily family, int k, int M, double L,
                                  double lambda, long trunc) {
  BoundEstimate est;
  est.family = family;
  est.k = k;
  est.M = M;
  est.L = L;
  est.lambda = lambda;
  est.tail = kappa_tail(family, k, M, trunc).value;
  est.kappa = lambda * est.tail;
  return est;
}

DecayCheck verify_coefficient_decay(const std::function<double(double)>& f,
                                    double L, const BasisSpec& spec) {
  const Eigen::VectorXd d = expand(f, spec);
  DecayCheck check;
  for (int flat = 0; flat < spec.size(); ++flat) {
    const BasisIndex idx = BasisIndex::from_flat(spec, flat);
    if (idx.m < 2) continue;
    DecayMargin margin;
    margin.n = idx.n;
    margin.m = idx.m;
    margin.coefficient = d[flat];
    margin.bound = coefficient_bound(spec.family, idx.n, idx.m, L);
    margin.margin = margin.bound - std::abs(margin.coefficient);
    if (margin.margin < 0.0) check.passed = false;
    check.margins.push_back(margin);
  }
  return check;
}

FieldReconstructor::FieldReconstructor(const InverseProblem& problem,
                                       const BasisSpec& spec,
                                       const SolveOutput& output)
    : problem_(&problem), spec_(spec), times_(output.times) {
  S_one_ = basis_vectors(spec, 1.0).S;
  const int n = spec.size();
  weighted_prefix_.reserve(times_.size());
  weighted_prefix_.push_back(Eigen::VectorXd::Zero(n));
  for (std::size_t r = 1; r < times_.size(); ++r) {
    const double dt = times_[r] - times_[r - 1];
    weighted_prefix_.push_back(weighted_prefix_.back() +
                               dt * output.D_history[r - 1]);
  }
}

double FieldReconstructor::value(double x, int step) const {
  if (step < 0 || step >= int(times_.size()))
    throw std::out_of_range("FieldReconstructor: step out of range");
  const BasisVectors bv = basis_vectors(spec_, x);
  const double t = times_[step];
  const double t0 = times_.front();
  const double f0d = problem_->f0(t) - problem_->f0(t0);
  const double f1d = problem_->f1(t) - problem_->f1(t0);
  const Eigen::VectorXd phi = bv.S - x * S_one_;
  return problem_->y0(x) + weighted_prefix_[step].dot(phi) + f0d +
         x * (f1d - f0d);
}

namespace {

int step_for_time(const std::vector<double>& times, double t) {
  // Step times are uniform; round and verify.
  if (times.size() < 2) throw ReportError("no steps recorded");
  const double dt = times[1] - times[0];
  const long r = std::lround((t - times[0]) / dt);
  if (r < 0 || r >= long(times.size()) || std::abs(times[r] - t) > 1e-9) {
    std::ostringstream msg;
    msg << "report time " << t << " is not on the step grid (dt=" << dt << ")";
    throw ReportError(msg.str());
  }
  return int(r);
}

}  // namespace

TableRows build_tables(const SolveOutput& output, const ExactReference& exact,
                       const InverseProblem& problem, const BasisSpec& spec,
                       const std::vector<double>& report_x,
                       const std::vector<double>& report_t) {
  if (!exact.present)
    throw ReportError("error tables need an exact reference solution");
  const FieldReconstructor recon(problem, spec, output);
  TableRows rows;
  for (double t : report_t) {
    const int step = step_for_time(output.times, t);
    for (double x : report_x) {
      SolutionRow row;
      row.t = t;
      row.x = x;
      row.exact = exact.y(x, t);
      row.numeric = recon.value(x, step);
      row.abs_error = std::abs(row.exact - row.numeric);
      rows.solution.push_back(row);
    }
    if (!output.X_series[step].has_value()) {
      std::ostringstream msg;
      msg << "control parameter is undefined at report time " << t;
      throw ReportError(msg.str());
    }
    ControlRow crow;
    crow.t = t;
    crow.exact = exact.X(t);
    crow.numeric = *output.X_series[step];
    crow.abs_error = std::abs(crow.exact - crow.numeric);
    rows.control.push_back(crow);
  }
  return rows;
}

std::string format_scientific(double value, int significant) {
  if (value == 0.0) value = 0.0;  // normalize -0
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.*e", std::max(significant - 1, 0), value);
  return buf;
}

}  // namespace parawave
