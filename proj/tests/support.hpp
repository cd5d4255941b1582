#ifndef SSAR_TESTS_SUPPORT_HPP
#define SSAR_TESTS_SUPPORT_HPP

#include <cmath>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "ssar/acvf.hpp"
#include "ssar/simgen.hpp"
#include "ssar/types.hpp"

namespace support {

// Central-difference gradient, the independent oracle for every delta-method
// variance formula.
template <class F>
Eigen::VectorXd fd_gradient(const F& f, const Eigen::VectorXd& x, double step = 1e-6) {
  Eigen::VectorXd grad(x.size());
  for (int i = 0; i < x.size(); ++i) {
    Eigen::VectorXd hi = x, lo = x;
    hi[i] += step;
    lo[i] -= step;
    grad[i] = (f(hi) - f(lo)) / (2.0 * step);
  }
  return grad;
}

template <class F>
double fd_delta_variance(const F& f, const Eigen::VectorXd& x, const Eigen::MatrixXd& sigma,
                         double step = 1e-6) {
  const Eigen::VectorXd grad = fd_gradient(f, x, step);
  return grad.dot(sigma * grad);
}

inline Eigen::MatrixXd random_psd(int n, ssar::SplitMix64& rng) {
  Eigen::MatrixXd a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = rng.next_gaussian();
  return a * a.transpose();
}

// Autocovariance of X_t = sum_{j>=0} phi^j Z_{t-j} when the noise Z has the
// finite-support autocovariance r(0..q):
//   gamma(n) = sum_{s=-q..q} phi^{|s-n|} r(|s|) / (1 - phi^2).
// Independent forward route for the noise-recovery round trip.
inline double gamma_from_noise(double phi, const Eigen::VectorXd& r, int n) {
  const int q = static_cast<int>(r.size()) - 1;
  double sum = 0.0;
  for (int s = -q; s <= q; ++s) {
    sum += std::pow(phi, std::abs(s - n)) * r[std::abs(s)];
  }
  return sum / (1.0 - phi * phi);
}

// MA(q) autocovariance with theta_0 = 1 (the true noise acvf of an ARMA(1,q)
// representation at its AR parameter).
inline double ma_acvf(const Eigen::VectorXd& thetas, double sigma2, int n) {
  return ssar::arma_true_acvf(0.0, thetas, sigma2, n);
}

inline double rejection_rate(const std::function<bool(std::uint64_t)>& rejects, int n_seeds,
                             std::uint64_t base_seed) {
  int count = 0;
  for (int i = 0; i < n_seeds; ++i) {
    if (rejects(ssar::SplitMix64::mix(base_seed, i))) ++count;
  }
  return static_cast<double>(count) / n_seeds;
}

inline ssar::TimeSeries make_series(std::initializer_list<double> values, int origin = 1) {
  Eigen::VectorXd v(static_cast<int>(values.size()));
  int i = 0;
  for (double x : values) v[i++] = x;
  return ssar::TimeSeries(std::move(v), origin);
}

}  // namespace support

#endif  // SSAR_TESTS_SUPPORT_HPP
