#include "ssar/noise.hpp"

#include <cmath>
#include <string>

namespace ssar {

double recover_noise_acvf(double phi, const Eigen::VectorXd& gamma, int n) {
  if (!(phi > 0.0 && phi < 1.0)) {
    throw std::domain_error("recover_noise_acvf: phi must lie in (0,1)");
  }
  const int K = static_cast<int>(gamma.size()) - 1;
  if (n < 0 || n + 1 > K) {
    throw std::domain_error("recover_noise_acvf: need gamma at lags " + std::to_string(n - 1) +
                            ".." + std::to_string(n + 1) + " but only 0.." + std::to_string(K) +
                            " are available");
  }
  const double g_m = gamma[std::abs(n - 1)];  // gamma(-1) = gamma(1)
  return phi * phi * gamma[n] - phi * (gamma[n + 1] + g_m) + gamma[n];
}

double negative_ar1_noise_acvf(double varphi, double H, double sigma2, int t) {
  if (!(varphi > -1.0 && varphi < 0.0)) {
    throw std::domain_error("negative_ar1_noise_acvf: varphi must lie in (-1,0)");
  }
  if (!(H > 0.0)) throw std::domain_error("negative_ar1_noise_acvf: H must be positive");
  if (!(sigma2 > 0.0)) throw std::domain_error("negative_ar1_noise_acvf: sigma2 must be positive");
  if (t < 1) throw std::domain_error("negative_ar1_noise_acvf: t must be at least 1");
  const double ph = std::exp(-H);
  const double tail = varphi * varphi / (1.0 - varphi * varphi);  // sum of (varphi^2)^n, n >= 1
  return std::pow(varphi, t - 2) * (varphi - ph) * sigma2 * (varphi + (varphi - ph) * tail);
}

double series_identity_residual(double phi, const Eigen::VectorXd& gamma,
                                const Eigen::VectorXd& r, int k, int truncation) {
  if (!(phi > 0.0 && phi < 1.0)) {
    throw std::domain_error("series_identity_residual: phi must lie in (0,1)");
  }
  const int K = static_cast<int>(gamma.size()) - 1;
  if (k < 1 || k > K) {
    throw std::domain_error("series_identity_residual: k must lie in [1, K]");
  }
  if (truncation < 0) throw std::domain_error("series_identity_residual: truncation must be >= 0");
  double series = 0.0;
  double power = 1.0;
  for (int i = 0; i <= truncation; ++i) {
    const int lag = k + i;
    series += power * (lag < r.size() ? r[lag] : 0.0);
    power *= phi;
  }
  return std::abs(gamma[k] - phi * gamma[k - 1] - series);
}

}  // namespace ssar
