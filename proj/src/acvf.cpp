#include "ssar/acvf.hpp"

#include <cmath>
#include <string>

namespace ssar {

namespace {

void check_config(const AcvfConfig& config, int T) {
  if (config.max_lag < 0 || config.max_lag >= T - 1) {
    throw std::domain_error("AcvfConfig: max_lag " + std::to_string(config.max_lag) +
                            " must satisfy 0 <= K < T - 1 with T = " + std::to_string(T));
  }
}

}  // namespace

double AcvfEstimate::rate() const { return std::pow(static_cast<double>(T), rate_exponent); }

double sample_autocovariance(const TimeSeries& series, int lag, const AcvfConfig& config) {
  const int T = series.length();
  check_config(config, T);
  if (lag < 0 || lag > config.max_lag) {
    throw std::domain_error("sample_autocovariance: lag " + std::to_string(lag) +
                            " outside [0, " + std::to_string(config.max_lag) + "]");
  }
  const auto& x = series.values;
  const int n = T - lag;
  double sum;
  if (config.centering == Centering::sample_mean) {
    const double mean = x.mean();
    sum = (x.head(n).array() - mean).matrix().dot((x.tail(n).array() - mean).matrix());
  } else {
    sum = x.head(n).dot(x.tail(n));
  }
  const double denom =
      config.denominator == Denominator::by_T ? static_cast<double>(T)
                                              : static_cast<double>(T - lag - 1);
  return sum / denom;
}

AcvfEstimate acvf_vector(const TimeSeries& series, const AcvfConfig& config) {
  const int T = series.length();
  check_config(config, T);
  AcvfEstimate est;
  est.config = config;
  est.T = T;
  est.gamma.resize(config.max_lag + 1);
  const auto& x = series.values;
  Eigen::VectorXd centered;
  const Eigen::VectorXd* data = &x;
  if (config.centering == Centering::sample_mean) {
    centered = x.array() - x.mean();
    data = &centered;
  }
  for (int lag = 0; lag <= config.max_lag; ++lag) {
    const int n = T - lag;
    const double sum = data->head(n).dot(data->tail(n));
    const double denom = config.denominator == Denominator::by_T
                             ? static_cast<double>(T)
                             : static_cast<double>(T - lag - 1);
    est.gamma[lag] = sum / denom;
  }
  return est;
}

double bartlett_sigma(const Eigen::VectorXd& gamma, int p, int q, int truncation) {
  const int K = static_cast<int>(gamma.size()) - 1;
  if (p < 0 || q < 0 || p > K || q > K) {
    throw std::domain_error("bartlett_sigma: lags (" + std::to_string(p) + ", " +
                            std::to_string(q) + ") outside [0, " + std::to_string(K) + "]");
  }
  if (truncation < 0 || truncation > K - std::max(p, q)) {
    throw std::domain_error("bartlett_sigma: truncation " + std::to_string(truncation) +
                            " needs lags up to " + std::to_string(truncation + std::max(p, q)) +
                            " but only " + std::to_string(K) + " are available");
  }
  auto g = [&](int lag) {
    lag = std::abs(lag);
    return lag <= K ? gamma[lag] : 0.0;
  };
  auto term = [&](int k) { return g(k) * g(k + q - p) + g(k + q) * g(k - p); };
  // Pairing k with -k keeps sigma(p,q) == sigma(q,p) exact in floating point.
  double sum = term(0);
  for (int k = 1; k <= truncation; ++k) sum += term(k) + term(-k);
  return sum;
}

Eigen::MatrixXd bartlett_matrix(const Eigen::VectorXd& gamma, const std::vector<int>& lags,
                                int truncation) {
  const int m = static_cast<int>(lags.size());
  Eigen::MatrixXd sigma(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) sigma(i, j) = bartlett_sigma(gamma, lags[i], lags[j], truncation);
  return sigma;
}

int default_bartlett_truncation(int T, int K, int max_lag_used) {
  const int target = static_cast<int>(std::floor(10.0 * std::log10(static_cast<double>(T))));
  return std::max(0, std::min(target, K - max_lag_used));
}

void fill_bartlett(AcvfEstimate& est, int truncation) {
  const int K = static_cast<int>(est.gamma.size()) - 1;
  if (truncation < 0) truncation = default_bartlett_truncation(est.T, K, 0);
  est.sigma.resize(K + 1, K + 1);
  for (int p = 0; p <= K; ++p) {
    for (int q = p; q <= K; ++q) {
      const int m = std::min(truncation, K - q);
      const double value = bartlett_sigma(est.gamma, p, q, m);
      est.sigma(p, q) = value;
      est.sigma(q, p) = value;
    }
  }
}

double ar1_true_acvf(double phi, double sigma2, int n) {
  if (!(phi > 0.0 && phi < 1.0)) {
    throw std::domain_error("ar1_true_acvf: phi must lie in (0,1), got " + std::to_string(phi));
  }
  if (!(sigma2 > 0.0)) throw std::domain_error("ar1_true_acvf: sigma2 must be positive");
  if (n < 0) throw std::domain_error("ar1_true_acvf: lag must be non-negative");
  return sigma2 * std::pow(phi, n) / (1.0 - phi * phi);
}

double arma_true_acvf(double phi, const Eigen::VectorXd& thetas, double sigma2, int n) {
  if (!(std::abs(phi) < 1.0)) {
    throw std::domain_error("arma_true_acvf: |phi| must be < 1 for causality, got " +
                            std::to_string(phi));
  }
  if (!(sigma2 > 0.0)) throw std::domain_error("arma_true_acvf: sigma2 must be positive");
  if (n < 0) throw std::domain_error("arma_true_acvf: lag must be non-negative");
  const int q = static_cast<int>(thetas.size());
  // MA(infinity) weights psi_0..psi_{q+n}; beyond index q they decay by phi.
  Eigen::VectorXd psi(q + n + 1);
  psi[0] = 1.0;
  for (int j = 1; j <= q + n; ++j) {
    psi[j] = phi * psi[j - 1] + (j <= q ? thetas[j - 1] : 0.0);
  }
  double sum = 0.0;
  for (int j = 0; j <= q; ++j) sum += psi[j] * psi[j + n];
  // Exact geometric tail sum_{j>q} psi_j psi_{j+n}.
  const double psi_q1 = phi * psi[q];
  const double psi_q1n = phi * psi[q + n];
  sum += psi_q1 * psi_q1n / (1.0 - phi * phi);
  return sigma2 * sum;
}

}  // namespace ssar
