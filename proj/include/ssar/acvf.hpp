#ifndef SSAR_ACVF_HPP
#define SSAR_ACVF_HPP

#include <vector>

#include "ssar/types.hpp"

namespace ssar {

enum class Centering { none, sample_mean };
enum class Denominator { by_T, by_T_minus_lag_minus_1 };

struct AcvfConfig {
  Centering centering = Centering::sample_mean;
  Denominator denominator = Denominator::by_T;
  int max_lag = 0;  // K; must satisfy K < T - 1
};

/// Sample autocovariances gamma(0..K) plus an optional plug-in covariance
/// matrix for their joint large-sample law l(T)(gamma_hat - gamma) -> N(0, Sigma).
struct AcvfEstimate {
  Eigen::VectorXd gamma;   // gamma_hat(0), ..., gamma_hat(K)
  Eigen::MatrixXd sigma;   // empty until fill_bartlett() is called
  AcvfConfig config;
  int T = 0;
  double rate_exponent = 0.5;  // l(T) = T^rate_exponent

  double rate() const;
};

/// gamma_hat(lag) under the configured centering and denominator.
/// Throws std::domain_error if the lag is outside [0, max_lag].
double sample_autocovariance(const TimeSeries& series, int lag, const AcvfConfig& config);

/// gamma_hat(0..K) in one pass; sigma is left empty.
AcvfEstimate acvf_vector(const TimeSeries& series, const AcvfConfig& config);

/// Truncated Bartlett-type entry of the asymptotic covariance of sample
/// autocovariances under Gaussianity:
///
///   sigma(p,q) = sum_{k=-M..M} [ gamma(k) gamma(k+q-p) + gamma(k+q) gamma(k-p) ]
///
/// with gamma(-n) = gamma(n) and lags beyond the supplied vector treated as
/// zero. Requires M <= K - max(p,q) so every index that can contribute is
/// covered; exact in the symmetry sigma(p,q) == sigma(q,p).
double bartlett_sigma(const Eigen::VectorXd& gamma, int p, int q, int truncation);

/// Bartlett covariance matrix for the listed lags, all at the same truncation.
Eigen::MatrixXd bartlett_matrix(const Eigen::VectorXd& gamma, const std::vector<int>& lags,
                                int truncation);

/// Default truncation floor(10 * log10 T), capped so the Bartlett sums stay
/// inside the available lags.
int default_bartlett_truncation(int T, int K, int max_lag_used);

/// Fills est.sigma with the (K+1)x(K+1) Bartlett matrix; entries near the
/// edge use a per-entry truncation capped at K - max(p,q).
void fill_bartlett(AcvfEstimate& est, int truncation = -1);

/// Exact AR(1) autocovariance sigma2 * phi^n / (1 - phi^2) for phi in (0,1).
double ar1_true_acvf(double phi, double sigma2, int n);

/// Exact autocovariance of the causal ARMA(1,q) process
/// X_t - phi X_{t-1} = eps_t + theta_1 eps_{t-1} + ... + theta_q eps_{t-q},
/// |phi| < 1, via its MA(infinity) weights (geometric tail summed in closed
/// form). An empty theta vector reduces to the AR(1) formula.
double arma_true_acvf(double phi, const Eigen::VectorXd& thetas, double sigma2, int n);

}  // namespace ssar

#endif  // SSAR_ACVF_HPP
