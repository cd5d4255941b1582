#ifndef SSAR_HYPOTHESIS_HPP
#define SSAR_HYPOTHESIS_HPP

#include "ssar/estimator.hpp"
#include "ssar/types.hpp"

namespace ssar {

enum class TestNull { gamma_zero, g_zero, gamma_equals_r, a_equal };
enum class Alternative { two_sided, greater, less };

const char* to_string(TestNull null_hypothesis);
const char* to_string(Alternative alternative);

struct TestResult {
  double statistic = 0.0;
  double std_error = 0.0;
  double p_value = 1.0;
  TestNull null_hypothesis = TestNull::gamma_zero;
  Alternative alternative = Alternative::two_sided;
  double alpha = 0.05;
  bool reject = false;  // decision at level alpha
};

/// H0: gamma(N) = 0, two-sided. Statistic gamma_hat(N), standard error
/// sqrt(bartlett_sigma(N,N)) / l(T). Degenerate plug-in variance raises
/// test_unavailable_error.
TestResult test_gamma_zero(const TimeSeries& series, int N, double alpha,
                           const EstimateConfig& config = {});

/// H0: g(gamma) = 0 against g > 0. Statistic g evaluated at the estimated
/// triple with the assumed r(N); variance by the delta method with
/// grad g = (2(x1+x3), -8 x2 + 4 r(N), 2(x1+x3)).
TestResult test_g_zero(const TimeSeries& series, int N, const NoiseSpec& noise, double alpha,
                       const EstimateConfig& config = {});

/// H0: gamma(N) = r(N) against r(N)/gamma(N) < 1; the rejection direction
/// follows the sign of r(N) (greater for r(N) >= 0, less for r(N) < 0).
TestResult test_gamma_equals_r(const TimeSeries& series, int N, double r_n, double alpha,
                               const EstimateConfig& config = {});

/// H0: a_N = a_{N+k} with a_j = r(j)/gamma(j), two-sided. Requires noise
/// entries at both lags; gamma_hat at either lag equal to zero makes the
/// statistic undefined and raises test_unavailable_error.
TestResult test_a_equal(const TimeSeries& series, int N, int k, const NoiseSpec& noise,
                        double alpha, const EstimateConfig& config = {});

/// Standard normal distribution function, accurate over the full double range.
double normal_cdf(double z);

/// Inverse of normal_cdf on (0,1).
double normal_quantile(double p);

/// delta-method variance of the g statistic given a covariance stub; exposed
/// for direct checks of the gradient.
double g_variance(double gamma_np1, double gamma_n, double gamma_nm1, double r_n,
                  const Eigen::Matrix3d& sigma);

}  // namespace ssar

#endif  // SSAR_HYPOTHESIS_HPP
