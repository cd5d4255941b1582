#ifndef SSAR_ESTIMATOR_HPP
#define SSAR_ESTIMATOR_HPP

#include <initializer_list>
#include <limits>
#include <map>
#include <optional>
#include <vector>

#include "ssar/acvf.hpp"
#include "ssar/types.hpp"

namespace ssar {

/// Assumed autocovariance values of the noise process, r(n) = cov(Z_t, Z_{t+n}).
/// One entry suffices for estimation; a second entry enables root
/// disambiguation across lags.
struct NoiseSpec {
  std::map<int, double> entries;

  NoiseSpec() = default;
  NoiseSpec(std::initializer_list<std::pair<const int, double>> init) : entries(init) {}

  bool has(int lag) const { return entries.count(lag) != 0; }
  double at(int lag) const;
  void validate() const;
};

enum class PhiFormula { zero_gamma, quadratic_plus, quadratic_minus, degenerate, ratio };

const char* to_string(PhiFormula formula);

/// Point estimate of the AR(1) parameter together with which closed form
/// produced it and the delta-method uncertainty of l(T)(phi_hat - phi).
struct PhiEstimate {
  double phi = 0.0;
  PhiFormula formula = PhiFormula::zero_gamma;
  bool clamped = false;
  double phi_raw = 0.0;   // value before clamping to [0,1]
  double variance = std::numeric_limits<double>::quiet_NaN();
  double ci_low = std::numeric_limits<double>::quiet_NaN();   // untruncated
  double ci_high = std::numeric_limits<double>::quiet_NaN();  // untruncated
  bool ambiguous = false;
  double candidate_plus = std::numeric_limits<double>::quiet_NaN();
  double candidate_minus = std::numeric_limits<double>::quiet_NaN();
  int lag = -1;
};

/// The discriminant g(x) = (x1 + x3)^2 - 4 x2 (x2 - r(N)) of the Yule-Walker
/// type quadratic, with the gradient of sqrt(g) when g > 0. Argument order is
/// (gamma(N+1), gamma(N), gamma(N-1)) throughout this header.
struct GFunction {
  double value = 0.0;
  std::optional<Eigen::Vector3d> grad_sqrt;
};

GFunction g_function(double gamma_np1, double gamma_n, double gamma_nm1, double r_n);

struct QuadraticRoots {
  double plus = 0.0;
  double minus = 0.0;
  double g = 0.0;
};

/// Estimator for the gamma(N) = 0 case:
///   phi_hat = -r(N) / (gamma(N+1) + gamma(N-1)),
/// zero via the indicator when the denominator vanishes, then clamped to [0,1].
PhiEstimate phi_zero_gamma(double gamma_np1, double gamma_nm1, double r_n);

/// Both roots of phi^2 gamma(N) - phi (gamma(N+1)+gamma(N-1)) + gamma(N) - r(N) = 0,
/// computed in the cancellation-free product form. A negative discriminant
/// (possible under sampling noise) zeroes the square-root term, matching the
/// indicator in the estimator's definition. gamma(N) = 0 is a domain error;
/// use phi_zero_gamma there.
QuadraticRoots quadratic_roots(double gamma_np1, double gamma_n, double gamma_nm1, double r_n);

/// Root candidates at one lag together with what the sign analysis needs.
struct LagRoots {
  QuadraticRoots roots;
  double gamma_n = 0.0;
  double a_n = 0.0;        // r(N) / gamma(N)
  double se_plus = 0.0;    // standard errors of the two root estimators,
  double se_minus = 0.0;   // used only for the two-lag agreement tolerance
};

struct RootChoice {
  double phi = 0.0;
  PhiFormula formula = PhiFormula::quadratic_minus;
  bool ambiguous = false;
};

/// Selects between the plus and minus roots. With a_N <= 0 the sign analysis
/// is decisive (minus root when gamma(N) > 0, plus when gamma(N) < 0); with
/// a_N >= 1 the choice mirrors. For 0 < a_N < 1 a second lag is consulted:
/// the root common to both lags within
///   max(base_tol, 3 (se_a + se_b))
/// wins; no common root raises inconsistency_error, and both roots matching
/// (the constant-ratio family) comes back flagged ambiguous. Without a second
/// lag the result is the minus root flagged ambiguous.
RootChoice choose_root(const LagRoots& first, const std::optional<LagRoots>& second = std::nullopt,
                       double base_tol = 0.02);

/// Degenerate g = 0 estimator (gamma(N+1)+gamma(N-1)) / (2 gamma(N)), clamped.
PhiEstimate phi_degenerate(double gamma_np1, double gamma_n, double gamma_nm1);

/// Ratio estimator gamma(n)/gamma(n-1) for the vanishing-noise regime
/// r(m) = 0, m >= N; zero via the indicator when the denominator vanishes.
PhiEstimate phi_ratio(double gamma_num, double gamma_den);

/// Delta-method variance of l(T)(phi_hat - phi) for the zero-gamma estimator.
/// sigma is the 2x2 covariance of (gamma_hat(N+1), gamma_hat(N-1)).
double var_zero_gamma(double gamma_np1, double gamma_nm1, double r_n,
                      const Eigen::Matrix2d& sigma);

/// Delta-method variance for the quadratic-root estimators. sigma is the 3x3
/// covariance of (gamma_hat(N+1), gamma_hat(N), gamma_hat(N-1)); plus_root
/// selects which root the gradient is taken at (the sign of the sqrt(g) term
/// flips, and the C_N coefficient is evaluated at that root). Requires g > 0.
double var_quadratic(double gamma_np1, double gamma_n, double gamma_nm1, double r_n,
                     const Eigen::Matrix3d& sigma, bool plus_root);

/// Variance for the degenerate g = 0 estimator.
double var_degenerate(double gamma_np1, double gamma_n, double gamma_nm1,
                      const Eigen::Matrix3d& sigma);

/// Variance for the ratio estimator; sigma is the 2x2 covariance of the
/// (numerator, denominator) autocovariance estimators.
double var_ratio(double gamma_num, double gamma_den, const Eigen::Matrix2d& sigma);

struct EstimateConfig {
  AcvfConfig acvf;               // max_lag 0 means choose automatically
  double level = 0.95;           // confidence level; tests run at alpha = 1 - level
  double rate_exponent = 0.5;    // l(T) = T^rate_exponent
  int bartlett_truncation = -1;  // -1: floor(10 log10 T), capped by available lags
  double root_match_tol = 0.02;  // base tolerance for two-lag root agreement
};

/// Full estimation pipeline at lag N: test gamma(N) = 0, fall to the
/// zero-gamma branch if accepted (r(N) = 0 there is an uninformative lag);
/// otherwise test g = 0 and pick the degenerate or quadratic branch, using a
/// second NoiseSpec entry for root disambiguation when present. The result
/// carries the delta-method variance and a normal confidence interval built
/// with l(T) = T^rate_exponent. If tests_run is non-null the hypothesis tests
/// executed along the way are appended to it.
struct TestResult;
PhiEstimate estimate(const TimeSeries& series, int N, const NoiseSpec& noise,
                     const EstimateConfig& config = {},
                     std::vector<TestResult>* tests_run = nullptr);

}  // namespace ssar

#endif  // SSAR_ESTIMATOR_HPP
