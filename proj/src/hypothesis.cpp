#include "ssar/hypothesis.hpp"

#include <cmath>

namespace ssar {

const char* to_string(TestNull null_hypothesis) {
  switch (null_hypothesis) {
    case TestNull::gamma_zero: return "gamma-zero";
    case TestNull::g_zero: return "g-zero";
    case TestNull::gamma_equals_r: return "gamma-equals-r";
    case TestNull::a_equal: return "a-equal";
  }
  return "?";
}

const char* to_string(Alternative alternative) {
  switch (alternative) {
    case Alternative::two_sided: return "two-sided";
    case Alternative::greater: return "one-sided-greater";
    case Alternative::less: return "one-sided-less";
  }
  return "?";
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z * 0.70710678118654752440); }

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::domain_error("normal_quantile: p must lie in (0,1)");
  }
  // Acklam's rational approximation, then one Halley step against erfc.
  static const double a[6] = {-3.969683028665376e+01, 2.209460984245205e+02,
                              -2.759285104469687e+02, 1.383577518672690e+02,
                              -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[5] = {-5.447609879822406e+01, 1.615858368580409e+02,
                              -1.556989798598866e+02, 6.680131188771972e+01,
                              -1.328068155288572e+01};
  static const double c[6] = {-7.784894002430293e-03, -3.223964580411365e-01,
                              -2.400758277161838e+00, -2.549732539343734e+00,
                              4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[4] = {7.784695709041462e-03, 3.224671290700398e-01,
                              2.445134137142996e+00, 3.754408661907416e+00};
  const double p_low = 0.02425;
  double x;
  if (p < p_low) {
    const double q = std::sqrt(-2.0 * std::log(p));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  } else if (p <= 1.0 - p_low) {
    const double q = p - 0.5;
    const double r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  } else {
    const double q = std::sqrt(-2.0 * std::log(1.0 - p));
    x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  const double e = normal_cdf(x) - p;
  const double u = e * 2.5066282746310002 * std::exp(0.5 * x * x);
  return x - u / (1.0 + 0.5 * x * u);
}

double g_variance(double gamma_np1, double gamma_n, double gamma_nm1, double r_n,
                  const Eigen::Matrix3d& sigma) {
  const double db = 2.0 * (gamma_np1 + gamma_nm1);
  const Eigen::Vector3d grad(db, -8.0 * gamma_n + 4.0 * r_n, db);
  return grad.dot(sigma * grad);
}

namespace {

struct Prepared {
  AcvfEstimate acvf;
  int truncation = 0;
  double rate = 1.0;
};

Prepared prepare(const TimeSeries& series, int top_lag, const EstimateConfig& config) {
  const int T = series.length();
  if (top_lag > T - 2) {
    throw std::domain_error("hypothesis test: series too short for the requested lag");
  }
  EstimateConfig cfg = config;
  if (cfg.acvf.max_lag <= 0) {
    const int want = top_lag + std::max(0, static_cast<int>(std::floor(
                                               10.0 * std::log10(static_cast<double>(T)))));
    cfg.acvf.max_lag = std::min(T - 2, want);
  }
  if (cfg.acvf.max_lag < top_lag) {
    throw std::domain_error("hypothesis test: max_lag must cover the statistic's lags");
  }
  Prepared out;
  out.acvf = acvf_vector(series, cfg.acvf);
  out.truncation = cfg.bartlett_truncation >= 0
                       ? std::min(cfg.bartlett_truncation, cfg.acvf.max_lag - top_lag)
                       : default_bartlett_truncation(T, cfg.acvf.max_lag, top_lag);
  out.rate = std::pow(static_cast<double>(T), cfg.rate_exponent);
  return out;
}

TestResult finish(double statistic, double variance, double rate, TestNull null_hypothesis,
                  Alternative alternative, double alpha) {
  if (!(variance > 0.0) || !std::isfinite(variance)) {
    throw test_unavailable_error("hypothesis test: degenerate plug-in variance for " +
                                 std::string(to_string(null_hypothesis)));
  }
  TestResult tr;
  tr.statistic = statistic;
  tr.std_error = std::sqrt(variance) / rate;
  tr.null_hypothesis = null_hypothesis;
  tr.alternative = alternative;
  tr.alpha = alpha;
  const double z = statistic / tr.std_error;
  switch (alternative) {
    case Alternative::two_sided: tr.p_value = 2.0 * (1.0 - normal_cdf(std::abs(z))); break;
    case Alternative::greater: tr.p_value = 1.0 - normal_cdf(z); break;
    case Alternative::less: tr.p_value = normal_cdf(z); break;
  }
  tr.reject = tr.p_value < alpha;
  return tr;
}

}  // namespace

TestResult test_gamma_zero(const TimeSeries& series, int N, double alpha,
                           const EstimateConfig& config) {
  if (N < 1) throw std::domain_error("test_gamma_zero: lag must be at least 1");
  const Prepared p = prepare(series, N, config);
  const double variance = bartlett_sigma(p.acvf.gamma, N, N, p.truncation);
  return finish(p.acvf.gamma[N], variance, p.rate, TestNull::gamma_zero, Alternative::two_sided,
                alpha);
}

TestResult test_g_zero(const TimeSeries& series, int N, const NoiseSpec& noise, double alpha,
                       const EstimateConfig& config) {
  if (N < 1) throw std::domain_error("test_g_zero: lag must be at least 1");
  const double r_n = noise.at(N);
  const Prepared p = prepare(series, N + 1, config);
  const Eigen::VectorXd& gamma = p.acvf.gamma;
  const GFunction g = g_function(gamma[N + 1], gamma[N], gamma[N - 1], r_n);
  const Eigen::Matrix3d sigma = bartlett_matrix(gamma, {N + 1, N, N - 1}, p.truncation);
  const double variance = g_variance(gamma[N + 1], gamma[N], gamma[N - 1], r_n, sigma);
  return finish(g.value, variance, p.rate, TestNull::g_zero, Alternative::greater, alpha);
}

TestResult test_gamma_equals_r(const TimeSeries& series, int N, double r_n, double alpha,
                               const EstimateConfig& config) {
  if (N < 1) throw std::domain_error("test_gamma_equals_r: lag must be at least 1");
  const Prepared p = prepare(series, N, config);
  const double variance = bartlett_sigma(p.acvf.gamma, N, N, p.truncation);
  // alternative r(N)/gamma(N) < 1; the direction in gamma-space follows sign(r)
  const Alternative alt = r_n < 0.0 ? Alternative::less : Alternative::greater;
  return finish(p.acvf.gamma[N] - r_n, variance, p.rate, TestNull::gamma_equals_r, alt, alpha);
}

TestResult test_a_equal(const TimeSeries& series, int N, int k, const NoiseSpec& noise,
                        double alpha, const EstimateConfig& config) {
  if (N < 1 || k < 1) throw std::domain_error("test_a_equal: need N >= 1 and k >= 1");
  const double r_a = noise.at(N);
  const double r_b = noise.at(N + k);
  const Prepared p = prepare(series, N + k, config);
  const Eigen::VectorXd& gamma = p.acvf.gamma;
  const double g_a = gamma[N];
  const double g_b = gamma[N + k];
  if (g_a == 0.0 || g_b == 0.0) {
    throw test_unavailable_error("test_a_equal: gamma_hat vanishes at one of the lags");
  }
  const double statistic = r_a / g_a - r_b / g_b;
  const Eigen::Vector2d grad(-r_a / (g_a * g_a), r_b / (g_b * g_b));
  const Eigen::Matrix2d sigma = bartlett_matrix(gamma, {N, N + k}, p.truncation);
  const double variance = grad.dot(sigma * grad);
  return finish(statistic, variance, p.rate, TestNull::a_equal, Alternative::two_sided, alpha);
}

}  // namespace ssar
