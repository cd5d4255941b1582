#include "ssar/estimator.hpp"

#include <algorithm>
#include <cmath>

#include "ssar/hypothesis.hpp"

namespace ssar {

double NoiseSpec::at(int lag) const {
  auto it = entries.find(lag);
  if (it == entries.end()) {
    throw std::invalid_argument("NoiseSpec: no entry for lag " + std::to_string(lag));
  }
  return it->second;
}

void NoiseSpec::validate() const {
  if (entries.empty()) throw std::invalid_argument("NoiseSpec: needs at least one entry");
  for (const auto& [lag, value] : entries) {
    if (lag < 0) throw std::invalid_argument("NoiseSpec: lags must be non-negative");
    if (!std::isfinite(value)) throw std::invalid_argument("NoiseSpec: values must be finite");
  }
}

const char* to_string(PhiFormula formula) {
  switch (formula) {
    case PhiFormula::zero_gamma: return "zero-gamma";
    case PhiFormula::quadratic_plus: return "quadratic-plus";
    case PhiFormula::quadratic_minus: return "quadratic-minus";
    case PhiFormula::degenerate: return "degenerate";
    case PhiFormula::ratio: return "ratio";
  }
  return "?";
}

namespace {

PhiEstimate clamp01(double raw, PhiFormula formula) {
  PhiEstimate est;
  est.phi_raw = raw;
  est.formula = formula;
  est.phi = std::min(1.0, std::max(0.0, raw));
  est.clamped = raw < 0.0 || raw > 1.0;
  return est;
}

}  // namespace

GFunction g_function(double gamma_np1, double gamma_n, double gamma_nm1, double r_n) {
  GFunction g;
  const double b = gamma_np1 + gamma_nm1;
  g.value = b * b - 4.0 * gamma_n * (gamma_n - r_n);
  if (g.value > 0.0) {
    const double sq = std::sqrt(g.value);
    g.grad_sqrt = Eigen::Vector3d(b / sq, 2.0 * (r_n - 2.0 * gamma_n) / sq, b / sq);
  }
  return g;
}

PhiEstimate phi_zero_gamma(double gamma_np1, double gamma_nm1, double r_n) {
  const double denom = gamma_np1 + gamma_nm1;
  const double raw = denom != 0.0 ? -r_n / denom : 0.0;
  return clamp01(raw, PhiFormula::zero_gamma);
}

QuadraticRoots quadratic_roots(double gamma_np1, double gamma_n, double gamma_nm1, double r_n) {
  if (gamma_n == 0.0) {
    throw std::domain_error("quadratic_roots: gamma(N) is zero; use phi_zero_gamma instead");
  }
  QuadraticRoots out;
  const double b = gamma_np1 + gamma_nm1;
  out.g = b * b - 4.0 * gamma_n * (gamma_n - r_n);
  const double s = out.g > 0.0 ? std::sqrt(out.g) : 0.0;
  if (s == 0.0) {
    out.plus = out.minus = b / (2.0 * gamma_n);
  } else if (b >= 0.0) {
    out.plus = (b + s) / (2.0 * gamma_n);
    out.minus = 2.0 * (gamma_n - r_n) / (b + s);
  } else {
    out.minus = (b - s) / (2.0 * gamma_n);
    out.plus = 2.0 * (gamma_n - r_n) / (b - s);
  }
  return out;
}

RootChoice choose_root(const LagRoots& first, const std::optional<LagRoots>& second,
                       double base_tol) {
  if (first.gamma_n == 0.0) {
    throw std::domain_error("choose_root: gamma(N) must be nonzero");
  }
  RootChoice choice;
  const bool positive = first.gamma_n > 0.0;
  if (first.a_n <= 0.0) {
    // phi^2 - 1 + a_N < 0: the sign analysis is decisive.
    choice.phi = positive ? first.roots.minus : first.roots.plus;
    choice.formula = positive ? PhiFormula::quadratic_minus : PhiFormula::quadratic_plus;
    return choice;
  }
  if (first.a_n >= 1.0) {
    choice.phi = positive ? first.roots.plus : first.roots.minus;
    choice.formula = positive ? PhiFormula::quadratic_plus : PhiFormula::quadratic_minus;
    return choice;
  }
  if (second) {
    const double c2[2] = {second->roots.plus, second->roots.minus};
    const double se2[2] = {second->se_plus, second->se_minus};
    auto matches = [&](double root, double se) {
      for (int j = 0; j < 2; ++j) {
        if (std::abs(root - c2[j]) <= std::max(base_tol, 3.0 * (se + se2[j]))) return true;
      }
      return false;
    };
    const bool plus_ok = matches(first.roots.plus, first.se_plus);
    const bool minus_ok = matches(first.roots.minus, first.se_minus);
    if (plus_ok && !minus_ok) {
      choice.phi = first.roots.plus;
      choice.formula = PhiFormula::quadratic_plus;
      return choice;
    }
    if (minus_ok && !plus_ok) {
      choice.phi = first.roots.minus;
      choice.formula = PhiFormula::quadratic_minus;
      return choice;
    }
    if (!plus_ok && !minus_ok) {
      throw inconsistency_error(
          "choose_root: no common root across the two lags; the noise specification is "
          "inconsistent with the data");
    }
    // Both roots agree across lags (constant-ratio family): undecidable.
  }
  choice.phi = first.roots.minus;
  choice.formula = PhiFormula::quadratic_minus;
  choice.ambiguous = true;
  return choice;
}

PhiEstimate phi_degenerate(double gamma_np1, double gamma_n, double gamma_nm1) {
  const double raw = gamma_n != 0.0 ? (gamma_np1 + gamma_nm1) / (2.0 * gamma_n) : 0.0;
  return clamp01(raw, PhiFormula::degenerate);
}

PhiEstimate phi_ratio(double gamma_num, double gamma_den) {
  const double raw = gamma_den != 0.0 ? gamma_num / gamma_den : 0.0;
  return clamp01(raw, PhiFormula::ratio);
}

double var_zero_gamma(double gamma_np1, double gamma_nm1, double r_n,
                      const Eigen::Matrix2d& sigma) {
  const double denom = gamma_np1 + gamma_nm1;
  if (denom == 0.0) {
    throw std::domain_error("var_zero_gamma: gamma(N+1) + gamma(N-1) must be nonzero");
  }
  const double d2 = denom * denom;
  const double scale = r_n * r_n / (d2 * d2);
  return scale * (sigma(0, 0) + 2.0 * sigma(0, 1) + sigma(1, 1));
}

double var_quadratic(double gamma_np1, double gamma_n, double gamma_nm1, double r_n,
                     const Eigen::Matrix3d& sigma, bool plus_root) {
  if (gamma_n == 0.0) throw std::domain_error("var_quadratic: gamma(N) must be nonzero");
  const GFunction g = g_function(gamma_np1, gamma_n, gamma_nm1, r_n);
  if (!(g.value > 0.0)) {
    throw std::domain_error("var_quadratic: g(gamma) <= 0; use var_degenerate instead");
  }
  const double sign = plus_root ? 1.0 : -1.0;
  const double c = (gamma_np1 + gamma_nm1 + sign * std::sqrt(g.value)) / gamma_n;
  const Eigen::Vector3d w = Eigen::Vector3d(1.0, -c, 1.0) + sign * (*g.grad_sqrt);
  return w.dot(sigma * w) / (4.0 * gamma_n * gamma_n);
}

double var_degenerate(double gamma_np1, double gamma_n, double gamma_nm1,
                      const Eigen::Matrix3d& sigma) {
  if (gamma_n == 0.0) throw std::domain_error("var_degenerate: gamma(N) must be nonzero");
  const Eigen::Vector3d v(1.0, -(gamma_np1 + gamma_nm1) / gamma_n, 1.0);
  return v.dot(sigma * v) / (4.0 * gamma_n * gamma_n);
}

double var_ratio(double gamma_num, double gamma_den, const Eigen::Matrix2d& sigma) {
  if (gamma_den == 0.0) throw std::domain_error("var_ratio: denominator lag must be nonzero");
  const Eigen::Vector2d grad(1.0 / gamma_den, -gamma_num / (gamma_den * gamma_den));
  return grad.dot(sigma * grad);
}

namespace {

void attach_ci(PhiEstimate& est, double level, double rate) {
  if (!std::isfinite(est.variance) || est.variance < 0.0) return;
  const double z = normal_quantile(0.5 + level / 2.0);
  const double half = z * std::sqrt(est.variance) / rate;
  est.ci_low = est.phi_raw - half;
  est.ci_high = est.phi_raw + half;
}

}  // namespace

PhiEstimate estimate(const TimeSeries& series, int N, const NoiseSpec& noise,
                     const EstimateConfig& config, std::vector<TestResult>* tests_run) {
  noise.validate();
  if (N < 1) throw std::domain_error("estimate: lag N must be at least 1");
  if (!noise.has(N)) {
    throw std::invalid_argument("estimate: NoiseSpec has no entry for lag " + std::to_string(N));
  }
  const int T = series.length();
  const double r_n = noise.at(N);

  // Optional second lag for root disambiguation: any other entry.
  std::optional<int> second_lag;
  for (const auto& [lag, value] : noise.entries) {
    if (lag != N) {
      second_lag = lag;
      break;
    }
  }

  const int top_lag = std::max(N, second_lag.value_or(0)) + 1;
  if (top_lag > T - 2) {
    throw std::domain_error("estimate: series too short for lag " + std::to_string(N));
  }

  EstimateConfig cfg = config;
  if (cfg.acvf.max_lag <= 0) {
    const int want = top_lag + std::max(0, static_cast<int>(std::floor(
                                               10.0 * std::log10(static_cast<double>(T)))));
    cfg.acvf.max_lag = std::min(T - 2, want);
  }
  if (cfg.acvf.max_lag < top_lag) {
    throw std::domain_error("estimate: max_lag must cover lag N + 1");
  }
  const AcvfEstimate acvf = acvf_vector(series, cfg.acvf);
  const Eigen::VectorXd& gamma = acvf.gamma;
  const int K = cfg.acvf.max_lag;
  const int M = cfg.bartlett_truncation >= 0
                    ? std::min(cfg.bartlett_truncation, K - top_lag)
                    : default_bartlett_truncation(T, K, top_lag);
  const double rate = std::pow(static_cast<double>(T), cfg.rate_exponent);
  const double alpha = 1.0 - cfg.level;

  auto record = [&](const TestResult& tr) {
    if (tests_run) tests_run->push_back(tr);
  };

  bool gamma_zero_accepted;
  try {
    const TestResult tr = test_gamma_zero(series, N, alpha, cfg);
    record(tr);
    gamma_zero_accepted = !tr.reject;
  } catch (const test_unavailable_error&) {
    gamma_zero_accepted = gamma[N] == 0.0;
  }

  if (gamma_zero_accepted) {
    if (r_n == 0.0) {
      throw uninformative_error("estimate: gamma(" + std::to_string(N) +
                                ") ~ 0 and r(N) = 0 provide no information about phi");
    }
    PhiEstimate est = phi_zero_gamma(gamma[N + 1], gamma[N - 1], r_n);
    est.lag = N;
    const Eigen::Matrix2d s2 = bartlett_matrix(gamma, {N + 1, N - 1}, M);
    est.variance = var_zero_gamma(gamma[N + 1], gamma[N - 1], r_n, s2);
    attach_ci(est, cfg.level, rate);
    return est;
  }

  const Eigen::Matrix3d s3 = bartlett_matrix(gamma, {N + 1, N, N - 1}, M);

  bool g_zero_accepted;
  try {
    const TestResult tr = test_g_zero(series, N, noise, alpha, cfg);
    record(tr);
    g_zero_accepted = !tr.reject;
  } catch (const test_unavailable_error&) {
    g_zero_accepted = !(g_function(gamma[N + 1], gamma[N], gamma[N - 1], r_n).value > 0.0);
  }

  if (g_zero_accepted) {
    PhiEstimate est = phi_degenerate(gamma[N + 1], gamma[N], gamma[N - 1]);
    est.lag = N;
    est.variance = var_degenerate(gamma[N + 1], gamma[N], gamma[N - 1], s3);
    attach_ci(est, cfg.level, rate);
    return est;
  }

  LagRoots first;
  first.roots = quadratic_roots(gamma[N + 1], gamma[N], gamma[N - 1], r_n);
  first.gamma_n = gamma[N];
  first.a_n = r_n / gamma[N];
  auto root_se = [&](const Eigen::Vector3d& triple, double r, const Eigen::Matrix3d& s,
                     double g_value, bool plus) {
    // agreement tolerance only; fall back to the double-root variance at g <= 0
    const double v = g_value > 0.0 ? var_quadratic(triple[0], triple[1], triple[2], r, s, plus)
                                   : var_degenerate(triple[0], triple[1], triple[2], s);
    return std::sqrt(std::max(v, 0.0)) / rate;
  };
  const Eigen::Vector3d triple_n(gamma[N + 1], gamma[N], gamma[N - 1]);
  first.se_plus = root_se(triple_n, r_n, s3, first.roots.g, true);
  first.se_minus = root_se(triple_n, r_n, s3, first.roots.g, false);

  std::optional<LagRoots> second;
  if (second_lag) {
    const int m = *second_lag;
    const double r_m = noise.at(m);
    const double g_mp1 = gamma[m + 1];
    const double g_m = gamma[m];
    const double g_mm1 = gamma[std::abs(m - 1)];
    if (g_m != 0.0) {
      LagRoots lr;
      lr.roots = quadratic_roots(g_mp1, g_m, g_mm1, r_m);
      lr.gamma_n = g_m;
      lr.a_n = r_m / g_m;
      const Eigen::Matrix3d s3m = bartlett_matrix(gamma, {m + 1, m, std::abs(m - 1)}, M);
      const Eigen::Vector3d triple_m(g_mp1, g_m, g_mm1);
      lr.se_plus = root_se(triple_m, r_m, s3m, lr.roots.g, true);
      lr.se_minus = root_se(triple_m, r_m, s3m, lr.roots.g, false);
      second = lr;
    }
  }

  const RootChoice choice = choose_root(first, second, cfg.root_match_tol);
  PhiEstimate est = clamp01(choice.phi, choice.formula);
  est.lag = N;
  est.ambiguous = choice.ambiguous;
  if (choice.ambiguous) {
    est.candidate_plus = first.roots.plus;
    est.candidate_minus = first.roots.minus;
  }
  est.variance = first.roots.g > 0.0
                     ? var_quadratic(gamma[N + 1], gamma[N], gamma[N - 1], r_n, s3,
                                     choice.formula == PhiFormula::quadratic_plus)
                     : var_degenerate(gamma[N + 1], gamma[N], gamma[N - 1], s3);
  attach_ci(est, cfg.level, rate);
  return est;
}

}  // namespace ssar
