#include "ssar/simgen.hpp"

#include <cmath>
#include <string>

namespace ssar {

double SplitMix64::next_gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u, v, s;
  do {
    u = 2.0 * next_unit() - 1.0;
    v = 2.0 * next_unit() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double f = std::sqrt(-2.0 * std::log(s) / s);
  spare_ = v * f;
  has_spare_ = true;
  return u * f;
}

namespace {

double draw(SplitMix64& rng, Innovations innovations) {
  return innovations == Innovations::gaussian ? rng.next_gaussian()
                                              : rng.next_uniform_unit_var();
}

int burn_in_length(double phi) {
  return static_cast<int>(std::ceil(200.0 + 10.0 / (1.0 - std::abs(phi))));
}

void check_causal(double phi, const char* who) {
  if (!(std::abs(phi) < 1.0)) {
    throw std::domain_error(std::string(who) + ": |phi| must be < 1, got " + std::to_string(phi));
  }
}

}  // namespace

TimeSeries gen_ar1(double phi, double sigma2, int T, std::uint64_t seed,
                   Innovations innovations) {
  check_causal(phi, "gen_ar1");
  if (!(sigma2 > 0.0)) throw std::domain_error("gen_ar1: sigma2 must be positive");
  if (T < 3) throw std::domain_error("gen_ar1: T must be at least 3");
  SplitMix64 rng(seed);
  const double sd = std::sqrt(sigma2);
  Eigen::VectorXd x(T);
  if (innovations == Innovations::gaussian) {
    // exact stationary start
    x[0] = std::sqrt(sigma2 / (1.0 - phi * phi)) * rng.next_gaussian();
  } else {
    // no closed-form stationary law; burn the transient off instead
    double state = 0.0;
    const int burn = burn_in_length(phi);
    for (int t = 0; t < burn; ++t) state = phi * state + sd * draw(rng, innovations);
    x[0] = state;
  }
  for (int t = 1; t < T; ++t) x[t] = phi * x[t - 1] + sd * draw(rng, innovations);
  return TimeSeries(std::move(x));
}

TimeSeries gen_arma(double phi, const Eigen::VectorXd& thetas, double sigma2, int T,
                    std::uint64_t seed, Innovations innovations) {
  check_causal(phi, "gen_arma");
  if (thetas.size() == 0) return gen_ar1(phi, sigma2, T, seed, innovations);
  if (!(sigma2 > 0.0)) throw std::domain_error("gen_arma: sigma2 must be positive");
  if (T < 3) throw std::domain_error("gen_arma: T must be at least 3");
  SplitMix64 rng(seed);
  const int q = static_cast<int>(thetas.size());
  const double sd = std::sqrt(sigma2);
  const int burn = burn_in_length(phi);
  Eigen::VectorXd eps = Eigen::VectorXd::Zero(q);  // ring of the last q innovations
  double state = 0.0;
  Eigen::VectorXd x(T);
  for (int t = -burn; t < T; ++t) {
    const double e = sd * draw(rng, innovations);
    double z = e;
    for (int j = 0; j < q; ++j) z += thetas[j] * eps[(((t - 1 - j) % q) + q) % q];
    state = phi * state + z;
    eps[((t % q) + q) % q] = e;
    if (t >= 0) x[t] = state;
  }
  return TimeSeries(std::move(x));
}

TimeSeries gen_gaussian_from_acvf(const Eigen::VectorXd& acvf, int T, std::uint64_t seed) {
  if (acvf.size() == 0) throw std::domain_error("gen_gaussian_from_acvf: empty autocovariance");
  if (T < 3) throw std::domain_error("gen_gaussian_from_acvf: T must be at least 3");
  const double gamma0 = acvf[0];
  if (!(gamma0 > 0.0)) {
    throw std::domain_error("gen_gaussian_from_acvf: not positive definite at order 0");
  }
  const double tol = gamma0 * 1e-10;
  auto g = [&](int lag) { return lag < acvf.size() ? acvf[lag] : 0.0; };

  SplitMix64 rng(seed);
  Eigen::VectorXd x(T);
  // Levinson-Durbin one-step innovations: phi holds the current prediction
  // coefficients, support the highest nonzero index (zero reflection
  // coefficients leave the array untouched).
  Eigen::VectorXd phi = Eigen::VectorXd::Zero(T);
  Eigen::VectorXd phi_prev(T);
  int support = 0;
  double v = gamma0;
  x[0] = std::sqrt(v) * rng.next_gaussian();
  for (int n = 1; n < T; ++n) {
    double num = g(n);
    for (int j = 1; j <= support; ++j) num -= phi[j] * g(n - j);
    const double kappa = num / v;
    const double v_next = v * (1.0 - kappa * kappa);
    if (std::abs(kappa) >= 1.0 || v_next <= tol) {
      throw std::domain_error("gen_gaussian_from_acvf: autocovariance not positive definite at order " +
                              std::to_string(n));
    }
    if (kappa != 0.0) {
      phi_prev.head(n) = phi.head(n);
      phi[n] = kappa;
      for (int j = 1; j < n; ++j) phi[j] = phi_prev[j] - kappa * phi_prev[n - j];
      support = n;
    }
    double pred = 0.0;
    for (int j = 1; j <= support; ++j) pred += phi[j] * x[n - j];
    v = v_next;
    x[n] = pred + std::sqrt(v) * rng.next_gaussian();
  }
  return TimeSeries(std::move(x));
}

TimeSeries gen_worstcase(double b, double gamma0, int T, std::uint64_t seed) {
  if (!(b > 0.0 && b <= 2.0)) {
    throw std::domain_error("gen_worstcase: b must lie in (0, 2], got " + std::to_string(b));
  }
  if (!(gamma0 > 0.0)) throw std::domain_error("gen_worstcase: gamma0 must be positive");
  if (T < 3) throw std::domain_error("gen_worstcase: T must be at least 3");
  SplitMix64 rng(seed);
  const double theta = std::acos(b / 2.0);
  const double scale = std::sqrt(gamma0);
  const double xi1 = rng.next_gaussian();
  const double xi2 = rng.next_gaussian();
  Eigen::VectorXd x(T);
  for (int i = 0; i < T; ++i) {
    const double t = static_cast<double>(1 + i);
    x[i] = scale * (xi1 * std::cos(t * theta) + xi2 * std::sin(t * theta));
  }
  return TimeSeries(std::move(x));
}

TimeSeries generate(const ProcessSpec& spec) {
  switch (spec.kind) {
    case ProcessKind::ar1:
      return gen_ar1(spec.phi, spec.sigma2, spec.T, spec.seed, spec.innovations);
    case ProcessKind::arma1q:
      return gen_arma(spec.phi, spec.thetas, spec.sigma2, spec.T, spec.seed, spec.innovations);
    case ProcessKind::gaussian_acvf:
      return gen_gaussian_from_acvf(spec.acvf, spec.T, spec.seed);
    case ProcessKind::worst_case:
      return gen_worstcase(spec.b, spec.gamma0, spec.T, spec.seed);
  }
  throw std::invalid_argument("generate: unknown process kind");
}

double worstcase_acvf(double b, double gamma0, int n) {
  if (!(b > 0.0 && b <= 2.0)) {
    throw std::domain_error("worstcase_acvf: b must lie in (0, 2], got " + std::to_string(b));
  }
  if (!(gamma0 > 0.0)) throw std::domain_error("worstcase_acvf: gamma0 must be positive");
  if (n < 0) throw std::domain_error("worstcase_acvf: lag must be non-negative");
  if (n == 0) return gamma0;
  double prev = gamma0;
  double cur = b / 2.0 * gamma0;
  for (int k = 2; k <= n; ++k) {
    const double next = b * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double coeff_extract(double b, int n) {
  if (n < 0) throw std::domain_error("coeff_extract: order must be non-negative");
  // Long division of (1 - (b/2)x) by (1 - bx + x^2) as formal power series.
  const double den[3] = {1.0, -b, 1.0};
  Eigen::VectorXd c(n + 1);
  for (int m = 0; m <= n; ++m) {
    double acc = m == 0 ? 1.0 : (m == 1 ? -b / 2.0 : 0.0);
    for (int j = 1; j <= std::min(m, 2); ++j) acc -= den[j] * c[m - j];
    c[m] = acc / den[0];
  }
  return c[n];
}

}  // namespace ssar
