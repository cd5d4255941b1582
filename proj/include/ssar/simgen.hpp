#ifndef SSAR_SIMGEN_HPP
#define SSAR_SIMGEN_HPP

#include <cstdint>

#include "ssar/types.hpp"

namespace ssar {

/// Counter-based 64-bit generator (splitmix-style). Replicate i of a Monte
/// Carlo run draws from an independent stream seeded with mix(seed, i), so
/// parallel and serial execution consume identical randomness.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return finalize(state_);
  }

  /// Uniform on [0,1) with 53 random bits.
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Standard Gaussian via the polar method; the spare deviate is cached.
  double next_gaussian();

  /// Uniform on (-sqrt(3), sqrt(3)): zero mean, unit variance.
  double next_uniform_unit_var() { return (2.0 * next_unit() - 1.0) * 1.7320508075688772; }

  static std::uint64_t finalize(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Substream seed for the index-th replicate of a run.
  static std::uint64_t mix(std::uint64_t seed, std::uint64_t index) {
    return finalize(seed + (index + 1) * 0x9E3779B97F4A7C15ULL);
  }

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

enum class ProcessKind { ar1, arma1q, gaussian_acvf, worst_case };
enum class Innovations { gaussian, uniform };

/// Parameters of one simulated process; unused fields are ignored per kind.
struct ProcessSpec {
  ProcessKind kind = ProcessKind::ar1;
  double phi = 0.5;
  Eigen::VectorXd thetas;      // arma1q
  double sigma2 = 1.0;
  double b = 2.0;              // worst_case, must lie in (0, 2]
  double gamma0 = 1.0;         // worst_case
  Eigen::VectorXd acvf;        // gaussian_acvf
  int T = 0;
  std::uint64_t seed = 0;
  Innovations innovations = Innovations::gaussian;
};

/// AR(1) sample with exact stationary Gaussian start X_1 ~ N(0, sigma2/(1-phi^2)).
/// Uniform innovations fall back to a burn-in start. |phi| >= 1 is rejected.
TimeSeries gen_ar1(double phi, double sigma2, int T, std::uint64_t seed,
                   Innovations innovations = Innovations::gaussian);

/// ARMA(1,q) sample started from zero state and burnt in for at least
/// 200 + 10/(1-|phi|) steps. With q = 0 this delegates to gen_ar1 so the two
/// generators produce identical paths for the same seed.
TimeSeries gen_arma(double phi, const Eigen::VectorXd& thetas, double sigma2, int T,
                    std::uint64_t seed, Innovations innovations = Innovations::gaussian);

/// Exact Gaussian sample with the supplied autocovariance (lags beyond the
/// vector are taken as zero), drawn through the Levinson-Durbin innovations
/// recursion. Throws std::domain_error naming the failing order if the
/// autocovariance is not positive definite to tolerance.
TimeSeries gen_gaussian_from_acvf(const Eigen::VectorXd& acvf, int T, std::uint64_t seed);

/// Gaussian process with autocovariance gamma0 * cos(n*theta), b = 2 cos(theta):
/// X_t = sqrt(gamma0) (xi_1 cos(t theta) + xi_2 sin(t theta)). At b = 2 the
/// path is the degenerate constant X_t = X_0. Note the family is not ergodic
/// for b < 2: time averages converge to a random multiple of the acvf, so
/// moment checks must be ensemble-based.
TimeSeries gen_worstcase(double b, double gamma0, int T, std::uint64_t seed);

/// Dispatch on spec.kind.
TimeSeries generate(const ProcessSpec& spec);

/// Autocovariance of the constant-ratio family via the recursion
/// gamma(n) = b gamma(n-1) - gamma(n-2), gamma(1) = (b/2) gamma(0).
/// b outside (0, 2] is rejected (b > 2 does not define an autocovariance).
double worstcase_acvf(double b, double gamma0, int n);

/// n-th power-series coefficient of (1 - (b/2)x) / (x^2 - bx + 1), computed by
/// iterative polynomial long division. Independent of worstcase_acvf's
/// recursion; gamma(n) = gamma(0) * coeff_extract(b, n).
double coeff_extract(double b, int n);

}  // namespace ssar

#endif  // SSAR_SIMGEN_HPP
