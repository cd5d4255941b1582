#ifndef SSAR_NOISE_HPP
#define SSAR_NOISE_HPP

#include "ssar/types.hpp"

namespace ssar {

/// Noise autocovariance implied by the quadratic equation at lag n:
///   r(n) = phi^2 gamma(n) - phi (gamma(n+1) + gamma(n-1)) + gamma(n),
/// with gamma(-1) = gamma(1) at n = 0. gamma holds gamma(0..K); n+1 > K is a
/// domain error.
double recover_noise_acvf(double phi, const Eigen::VectorXd& gamma, int n);

/// Closed-form noise autocovariance cov(Z_t, Z_0), t >= 1, when the observed
/// process is AR(1) with negative parameter varphi and the representation
/// uses phi = e^{-H}:
///   varphi^{t-2} (varphi - e^{-H}) sigma2 (varphi + (varphi - e^{-H}) varphi^2/(1-varphi^2)).
double negative_ar1_noise_acvf(double varphi, double H, double sigma2, int t);

/// | gamma(k) - phi gamma(k-1) - sum_{i=0}^{L} phi^i r(k+i) |, the truncated
/// residual of the series identity linking gamma and r; a model-consistency
/// oracle. Entries of r beyond the supplied vector count as zero.
double series_identity_residual(double phi, const Eigen::VectorXd& gamma,
                                const Eigen::VectorXd& r, int k, int truncation);

}  // namespace ssar

#endif  // SSAR_NOISE_HPP
