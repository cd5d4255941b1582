#ifndef SSAR_LAMPERTI_HPP
#define SSAR_LAMPERTI_HPP

#include "ssar/types.hpp"

namespace ssar {

/// Values Y_{e^t} of an H-self-similar path on a contiguous integer index
/// range; values[i] corresponds to t = origin + i.
struct SelfSimilarPath {
  Eigen::VectorXd values;
  int origin = 0;
  double H = 0.0;

  int length() const { return static_cast<int>(values.size()); }
};

/// A strictly-stationary-increment path G anchored at G_0 = 0.
struct IncrementPath {
  Eigen::VectorXd values;
  int origin = 0;

  int length() const { return static_cast<int>(values.size()); }
  double at(int t) const { return values[t - origin]; }
};

/// Discrete Lamperti transform (L_H X)_{e^t} = e^{tH} X_t. H <= 0 is a
/// domain error.
SelfSimilarPath lamperti_forward(const TimeSeries& series, double H);

/// Inverse transform (L_H^{-1} Y)_t = e^{-tH} Y_{e^t}.
TimeSeries lamperti_inverse(const SelfSimilarPath& path);

/// Increment process built from a self-similar path:
///   G_t = sum_{k=1}^{t} e^{-kH} Delta_k Y        (t >= 1)
///   G_0 = 0
///   G_t = -sum_{k=t+1}^{0} e^{-kH} Delta_k Y     (t <= -1)
/// which satisfies Delta_t G = e^{-tH} Delta_t Y at every interior index.
/// The path must span t = 0 and contain at least two points.
IncrementPath construct_G(const SelfSimilarPath& path);

/// Max over t of | Delta_t X - (e^{-H} - 1) X_{t-1} - Delta_t G |, the
/// residual of the Langevin-type difference equation. Index ranges must match.
double verify_langevin(const TimeSeries& series, double H, const IncrementPath& g);

}  // namespace ssar

#endif  // SSAR_LAMPERTI_HPP
