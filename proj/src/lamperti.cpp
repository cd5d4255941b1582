#include "ssar/lamperti.hpp"

#include <cmath>

namespace ssar {

SelfSimilarPath lamperti_forward(const TimeSeries& series, double H) {
  if (!(H > 0.0)) throw std::domain_error("lamperti_forward: H must be positive");
  SelfSimilarPath path;
  path.origin = series.origin;
  path.H = H;
  path.values.resize(series.length());
  for (int i = 0; i < series.length(); ++i) {
    const double t = static_cast<double>(series.origin + i);
    path.values[i] = std::exp(t * H) * series.values[i];
  }
  return path;
}

TimeSeries lamperti_inverse(const SelfSimilarPath& path) {
  if (!(path.H > 0.0)) throw std::domain_error("lamperti_inverse: H must be positive");
  Eigen::VectorXd x(path.length());
  for (int i = 0; i < path.length(); ++i) {
    const double t = static_cast<double>(path.origin + i);
    x[i] = std::exp(-t * path.H) * path.values[i];
  }
  return TimeSeries(std::move(x), path.origin);
}

IncrementPath construct_G(const SelfSimilarPath& path) {
  const int n = path.length();
  if (n < 2) throw std::domain_error("construct_G: path needs at least 2 points");
  const int lo = path.origin;
  const int hi = path.origin + n - 1;
  if (lo > 0 || hi < 0) {
    throw std::domain_error("construct_G: the index range must span t = 0");
  }
  IncrementPath g;
  g.origin = lo;
  g.values = Eigen::VectorXd::Zero(n);
  auto weighted_delta = [&](int t) {
    // e^{-tH} Delta_t Y
    return std::exp(-static_cast<double>(t) * path.H) *
           (path.values[t - lo] - path.values[t - 1 - lo]);
  };
  for (int t = 1; t <= hi; ++t) g.values[t - lo] = g.values[t - 1 - lo] + weighted_delta(t);
  for (int t = -1; t >= lo; --t) g.values[t - lo] = g.values[t + 1 - lo] - weighted_delta(t + 1);
  return g;
}

double verify_langevin(const TimeSeries& series, double H, const IncrementPath& g) {
  if (series.origin != g.origin || series.length() != g.length()) {
    throw std::domain_error("verify_langevin: index ranges of X and G must match");
  }
  const double coef = std::exp(-H) - 1.0;
  double worst = 0.0;
  for (int i = 1; i < series.length(); ++i) {
    const double dx = series.values[i] - series.values[i - 1];
    const double dg = g.values[i] - g.values[i - 1];
    worst = std::max(worst, std::abs(dx - coef * series.values[i - 1] - dg));
  }
  return worst;
}

}  // namespace ssar
