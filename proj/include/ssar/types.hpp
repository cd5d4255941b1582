#ifndef SSAR_TYPES_HPP
#define SSAR_TYPES_HPP

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace ssar {

/// Thrown when the chosen lag carries no information about the AR(1)
/// parameter (gamma(N) ~ 0 together with r(N) = 0).
class uninformative_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Thrown when the roots obtained at two lags share no common value within
/// tolerance, which signals a misspecified noise autocovariance.
class inconsistency_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Thrown when a hypothesis test cannot be carried out, e.g. because the
/// plug-in variance of the statistic is degenerate.
class test_unavailable_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An observed real-valued series X_{t0}, X_{t0+1}, ..., equally spaced.
/// `origin` is the integer time index of values[0]; it only matters for the
/// Lamperti transform machinery, estimation ignores it.
struct TimeSeries {
  Eigen::VectorXd values;
  int origin = 1;

  TimeSeries() = default;
  explicit TimeSeries(Eigen::VectorXd v, int origin_index = 1)
      : values(std::move(v)), origin(origin_index) {
    if (values.size() < 3) {
      throw std::invalid_argument("TimeSeries: need at least 3 observations, got " +
                                  std::to_string(values.size()));
    }
    if (!values.allFinite()) {
      throw std::invalid_argument("TimeSeries: all observations must be finite");
    }
  }

  int length() const { return static_cast<int>(values.size()); }
};

}  // namespace ssar

#endif  // SSAR_TYPES_HPP
