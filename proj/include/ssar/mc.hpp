#ifndef SSAR_MC_HPP
#define SSAR_MC_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ssar/simgen.hpp"
#include "ssar/types.hpp"

namespace ssar {

/// Per-cell aggregate of a Monte Carlo column of estimates.
struct McSummary {
  double max_value = 0.0;
  double min_value = 0.0;
  double mean = 0.0;
  double median = 0.0;
  double sd = 0.0;
  double mad = 0.0;       // 1.4826 * median absolute deviation
  double skewness = 0.0;  // m3 / m2^{3/2}, 0 for a constant sequence
};

/// Summary statistics over at least two estimates; sd uses denominator R-1,
/// the central moments for skewness use R.
McSummary summary_stats(const std::vector<double>& estimates);

/// Equal-width histogram over [0,1]; returns bins+1 edges and the counts,
/// which always sum to the sample size. bins < 1 is a domain error.
std::pair<Eigen::VectorXd, Eigen::VectorXi> histogram(const std::vector<double>& estimates,
                                                      int bins);

/// Process template for a grid run; phi is taken from the grid.
struct GridProcess {
  ProcessKind kind = ProcessKind::ar1;  // ar1 or arma1q
  Eigen::VectorXd thetas;
  double sigma2 = 1.0;
  Innovations innovations = Innovations::gaussian;
};

struct GridSpec {
  GridProcess process;
  std::vector<double> phis;
  std::vector<int> lags;
  std::vector<int> lengths;
  int replicates = 1000;
  std::uint64_t seed = 0;
  int threads = 1;
  int histogram_bins = 30;
};

struct CellResult {
  double phi = 0.0;
  int lag = 0;
  int T = 0;
  double mean = 0.0;
  int failures = 0;
  std::vector<double> estimates;  // successful replicates, in replicate order
  McSummary summary;              // valid when has_summary
  bool has_summary = false;
  Eigen::VectorXd bin_edges;
  Eigen::VectorXi bin_counts;
};

struct GridResult {
  GridSpec spec;
  std::vector<CellResult> cells;
};

/// Point estimate used throughout the grids: the minus-root closed form
///   (gamma_hat(N+1) + gamma_hat(N-1) - sqrt(g) 1_{g>0}) / (2 gamma_hat(N))
/// with the supplied r(N), clamped to [0,1]. Autocovariances are sample-mean
/// centered with denominator T. Returns nullopt when gamma_hat(N) = 0.
std::optional<double> grid_point_estimate(const TimeSeries& series, int N, double r_n);

/// Runs the full (phi, lag, T) grid with `replicates` series per cell.
/// Replicate j of cell c draws from the stream SplitMix64::mix(mix(seed, c), j),
/// so results are identical for any thread count and any execution order.
/// The assumed r(N) per cell is the true noise autocovariance of the
/// generating process: zero for AR(1), the MA(q) autocovariance for ARMA(1,q).
/// A replicate whose estimate is undefined is counted in `failures`.
GridResult run_grid(const GridSpec& spec);

// Table writers. Numbers carry 17 significant digits in the CSV outputs.
void write_means_csv(const GridResult& result, std::ostream& out);
void write_means_text(const GridResult& result, std::ostream& out);
void write_summary_csv(const GridResult& result, std::ostream& out);
void write_histograms_csv(const GridResult& result, std::ostream& out);

}  // namespace ssar

#endif  // SSAR_MC_HPP
