#include "ssar/mc.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <string>
#include <thread>

#include "ssar/acvf.hpp"
#include "ssar/estimator.hpp"

namespace ssar {

McSummary summary_stats(const std::vector<double>& estimates) {
  const int n = static_cast<int>(estimates.size());
  if (n < 2) throw std::domain_error("summary_stats: need at least 2 estimates for sd/skewness");
  McSummary s;
  std::vector<double> sorted = estimates;
  std::sort(sorted.begin(), sorted.end());
  s.min_value = sorted.front();
  s.max_value = sorted.back();
  s.median = n % 2 == 1 ? sorted[n / 2] : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
  double mean = 0.0;
  for (double v : estimates) mean += v;
  mean /= n;
  s.mean = mean;
  double m2 = 0.0, m3 = 0.0;
  for (double v : estimates) {
    const double d = v - mean;
    m2 += d * d;
    m3 += d * d * d;
  }
  s.sd = std::sqrt(m2 / (n - 1));
  m2 /= n;
  m3 /= n;
  s.skewness = m2 > 0.0 ? m3 / std::pow(m2, 1.5) : 0.0;
  std::vector<double> dev(sorted.size());
  for (int i = 0; i < n; ++i) dev[i] = std::abs(estimates[i] - s.median);
  std::sort(dev.begin(), dev.end());
  const double raw_mad = n % 2 == 1 ? dev[n / 2] : 0.5 * (dev[n / 2 - 1] + dev[n / 2]);
  s.mad = 1.4826 * raw_mad;
  return s;
}

std::pair<Eigen::VectorXd, Eigen::VectorXi> histogram(const std::vector<double>& estimates,
                                                      int bins) {
  if (bins < 1) throw std::domain_error("histogram: need at least one bin");
  Eigen::VectorXd edges(bins + 1);
  for (int i = 0; i <= bins; ++i) edges[i] = static_cast<double>(i) / bins;
  Eigen::VectorXi counts = Eigen::VectorXi::Zero(bins);
  for (double v : estimates) {
    int idx = static_cast<int>(std::floor(v * bins));
    idx = std::min(bins - 1, std::max(0, idx));
    ++counts[idx];
  }
  return {edges, counts};
}

namespace {

// Centered sample autocovariance at one lag, denominator T, on a raw buffer
// whose mean has already been removed.
double acvf_at(const double* x, int T, int lag) {
  const int n = T - lag;
  const Eigen::Map<const Eigen::VectorXd> head(x, n);
  const Eigen::Map<const Eigen::VectorXd> tail(x + lag, n);
  return head.dot(tail) / static_cast<double>(T);
}

std::optional<double> point_estimate_centered(double* x, int T, int N, double r_n) {
  Eigen::Map<Eigen::VectorXd> v(x, T);
  const double mean = v.mean();
  v.array() -= mean;
  const double g_nm1 = acvf_at(x, T, N - 1);
  const double g_n = acvf_at(x, T, N);
  const double g_np1 = acvf_at(x, T, N + 1);
  if (g_n == 0.0) return std::nullopt;
  // the minus-root closed form, applied verbatim to every replicate
  const QuadraticRoots roots = quadratic_roots(g_np1, g_n, g_nm1, r_n);
  return std::min(1.0, std::max(0.0, roots.minus));
}

// Allocation-free generation into a caller-owned buffer; mirrors gen_ar1 and
// gen_arma with Gaussian innovations.
void gen_ar1_into(double phi, double sigma2, int T, std::uint64_t seed, double* x) {
  SplitMix64 rng(seed);
  const double sd = std::sqrt(sigma2);
  x[0] = std::sqrt(sigma2 / (1.0 - phi * phi)) * rng.next_gaussian();
  for (int t = 1; t < T; ++t) x[t] = phi * x[t - 1] + sd * rng.next_gaussian();
}

void gen_arma_into(double phi, const Eigen::VectorXd& thetas, double sigma2, int T,
                   std::uint64_t seed, double* x, double* eps_ring) {
  SplitMix64 rng(seed);
  const int q = static_cast<int>(thetas.size());
  const double sd = std::sqrt(sigma2);
  const int burn = static_cast<int>(std::ceil(200.0 + 10.0 / (1.0 - std::abs(phi))));
  for (int j = 0; j < q; ++j) eps_ring[j] = 0.0;
  double state = 0.0;
  for (int t = -burn; t < T; ++t) {
    const double e = sd * rng.next_gaussian();
    double z = e;
    for (int j = 0; j < q; ++j) z += thetas[j] * eps_ring[(((t - 1 - j) % q) + q) % q];
    state = phi * state + z;
    eps_ring[((t % q) + q) % q] = e;
    if (t >= 0) x[t] = state;
  }
}

}  // namespace

std::optional<double> grid_point_estimate(const TimeSeries& series, int N, double r_n) {
  if (N < 1 || N + 1 > series.length() - 2) {
    throw std::domain_error("grid_point_estimate: lag out of range for the series");
  }
  Eigen::VectorXd copy = series.values;
  return point_estimate_centered(copy.data(), series.length(), N, r_n);
}

GridResult run_grid(const GridSpec& spec) {
  if (spec.replicates < 1) throw std::domain_error("run_grid: need at least one replicate");
  if (spec.phis.empty() || spec.lags.empty() || spec.lengths.empty()) {
    throw std::domain_error("run_grid: phi, lag and T grids must be non-empty");
  }
  if (spec.process.kind != ProcessKind::ar1 && spec.process.kind != ProcessKind::arma1q) {
    throw std::invalid_argument("run_grid: grids support the ar1 and arma1q kinds");
  }
  for (double phi : spec.phis) {
    if (!(std::abs(phi) < 1.0)) throw std::domain_error("run_grid: |phi| must be < 1");
  }
  int max_T = 0;
  for (int T : spec.lengths) max_T = std::max(max_T, T);
  for (int T : spec.lengths) {
    for (int N : spec.lags) {
      if (N < 1 || N + 1 > T - 2) {
        throw std::domain_error("run_grid: lag " + std::to_string(N) +
                                " out of range for T = " + std::to_string(T));
      }
    }
  }

  // Assumed noise autocovariance per lag: the true value for the generating
  // process (zero for AR(1) at every positive lag, the MA(q) autocovariance
  // for ARMA(1,q)).
  const int q = static_cast<int>(spec.process.thetas.size());
  std::vector<double> r_of_lag;
  {
    int max_lag = 0;
    for (int N : spec.lags) max_lag = std::max(max_lag, N);
    r_of_lag.assign(max_lag + 1, 0.0);
    if (spec.process.kind == ProcessKind::arma1q && q > 0) {
      for (int n = 0; n <= max_lag; ++n) {
        r_of_lag[n] = arma_true_acvf(0.0, spec.process.thetas, spec.process.sigma2, n);
      }
    }
  }

  const int n_phi = static_cast<int>(spec.phis.size());
  const int n_lag = static_cast<int>(spec.lags.size());
  const int n_len = static_cast<int>(spec.lengths.size());
  const long n_cells = static_cast<long>(n_phi) * n_lag * n_len;
  const long total = n_cells * spec.replicates;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  std::vector<double> raw(static_cast<std::size_t>(total), nan);

  const int threads = std::max(1, spec.threads);
  std::atomic<long> next{0};
  auto worker = [&]() {
    Eigen::VectorXd buffer(max_T);
    Eigen::VectorXd ring(std::max(1, q));
    for (;;) {
      const long w = next.fetch_add(1, std::memory_order_relaxed);
      if (w >= total) break;
      const long cell = w / spec.replicates;
      const long rep = w % spec.replicates;
      const int i_phi = static_cast<int>(cell / (n_lag * n_len));
      const int i_lag = static_cast<int>((cell / n_len) % n_lag);
      const int i_len = static_cast<int>(cell % n_len);
      const double phi = spec.phis[i_phi];
      const int N = spec.lags[i_lag];
      const int T = spec.lengths[i_len];
      const std::uint64_t s =
          SplitMix64::mix(SplitMix64::mix(spec.seed, static_cast<std::uint64_t>(cell)),
                          static_cast<std::uint64_t>(rep));
      if (spec.process.kind == ProcessKind::ar1 &&
          spec.process.innovations == Innovations::gaussian) {
        gen_ar1_into(phi, spec.process.sigma2, T, s, buffer.data());
      } else if (spec.process.kind == ProcessKind::arma1q && q > 0 &&
                 spec.process.innovations == Innovations::gaussian) {
        gen_arma_into(phi, spec.process.thetas, spec.process.sigma2, T, s, buffer.data(),
                      ring.data());
      } else {
        ProcessSpec ps;
        ps.kind = spec.process.kind;
        ps.phi = phi;
        ps.thetas = spec.process.thetas;
        ps.sigma2 = spec.process.sigma2;
        ps.innovations = spec.process.innovations;
        ps.T = T;
        ps.seed = s;
        buffer.head(T) = generate(ps).values;
      }
      const auto est = point_estimate_centered(buffer.data(), T, N, r_of_lag[N]);
      if (est) raw[w] = *est;
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  GridResult result;
  result.spec = spec;
  result.cells.reserve(n_cells);
  for (long cell = 0; cell < n_cells; ++cell) {
    CellResult cr;
    cr.phi = spec.phis[cell / (n_lag * n_len)];
    cr.lag = spec.lags[(cell / n_len) % n_lag];
    cr.T = spec.lengths[cell % n_len];
    cr.estimates.reserve(spec.replicates);
    for (long rep = 0; rep < spec.replicates; ++rep) {
      const double v = raw[cell * spec.replicates + rep];
      if (std::isnan(v)) {
        ++cr.failures;
      } else {
        cr.estimates.push_back(v);
      }
    }
    double mean = 0.0;
    for (double v : cr.estimates) mean += v;
    cr.mean = cr.estimates.empty() ? nan : mean / cr.estimates.size();
    if (cr.estimates.size() >= 2) {
      cr.summary = summary_stats(cr.estimates);
      cr.has_summary = true;
    }
    if (!cr.estimates.empty()) {
      std::tie(cr.bin_edges, cr.bin_counts) = histogram(cr.estimates, spec.histogram_bins);
    }
    result.cells.push_back(std::move(cr));
  }
  return result;
}

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

const char* kind_name(ProcessKind kind) {
  switch (kind) {
    case ProcessKind::ar1: return "ar1";
    case ProcessKind::arma1q: return "arma1q";
    case ProcessKind::gaussian_acvf: return "gaussian-acvf";
    case ProcessKind::worst_case: return "worst-case";
  }
  return "?";
}

}  // namespace

void write_means_csv(const GridResult& result, std::ostream& out) {
  out << "process,phi,lag,T,mean,failures\n";
  for (const auto& cell : result.cells) {
    out << kind_name(result.spec.process.kind) << ',' << fmt17(cell.phi) << ',' << cell.lag << ','
        << cell.T << ',' << fmt17(cell.mean) << ',' << cell.failures << '\n';
  }
}

void write_means_text(const GridResult& result, std::ostream& out) {
  for (int T : result.spec.lengths) {
    out << "T = " << T << " (" << kind_name(result.spec.process.kind)
        << ", R = " << result.spec.replicates << ")\n";
    char buf[32];
    out << "  N\\phi";
    for (double phi : result.spec.phis) {
      std::snprintf(buf, sizeof(buf), "%8.2f", phi);
      out << buf;
    }
    out << '\n';
    for (int N : result.spec.lags) {
      std::snprintf(buf, sizeof(buf), "%5d  ", N);
      out << buf;
      for (double phi : result.spec.phis) {
        for (const auto& cell : result.cells) {
          if (cell.T == T && cell.lag == N && cell.phi == phi) {
            std::snprintf(buf, sizeof(buf), "%8.2f", cell.mean);
            out << buf;
            break;
          }
        }
      }
      out << '\n';
    }
    out << '\n';
  }
}

void write_summary_csv(const GridResult& result, std::ostream& out) {
  out << "process,phi,lag,T,max,min,mean,median,sd,mad,skewness,failures\n";
  for (const auto& cell : result.cells) {
    out << kind_name(result.spec.process.kind) << ',' << fmt17(cell.phi) << ',' << cell.lag << ','
        << cell.T << ',';
    if (cell.has_summary) {
      const auto& s = cell.summary;
      out << fmt17(s.max_value) << ',' << fmt17(s.min_value) << ',' << fmt17(s.mean) << ','
          << fmt17(s.median) << ',' << fmt17(s.sd) << ',' << fmt17(s.mad) << ','
          << fmt17(s.skewness);
    } else {
      out << "nan,nan," << fmt17(cell.mean) << ",nan,nan,nan,nan";
    }
    out << ',' << cell.failures << '\n';
  }
}

void write_histograms_csv(const GridResult& result, std::ostream& out) {
  out << "process,phi,lag,T,bin_left,bin_right,count\n";
  for (const auto& cell : result.cells) {
    for (int i = 0; i < cell.bin_counts.size(); ++i) {
      out << kind_name(result.spec.process.kind) << ',' << fmt17(cell.phi) << ',' << cell.lag
          << ',' << cell.T << ',' << fmt17(cell.bin_edges[i]) << ',' << fmt17(cell.bin_edges[i + 1])
          << ',' << cell.bin_counts[i] << '\n';
    }
  }
}

}  // namespace ssar
