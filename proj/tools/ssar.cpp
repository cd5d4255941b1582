// Command-line front door: estimation, testing, simulation, noise recovery
// and Monte Carlo table generation for the AR(1) characterization toolkit.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ssar/acvf.hpp"
#include "ssar/estimator.hpp"
#include "ssar/hypothesis.hpp"
#include "ssar/mc.hpp"
#include "ssar/noise.hpp"
#include "ssar/simgen.hpp"

namespace {

// exit codes: 0 ok, 1 usage, 2 uninformative data, 3 ambiguity, 4 I/O
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitUninformative = 2;
constexpr int kExitAmbiguous = 3;
constexpr int kExitIo = 4;

struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt17(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// JSON has no NaN literal; unset fields come out as null.
std::string jnum(double v) { return std::isfinite(v) ? fmt17(v) : "null"; }

std::string jbool(bool v) { return v ? "true" : "false"; }

bool parse_double(const std::string& text, double& out) {
  const char* begin = text.c_str();
  char* end = nullptr;
  out = std::strtod(begin, &end);
  if (end == begin) return false;
  while (*end == ' ' || *end == '\t' || *end == '\r' || *end == ',') ++end;
  return *end == '\0';
}

// One value per line; a single non-numeric first line is treated as a header.
std::vector<double> read_value_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open input file: " + path);
  std::vector<double> values;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string trimmed = line;
    while (!trimmed.empty() && (trimmed.back() == '\r' || trimmed.back() == ' ')) {
      trimmed.pop_back();
    }
    if (trimmed.empty()) continue;
    double v;
    if (!parse_double(trimmed, v)) {
      if (line_no == 1 && values.empty()) continue;  // header row
      throw io_error(path + ": line " + std::to_string(line_no) + ": cannot parse '" + trimmed +
                     "'");
    }
    values.push_back(v);
  }
  if (values.empty()) throw io_error(path + ": no data rows");
  return values;
}

ssar::TimeSeries read_series(const std::string& path) {
  const std::vector<double> values = read_value_file(path);
  Eigen::VectorXd x(static_cast<int>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) x[static_cast<int>(i)] = values[i];
  try {
    return ssar::TimeSeries(std::move(x));
  } catch (const std::invalid_argument& e) {
    throw io_error(path + ": " + e.what());
  }
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw io_error("cannot open output file: " + path);
  return out;
}

std::string test_json(const ssar::TestResult& tr) {
  std::ostringstream os;
  os << "{\"null\":\"" << to_string(tr.null_hypothesis) << "\""
     << ",\"statistic\":" << jnum(tr.statistic) << ",\"std_error\":" << jnum(tr.std_error)
     << ",\"p_value\":" << jnum(tr.p_value) << ",\"alternative\":\"" << to_string(tr.alternative)
     << "\"" << ",\"alpha\":" << jnum(tr.alpha) << ",\"reject\":" << jbool(tr.reject) << "}";
  return os.str();
}

// ---------- subcommand options ----------

struct AcvfArgs {
  std::string input;
  int max_lag = 20;
  std::string centering = "sample-mean";
  std::string denominator = "T";
  double rate_exponent = 0.5;
};

struct EstimateArgs {
  std::string input;
  int lag = 1;
  double r = 0.0;
  std::string r2;  // "lag:value"
  double level = 0.95;
  double rate_exponent = 0.5;
  int max_lag = 0;
};

struct SimulateArgs {
  std::string kind;
  double phi = 0.5;
  std::vector<double> thetas;
  double sigma2 = 1.0;
  double b = 2.0;
  double gamma0 = 1.0;
  std::string acvf_file;
  int length = 0;
  std::uint64_t seed = 0;
  std::string innovations = "gaussian";
  std::string output;
};

struct TestArgs {
  std::string input;
  std::string which;
  int lag = 1;
  int k = 1;
  double r = 0.0;
  double r2 = 0.0;
  bool r_set = false;
  bool r2_set = false;
  double alpha = 0.05;
  double rate_exponent = 0.5;
};

struct NoiseArgs {
  std::string input;
  double phi = 0.5;
  int max_lag = 10;
  std::string input_kind = "series";
};

struct McArgs {
  std::string process;
  std::string grid_file;
  int reps = 1000;
  std::uint64_t seed = 0;
  int threads = 0;
  std::string output;
};

ssar::AcvfConfig make_acvf_config(const std::string& centering, const std::string& denominator,
                                  int max_lag) {
  ssar::AcvfConfig cfg;
  cfg.max_lag = max_lag;
  if (centering == "none") {
    cfg.centering = ssar::Centering::none;
  } else if (centering == "sample-mean") {
    cfg.centering = ssar::Centering::sample_mean;
  } else {
    throw CLI::ValidationError("--centering must be 'none' or 'sample-mean'");
  }
  if (denominator == "T") {
    cfg.denominator = ssar::Denominator::by_T;
  } else if (denominator == "T-n-1") {
    cfg.denominator = ssar::Denominator::by_T_minus_lag_minus_1;
  } else {
    throw CLI::ValidationError("--denominator must be 'T' or 'T-n-1'");
  }
  return cfg;
}

int run_acvf(const AcvfArgs& args) {
  const ssar::TimeSeries series = read_series(args.input);
  const int T = series.length();
  const int K = std::min(args.max_lag, T - 2);
  const ssar::AcvfConfig cfg = make_acvf_config(args.centering, args.denominator, K);
  const ssar::AcvfEstimate est = ssar::acvf_vector(series, cfg);
  const double rate = std::pow(static_cast<double>(T), args.rate_exponent);
  std::cout << "lag,gamma_hat,se\n";
  for (int n = 0; n <= K; ++n) {
    const int m = ssar::default_bartlett_truncation(T, K, n);
    const double var = ssar::bartlett_sigma(est.gamma, n, n, m);
    const double se = var > 0.0 ? std::sqrt(var) / rate : 0.0;
    std::cout << n << ',' << fmt17(est.gamma[n]) << ',' << fmt17(se) << '\n';
  }
  return kExitOk;
}

int run_estimate(const EstimateArgs& args) {
  const ssar::TimeSeries series = read_series(args.input);
  ssar::NoiseSpec noise;
  noise.entries[args.lag] = args.r;
  bool have_second = false;
  if (!args.r2.empty()) {
    const auto colon = args.r2.find(':');
    double value;
    int lag2 = -1;
    if (colon != std::string::npos) {
      try {
        lag2 = std::stoi(args.r2.substr(0, colon));
      } catch (...) {
        lag2 = -1;
      }
    }
    if (colon == std::string::npos || lag2 < 0 ||
        !parse_double(args.r2.substr(colon + 1), value)) {
      throw CLI::ValidationError("--r2 must look like LAG:VALUE, e.g. 5:0.0");
    }
    noise.entries[lag2] = value;
    have_second = true;
  }
  ssar::EstimateConfig cfg;
  cfg.level = args.level;
  cfg.rate_exponent = args.rate_exponent;
  cfg.acvf.max_lag = args.max_lag;
  std::vector<ssar::TestResult> tests;
  const ssar::PhiEstimate est = ssar::estimate(series, args.lag, noise, cfg, &tests);

  std::ostringstream os;
  os << "{\"schema_version\":1"
     << ",\"phi\":" << jnum(est.phi) << ",\"phi_raw\":" << jnum(est.phi_raw) << ",\"formula\":\""
     << to_string(est.formula) << "\"" << ",\"clamped\":" << jbool(est.clamped)
     << ",\"variance\":" << jnum(est.variance)
     << ",\"std_error\":" << jnum(std::sqrt(std::max(est.variance, 0.0)) /
                                  std::pow(static_cast<double>(series.length()),
                                           args.rate_exponent))
     << ",\"ci_low\":" << jnum(est.ci_low) << ",\"ci_high\":" << jnum(est.ci_high)
     << ",\"ci_low_reported\":" << jnum(std::max(0.0, est.ci_low))
     << ",\"ci_high_reported\":" << jnum(std::min(1.0, est.ci_high))
     << ",\"ambiguous\":" << jbool(est.ambiguous);
  if (est.ambiguous) {
    os << ",\"candidates\":[" << jnum(est.candidate_plus) << ',' << jnum(est.candidate_minus)
       << ']';
  } else {
    os << ",\"candidates\":null";
  }
  os << ",\"lag\":" << est.lag << ",\"level\":" << jnum(args.level)
     << ",\"rate_exponent\":" << jnum(args.rate_exponent) << ",\"T\":" << series.length()
     << ",\"tests\":[";
  for (std::size_t i = 0; i < tests.size(); ++i) {
    if (i) os << ',';
    os << test_json(tests[i]);
  }
  os << "]}";
  std::cout << os.str() << '\n';
  (void)have_second;  // a second value that fails to separate the roots still exits 3
  return est.ambiguous ? kExitAmbiguous : kExitOk;
}

int run_simulate(const SimulateArgs& args) {
  ssar::ProcessSpec spec;
  spec.T = args.length;
  spec.seed = args.seed;
  spec.phi = args.phi;
  spec.sigma2 = args.sigma2;
  spec.b = args.b;
  spec.gamma0 = args.gamma0;
  if (args.innovations == "gaussian") {
    spec.innovations = ssar::Innovations::gaussian;
  } else if (args.innovations == "uniform") {
    spec.innovations = ssar::Innovations::uniform;
  } else {
    throw CLI::ValidationError("--innovations must be 'gaussian' or 'uniform'");
  }
  if (args.kind == "ar1") {
    spec.kind = ssar::ProcessKind::ar1;
  } else if (args.kind == "arma1q") {
    spec.kind = ssar::ProcessKind::arma1q;
    std::vector<double> thetas = args.thetas;
    if (thetas.empty()) thetas = {0.8, 0.3};  // default MA parameters
    spec.thetas.resize(static_cast<int>(thetas.size()));
    for (std::size_t i = 0; i < thetas.size(); ++i) spec.thetas[static_cast<int>(i)] = thetas[i];
  } else if (args.kind == "gaussian-acvf") {
    spec.kind = ssar::ProcessKind::gaussian_acvf;
    if (args.acvf_file.empty()) {
      throw CLI::ValidationError("--kind gaussian-acvf needs --acvf FILE");
    }
    const std::vector<double> values = read_value_file(args.acvf_file);
    spec.acvf.resize(static_cast<int>(values.size()));
    for (std::size_t i = 0; i < values.size(); ++i) spec.acvf[static_cast<int>(i)] = values[i];
  } else if (args.kind == "worst-case") {
    spec.kind = ssar::ProcessKind::worst_case;
  } else {
    throw CLI::ValidationError(
        "--kind must be one of ar1, arma1q, gaussian-acvf, worst-case");
  }
  const ssar::TimeSeries series = ssar::generate(spec);
  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!args.output.empty()) {
    file = open_output(args.output);
    out = &file;
  }
  *out << "value\n";
  for (int i = 0; i < series.length(); ++i) *out << fmt17(series.values[i]) << '\n';
  return kExitOk;
}

int run_test(const TestArgs& args) {
  const ssar::TimeSeries series = read_series(args.input);
  ssar::EstimateConfig cfg;
  cfg.rate_exponent = args.rate_exponent;
  ssar::TestResult tr;
  if (args.which == "gamma0") {
    tr = ssar::test_gamma_zero(series, args.lag, args.alpha, cfg);
  } else if (args.which == "g0") {
    if (!args.r_set) throw CLI::ValidationError("--which g0 needs --r (the assumed r(N))");
    tr = ssar::test_g_zero(series, args.lag, ssar::NoiseSpec{{args.lag, args.r}}, args.alpha,
                           cfg);
  } else if (args.which == "gamma-eq-r") {
    if (!args.r_set) throw CLI::ValidationError("--which gamma-eq-r needs --r");
    tr = ssar::test_gamma_equals_r(series, args.lag, args.r, args.alpha, cfg);
  } else if (args.which == "a-eq") {
    if (!args.r_set || !args.r2_set) {
      throw CLI::ValidationError("--which a-eq needs --r (at N) and --r2 (at N+k)");
    }
    ssar::NoiseSpec noise;
    noise.entries[args.lag] = args.r;
    noise.entries[args.lag + args.k] = args.r2;
    tr = ssar::test_a_equal(series, args.lag, args.k, noise, args.alpha, cfg);
  } else {
    throw CLI::ValidationError("--which must be one of gamma0, g0, gamma-eq-r, a-eq");
  }
  std::cout << "{\"schema_version\":1,\"test\":" << test_json(tr) << "}\n";
  return kExitOk;
}

int run_noise_recover(const NoiseArgs& args) {
  Eigen::VectorXd gamma;
  if (args.input_kind == "series") {
    const ssar::TimeSeries series = read_series(args.input);
    ssar::AcvfConfig cfg;
    cfg.max_lag = std::min(args.max_lag + 1, series.length() - 2);
    gamma = ssar::acvf_vector(series, cfg).gamma;
  } else if (args.input_kind == "acvf") {
    const std::vector<double> values = read_value_file(args.input);
    gamma.resize(static_cast<int>(values.size()));
    for (std::size_t i = 0; i < values.size(); ++i) gamma[static_cast<int>(i)] = values[i];
  } else {
    throw CLI::ValidationError("--input-kind must be 'series' or 'acvf'");
  }
  const int top = static_cast<int>(gamma.size()) - 2;
  std::cout << "lag,r\n";
  for (int n = 0; n <= std::min(args.max_lag, top); ++n) {
    std::cout << n << ',' << fmt17(ssar::recover_noise_acvf(args.phi, gamma, n)) << '\n';
  }
  return kExitOk;
}

std::map<std::string, std::string> read_key_values(const std::string& path);

// "--config FILE" anywhere on the line splices the file's key=value pairs in
// as --key=value tokens; explicit command-line flags win over the file.
std::vector<std::string> expand_config(int argc, char** argv) {
  std::vector<std::string> args;
  std::string config_path;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--config" && i + 1 < argc) {
      config_path = argv[++i];
    } else if (arg.rfind("--config=", 0) == 0) {
      config_path = arg.substr(9);
    } else {
      args.push_back(arg);
    }
  }
  if (config_path.empty()) return args;
  auto given = [&](const std::string& key) {
    const std::string plain = "--" + key;
    for (const auto& a : args) {
      if (a == plain || a.rfind(plain + "=", 0) == 0) return true;
    }
    return false;
  };
  for (const auto& [key, value] : read_key_values(config_path)) {
    if (!given(key)) args.push_back("--" + key + "=" + value);
  }
  return args;
}

std::map<std::string, std::string> read_key_values(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open grid file: " + path);
  std::map<std::string, std::string> kv;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw io_error(path + ": line " + std::to_string(line_no) + ": expected key=value");
    }
    kv[line.substr(0, eq)] = line.substr(eq + 1);
  }
  return kv;
}

template <class T, class Parse>
std::vector<T> split_list(const std::string& text, Parse parse, const std::string& what) {
  std::vector<T> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      out.push_back(parse(item));
    } catch (...) {
      throw io_error("cannot parse " + what + " entry '" + item + "'");
    }
  }
  if (out.empty()) throw io_error(what + " list is empty");
  return out;
}

int run_mc_table(const McArgs& args) {
  ssar::GridSpec spec;
  if (args.process == "ar1") {
    spec.process.kind = ssar::ProcessKind::ar1;
  } else if (args.process == "arma1q") {
    spec.process.kind = ssar::ProcessKind::arma1q;
  } else {
    throw CLI::ValidationError("--process must be 'ar1' or 'arma1q'");
  }
  const auto kv = read_key_values(args.grid_file);
  auto need = [&](const char* key) {
    auto it = kv.find(key);
    if (it == kv.end() && std::string(key) == "lengths") it = kv.find("T");
    if (it == kv.end()) throw io_error(args.grid_file + ": missing key '" + key + "'");
    return it->second;
  };
  spec.phis = split_list<double>(need("phis"), [](const std::string& s) { return std::stod(s); },
                                 "phis");
  spec.lags = split_list<int>(need("lags"), [](const std::string& s) { return std::stoi(s); },
                              "lags");
  spec.lengths = split_list<int>(need("lengths"),
                                 [](const std::string& s) { return std::stoi(s); }, "lengths");
  if (auto it = kv.find("sigma2"); it != kv.end()) spec.process.sigma2 = std::stod(it->second);
  if (auto it = kv.find("theta"); it != kv.end()) {
    const auto thetas = split_list<double>(
        it->second, [](const std::string& s) { return std::stod(s); }, "theta");
    spec.process.thetas.resize(static_cast<int>(thetas.size()));
    for (std::size_t i = 0; i < thetas.size(); ++i) {
      spec.process.thetas[static_cast<int>(i)] = thetas[i];
    }
  } else if (spec.process.kind == ssar::ProcessKind::arma1q) {
    spec.process.thetas.resize(2);
    spec.process.thetas << 0.8, 0.3;
  }
  if (auto it = kv.find("bins"); it != kv.end()) spec.histogram_bins = std::stoi(it->second);
  spec.replicates = args.reps;
  spec.seed = args.seed;
  spec.threads = args.threads;
  if (spec.threads <= 0) {
    spec.threads = 1;
    if (const char* env = std::getenv("SSAR_THREADS")) {
      const int parsed = std::atoi(env);
      if (parsed > 0) spec.threads = parsed;
    }
  }

  const ssar::GridResult result = ssar::run_grid(spec);

  std::string base = args.output;
  if (base.size() > 4 && base.substr(base.size() - 4) == ".csv") {
    base = base.substr(0, base.size() - 4);
  }
  {
    auto out = open_output(base + ".csv");
    ssar::write_means_csv(result, out);
  }
  {
    auto out = open_output(base + ".summary.csv");
    ssar::write_summary_csv(result, out);
  }
  {
    auto out = open_output(base + ".txt");
    ssar::write_means_text(result, out);
  }
  {
    auto out = open_output(base + ".hist.csv");
    ssar::write_histograms_csv(result, out);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Model fitting for strictly stationary processes via the AR(1) representation"};
  app.require_subcommand(1);
  std::string config_path_doc;  // consumed before parsing; listed for --help

  AcvfArgs acvf_args;
  auto* acvf_cmd = app.add_subcommand("acvf", "Sample autocovariances with standard errors");
  acvf_cmd->add_option("input", acvf_args.input, "series file, one value per line")->required();
  acvf_cmd->add_option("--max-lag", acvf_args.max_lag, "highest lag to report");
  acvf_cmd->add_option("--centering", acvf_args.centering, "none | sample-mean");
  acvf_cmd->add_option("--denominator", acvf_args.denominator, "T | T-n-1");
  acvf_cmd->add_option("--rate-exponent", acvf_args.rate_exponent, "l(T) = T^e for the se column");

  EstimateArgs est_args;
  auto* est_cmd = app.add_subcommand("estimate", "Estimate the AR(1) parameter at a lag");
  est_cmd->add_option("input", est_args.input)->required();
  est_cmd->add_option("--lag", est_args.lag, "lag N")->required();
  est_cmd->add_option("--r", est_args.r, "assumed noise autocovariance r(N)")->required();
  est_cmd->add_option("--r2", est_args.r2, "second noise value as LAG:VALUE");
  est_cmd->add_option("--level", est_args.level, "confidence level");
  est_cmd->add_option("--rate-exponent", est_args.rate_exponent);
  est_cmd->add_option("--max-lag", est_args.max_lag, "autocovariance lags to compute (0 = auto)");

  SimulateArgs sim_args;
  auto* sim_cmd = app.add_subcommand("simulate", "Generate a seeded sample path");
  sim_cmd->add_option("--kind", sim_args.kind, "ar1 | arma1q | gaussian-acvf | worst-case")
      ->required();
  sim_cmd->add_option("--phi", sim_args.phi);
  sim_cmd->add_option("--theta", sim_args.thetas, "MA parameters (default 0.8 0.3)")
      ->delimiter(',');
  sim_cmd->add_option("--sigma2", sim_args.sigma2);
  sim_cmd->add_option("--b", sim_args.b, "constant-ratio family parameter, in (0,2]");
  sim_cmd->add_option("--gamma0", sim_args.gamma0, "variance of the constant-ratio family");
  sim_cmd->add_option("--acvf", sim_args.acvf_file, "autocovariance file for gaussian-acvf");
  sim_cmd->add_option("-T,--length", sim_args.length)->required();
  sim_cmd->add_option("--seed", sim_args.seed)->required();
  sim_cmd->add_option("--innovations", sim_args.innovations, "gaussian | uniform");
  sim_cmd->add_option("-o,--output", sim_args.output, "output CSV (default stdout)");

  TestArgs test_args;
  auto* test_cmd = app.add_subcommand("test", "Hypothesis tests on the autocovariances");
  test_cmd->add_option("input", test_args.input)->required();
  test_cmd->add_option("--which", test_args.which, "gamma0 | g0 | gamma-eq-r | a-eq")->required();
  test_cmd->add_option("--lag", test_args.lag, "lag N")->required();
  test_cmd->add_option("--k", test_args.k, "lag offset for a-eq");
  auto* test_r = test_cmd->add_option("--r", test_args.r, "r value at N");
  auto* test_r2 = test_cmd->add_option("--r2", test_args.r2, "r value at N+k (a-eq)");
  test_cmd->add_option("--alpha", test_args.alpha, "significance level");
  test_cmd->add_option("--rate-exponent", test_args.rate_exponent);

  NoiseArgs noise_args;
  auto* noise_cmd = app.add_subcommand("noise-recover",
                                       "Recover the noise autocovariance from phi and gamma");
  noise_cmd->add_option("input", noise_args.input)->required();
  noise_cmd->add_option("--phi", noise_args.phi)->required();
  noise_cmd->add_option("--max-lag", noise_args.max_lag);
  noise_cmd->add_option("--input-kind", noise_args.input_kind, "series | acvf");

  McArgs mc_args;
  auto* mc_cmd = app.add_subcommand("mc-table", "Monte Carlo tables over a (phi, N, T) grid");
  mc_cmd->add_option("--process", mc_args.process, "ar1 | arma1q")->required();
  mc_cmd->add_option("--grid", mc_args.grid_file, "key=value grid file")->required();
  mc_cmd->add_option("--reps", mc_args.reps, "replicates per cell");
  mc_cmd->add_option("--seed", mc_args.seed)->required();
  mc_cmd->add_option("--threads", mc_args.threads, "0 = SSAR_THREADS env or 1");
  mc_cmd->add_option("-o,--output", mc_args.output, "output base path")->required();

  for (auto* sub : {acvf_cmd, est_cmd, sim_cmd, test_cmd, noise_cmd, mc_cmd}) {
    sub->add_option("--config", config_path_doc, "key=value file mirroring the flags");
  }

  std::vector<std::string> args;
  try {
    args = expand_config(argc, argv);
  } catch (const io_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
  std::reverse(args.begin(), args.end());  // CLI11 consumes from the back
  try {
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  test_args.r_set = test_r->count() > 0;
  test_args.r2_set = test_r2->count() > 0;

  try {
    if (acvf_cmd->parsed()) return run_acvf(acvf_args);
    if (est_cmd->parsed()) return run_estimate(est_args);
    if (sim_cmd->parsed()) return run_simulate(sim_args);
    if (test_cmd->parsed()) return run_test(test_args);
    if (noise_cmd->parsed()) return run_noise_recover(noise_args);
    if (mc_cmd->parsed()) return run_mc_table(mc_args);
  } catch (const io_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const ssar::uninformative_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUninformative;
  } catch (const ssar::inconsistency_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUninformative;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
