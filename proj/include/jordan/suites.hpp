#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "jordan/algebra.hpp"
#include "jordan/parallel.hpp"

namespace jordan {

/// Configuration of a sampled verification suite. Samples are independent:
/// sample i draws from a generator seeded by mix_seed(seed, i), so serial
/// and parallel execution produce identical reports.
struct SuiteConfig {
  std::string suite = "riccati";
  std::string algebra = "symmetric";  ///< "symmetric" | "spin"
  std::vector<int> dims = {4};
  std::vector<int> ns = {3};  ///< tuple sizes (young / sandwich)
  int samples = 200;
  std::uint64_t seed = 1;
  std::vector<double> lambdas = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  std::string mean = "hansen-geometric";  ///< sandwich suite
  double tol = 1e-9;
  double tol_strict = 1e-10;  ///< identity & symmetry checks of the semi-metric
  /// Eigenvalue-ratio cap for sampled positive elements; 0 picks the suite
  /// default (2 for spectral-bounds, 10 otherwise).
  double condition_cap = 0.0;
  ExecMode exec = ExecMode::serial;
};

/// One verification outcome. `wall_clock_s` is informational and excluded
/// from serialized reports, which are byte-identical for a given config.
struct ReportRecord {
  std::string experiment_id;
  std::string suite;
  bool pass = false;
  double max_violation = 0.0;
  std::vector<double> fitted_orders;
  std::vector<double> per_sample;
  std::map<std::string, double> metrics;
  std::int64_t not_applicable = 0;
  int samples = 0;
  double tolerance = 0.0;
  std::string note;
  double wall_clock_s = 0.0;
};

const std::vector<std::string>& known_suites();

/// Runs the named suite once per dims x ns combination (one record each).
std::vector<ReportRecord> run_verify_suite(const SuiteConfig& config);

/// Configuration of a Lie-Trotter convergence experiment batch.
struct ConvergeConfig {
  std::string mean = "geometric";
  int n = 2;
  std::string algebra = "symmetric";
  int dim = 4;
  int samples = 20;
  std::uint64_t seed = 1;
  double t_max = 0x1p-3;
  double t_min = 0x1p-12;
  double min_order = 0.9;
  std::string curves = "noncommuting";  ///< or "commuting"
  ExecMode exec = ExecMode::serial;
};

struct ConvergeRecord {
  std::string experiment_id;
  std::string mean;
  int n = 0;
  std::uint64_t seed = 0;
  std::vector<double> t_grid;
  std::vector<double> errors;
  double fitted_order = 0.0;
  bool exact = false;
  bool monotone = true;
  double terminal_error = 0.0;
  double min_order = 0.0;
  bool pass = false;
  double wall_clock_s = 0.0;
};

std::vector<ConvergeRecord> run_converge(const ConvergeConfig& config);

}  // namespace jordan
