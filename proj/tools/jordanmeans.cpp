// Command-line harness: compute means of concrete elements, run the
// verification suites, and run Lie-Trotter convergence experiments.
//
// Exit codes: 0 success / all checks passed, 1 checks ran but failed,
// 2 configuration or input parse error, 3 non-positive input element,
// 4 numeric failure during an experiment.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "jordan/io.hpp"
#include "jordan/lie_trotter.hpp"
#include "jordan/meansn.hpp"
#include "jordan/suites.hpp"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;
constexpr int kExitNotPositive = 3;
constexpr int kExitNumeric = 4;

struct CommonOptions {
  std::string algebra = "symmetric";
  int dim = 4;
  std::uint64_t seed = 1;
  std::string format = "json";
  std::string out_path;
  int jobs = 1;
};

void add_common(CLI::App* cmd, CommonOptions& opt) {
  cmd->add_option("--algebra", opt.algebra,
                  "Algebra kind: symmetric | spin (or kind:dim)");
  cmd->add_option("--dim", opt.dim, "Algebra dimension");
  cmd->add_option("--seed", opt.seed, "Base RNG seed");
  cmd->add_option("--format", opt.format, "Output format: json | csv");
  cmd->add_option("--out", opt.out_path, "Write output to FILE");
  cmd->add_option("--jobs", opt.jobs,
                  "Worker threads: 1 = serial, 0 = all cores");
}

// "symmetric" + dim -> "symmetric:4"; an explicit kind:dim wins over --dim.
std::string algebra_spec(const CommonOptions& opt) {
  if (opt.algebra.find(':') != std::string::npos) return opt.algebra;
  return opt.algebra + ":" + std::to_string(opt.dim);
}

jordan::ExecMode exec_mode(const CommonOptions& opt) {
  if (opt.jobs == 1) return jordan::ExecMode::serial;
  jordan::set_threads(opt.jobs);  // 0 keeps the OpenMP default (all cores)
  return jordan::ExecMode::parallel;
}

void apply_seed_env(std::uint64_t& seed) {
  if (const char* env = std::getenv("JORDANMEANS_SEED")) {
    seed = std::strtoull(env, nullptr, 10);
  }
}

std::string read_input(const std::string& in_path) {
  if (in_path.empty()) {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(in_path);
  if (!f) throw jordan::DomainError("cannot open input file: " + in_path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void emit(const CommonOptions& opt, const std::string& text) {
  if (opt.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(opt.out_path);
  if (!f) throw jordan::DomainError("cannot open output file: " + opt.out_path);
  f << text;
}

int run_compute(const CommonOptions& opt, const std::string& mean_name,
                double lambda, bool lambda_given,
                const std::vector<double>& weights,
                const std::string& in_path) {
  auto alg = jordan::make_algebra(algebra_spec(opt));
  jordan::MeanN mean = jordan::MeanN::parse(mean_name);

  nlohmann::json input;
  jordan::ElementTuple tuple;
  try {
    input = nlohmann::json::parse(read_input(in_path));
    if (!input.is_array() || input.size() < 2)
      throw jordan::DomainError("input must be a JSON array of >= 2 elements");
    for (const auto& j : input)
      tuple.push_back(jordan::element_from_json(alg, j));
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input parse error: " << e.what() << "\n";
    return kExitConfig;
  }

  const int n = static_cast<int>(tuple.size());
  // Two elements with --lambda evaluate the 2-mean directly; that accepts
  // any real lambda, including the endpoints 0 and 1, which a weight vector
  // on the open simplex would reject.
  const jordan::AlgebraElement result = [&] {
    if (weights.empty() && n == 2)
      return jordan::mean2(mean.as_mean2(), tuple[0], tuple[1],
                           lambda_given ? lambda : 0.5);
    const jordan::WeightVector w = weights.empty()
                                       ? jordan::WeightVector::uniform(n)
                                       : jordan::WeightVector(weights);
    return mean(w, tuple);
  }();
  emit(opt, jordan::element_to_json(result).dump(2) + "\n");
  return 0;
}

int run_verify(const CommonOptions& opt, const std::string& suite,
               int samples, int n, double tol, const std::string& mean_name) {
  jordan::ExperimentConfig cfg;
  cfg.algebra = algebra_spec(opt);
  cfg.seed = opt.seed;
  cfg.mean = mean_name;
  cfg.suite = suite;
  cfg.n = n;
  cfg.samples = samples;
  cfg.tolerances.prop = tol;
  cfg.format = opt.format;
  cfg.exec = exec_mode(opt);
  cfg.validate(/*require_suite=*/true);

  const auto records = jordan::run_verify_suite(cfg.suite_config());
  bool all_pass = true;
  double total_s = 0.0;
  for (const auto& rec : records) {
    all_pass = all_pass && rec.pass;
    total_s += rec.wall_clock_s;
  }

  if (opt.format == "csv") {
    std::ostringstream os;
    jordan::write_reports_csv(os, records);
    emit(opt, os.str());
  } else {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& rec : records) out.push_back(jordan::report_to_json(rec));
    emit(opt, out.dump(2) + "\n");
  }
  std::cerr << "verify " << suite << ": " << (all_pass ? "pass" : "FAIL")
            << " (" << records.size() << " record(s), " << total_s << " s)\n";
  return all_pass ? 0 : kExitFail;
}

int run_converge_cmd(const CommonOptions& opt, const std::string& mean_name,
                     int n, int samples, double t_min, double t_max,
                     double min_order, const std::string& curves) {
  jordan::ExperimentConfig cfg;
  cfg.algebra = algebra_spec(opt);
  cfg.seed = opt.seed;
  cfg.mean = mean_name;
  cfg.n = n;
  cfg.samples = samples;
  cfg.t_min = t_min;
  cfg.t_max = t_max;
  cfg.min_order = min_order;
  cfg.curves = curves;
  cfg.format = opt.format;
  cfg.exec = exec_mode(opt);
  cfg.validate(/*require_suite=*/false);

  const auto records = jordan::run_converge(cfg.converge_config());
  bool all_pass = true;
  for (const auto& rec : records) all_pass = all_pass && rec.pass;

  if (opt.format == "csv") {
    std::ostringstream os;
    jordan::write_converge_csv(os, records);
    emit(opt, os.str());
  } else {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& rec : records)
      out.push_back(jordan::converge_to_json(rec));
    emit(opt, out.dump(2) + "\n");
  }
  std::cerr << "converge " << mean_name << " n=" << n << ": "
            << (all_pass ? "pass" : "FAIL") << " (" << records.size()
            << " experiment(s))\n";
  return all_pass ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted operator means in JB-algebras: compute, verify, converge"};
  app.require_subcommand(1);

  CommonOptions compute_opt, verify_opt, converge_opt;

  auto* compute = app.add_subcommand(
      "compute", "Compute a mean of elements read as JSON");
  add_common(compute, compute_opt);
  std::string compute_mean = "geometric";
  double lambda = 0.5;
  std::vector<double> weights;
  std::string in_path;
  compute->add_option("--mean", compute_mean, "Mean identifier");
  auto* lambda_opt = compute->add_option("--lambda", lambda, "2-mean weight");
  compute->add_option("--weights", weights, "Weight vector")
      ->delimiter(',');
  compute->add_option("--in", in_path, "Read elements from FILE (default stdin)");

  auto* verify =
      app.add_subcommand("verify", "Run a seeded verification suite");
  add_common(verify, verify_opt);
  std::string suite;
  int verify_samples = 200;
  int verify_n = 3;
  double verify_tol = 1e-9;
  std::string verify_mean = "hansen-geometric";
  verify->add_option("suite", suite, "Suite name")->required();
  verify->add_option("--samples", verify_samples, "Samples per record");
  verify->add_option("--n", verify_n, "Tuple size");
  verify->add_option("--tol", verify_tol, "Suite tolerance");
  verify->add_option("--mean", verify_mean, "Mean under test (sandwich)");

  auto* converge = app.add_subcommand(
      "converge", "Run Lie-Trotter convergence experiments");
  add_common(converge, converge_opt);
  std::string converge_mean = "geometric";
  int converge_n = 2;
  int converge_samples = 20;
  double t_min = 0x1p-12, t_max = 0x1p-3, min_order = 0.9;
  std::string curves = "noncommuting";
  converge->add_option("--mean", converge_mean, "Mean identifier");
  converge->add_option("--n", converge_n, "Number of curves");
  converge->add_option("--samples", converge_samples, "Experiments to run");
  converge->add_option("--t-min", t_min, "Smallest grid value");
  converge->add_option("--t-max", t_max, "Largest grid value");
  converge->add_option("--min-order", min_order, "Required fitted order");
  converge->add_option("--curves", curves, "noncommuting | commuting");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitConfig;
  }

  try {
    if (compute->parsed()) {
      apply_seed_env(compute_opt.seed);
      return run_compute(compute_opt, compute_mean, lambda,
                         lambda_opt->count() > 0, weights, in_path);
    }
    if (verify->parsed()) {
      apply_seed_env(verify_opt.seed);
      return run_verify(verify_opt, suite, verify_samples, verify_n,
                        verify_tol, verify_mean);
    }
    apply_seed_env(converge_opt.seed);
    return run_converge_cmd(converge_opt, converge_mean, converge_n,
                            converge_samples, t_min, t_max, min_order, curves);
  } catch (const jordan::NotPositiveError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNotPositive;
  } catch (const jordan::NumericError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const jordan::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input parse error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  }
}
