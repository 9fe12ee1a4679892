#include "jordan/io.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

#include "jordan/meansn.hpp"
#include "jordan/spin_factor.hpp"
#include "jordan/symmetric_matrix.hpp"

namespace jordan {

namespace {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12e", v);
  return buf;
}

std::pair<std::string, int> split_algebra_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw DomainError("algebra spec must look like symmetric:N or spin:D");
  const std::string kind = spec.substr(0, colon);
  int dim = 0;
  try {
    dim = std::stoi(spec.substr(colon + 1));
  } catch (const std::exception&) {
    throw DomainError("bad algebra dimension in: " + spec);
  }
  return {kind, dim};
}

}  // namespace

std::shared_ptr<const Algebra> make_algebra(const std::string& kind, int dim) {
  if (dim < 1) throw DomainError("algebra dimension must be >= 1");
  if (kind == "symmetric") return std::make_shared<SymmetricMatrixAlgebra>(dim);
  if (kind == "spin") return std::make_shared<SpinFactorAlgebra>(dim);
  throw DomainError("unknown algebra kind: " + kind);
}

std::shared_ptr<const Algebra> make_algebra(const std::string& spec) {
  const auto [kind, dim] = split_algebra_spec(spec);
  return make_algebra(kind, dim);
}

nlohmann::json element_to_json(const AlgebraElement& a) {
  if (const auto* mat =
          dynamic_cast<const SymmetricMatrixAlgebra*>(&a.algebra())) {
    const int n = mat->n();
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < n; ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (int j = 0; j < n; ++j) row.push_back(a.coords()[i * n + j]);
      rows.push_back(std::move(row));
    }
    return rows;
  }
  if (dynamic_cast<const SpinFactorAlgebra*>(&a.algebra()) != nullptr) {
    nlohmann::json j;
    j["s"] = a.coords()[0];
    j["u"] = std::vector<double>(a.coords().begin() + 1, a.coords().end());
    return j;
  }
  throw DomainError("element_to_json: unsupported algebra");
}

AlgebraElement element_from_json(const std::shared_ptr<const Algebra>& alg,
                                 const nlohmann::json& j) {
  if (const auto* mat =
          dynamic_cast<const SymmetricMatrixAlgebra*>(alg.get())) {
    if (!j.is_array()) throw DomainError("matrix element must be an array of rows");
    std::vector<std::vector<double>> rows;
    for (const auto& row : j) {
      if (!row.is_array()) throw DomainError("matrix row must be an array");
      rows.push_back(row.get<std::vector<double>>());
    }
    return mat->from_rows(rows);
  }
  if (const auto* spin = dynamic_cast<const SpinFactorAlgebra*>(alg.get())) {
    if (!j.is_object() || !j.contains("s") || !j.contains("u"))
      throw DomainError("spin element must be {\"s\": real, \"u\": [reals]}");
    return spin->from_parts(j.at("s").get<double>(),
                            j.at("u").get<std::vector<double>>());
  }
  throw DomainError("element_from_json: unsupported algebra");
}

nlohmann::json report_to_json(const ReportRecord& rec) {
  nlohmann::json j;
  j["experiment_id"] = rec.experiment_id;
  j["suite"] = rec.suite;
  j["pass"] = rec.pass;
  j["max_violation"] = rec.max_violation;
  j["samples"] = rec.samples;
  j["tolerance"] = rec.tolerance;
  j["metrics"] = rec.metrics;
  j["not_applicable"] = rec.not_applicable;
  if (!rec.fitted_orders.empty()) j["fitted_orders"] = rec.fitted_orders;
  j["per_sample"] = rec.per_sample;
  if (!rec.note.empty()) j["note"] = rec.note;
  return j;
}

nlohmann::json converge_to_json(const ConvergeRecord& rec) {
  nlohmann::json j;
  j["experiment_id"] = rec.experiment_id;
  j["mean"] = rec.mean;
  j["n"] = rec.n;
  j["seed"] = rec.seed;
  j["t"] = rec.t_grid;
  j["error"] = rec.errors;
  if (rec.exact)
    j["fitted_order"] = nullptr;
  else
    j["fitted_order"] = rec.fitted_order;
  j["exact"] = rec.exact;
  j["monotone"] = rec.monotone;
  j["terminal_error"] = rec.terminal_error;
  j["min_order"] = rec.min_order;
  j["pass"] = rec.pass;
  return j;
}

void write_reports_csv(std::ostream& os,
                       const std::vector<ReportRecord>& records) {
  os << "experiment_id,t,error,order,pass\n";
  for (const ReportRecord& rec : records) {
    for (size_t i = 0; i < rec.per_sample.size(); ++i) {
      os << rec.experiment_id << "," << i << ","
         << format_double(rec.per_sample[i]) << ",,"
         << (rec.pass ? "true" : "false") << "\n";
    }
  }
}

void write_converge_csv(std::ostream& os,
                        const std::vector<ConvergeRecord>& records) {
  os << "experiment_id,t,error,order,pass\n";
  for (const ConvergeRecord& rec : records) {
    const std::string order =
        rec.exact ? "exact" : format_double(rec.fitted_order);
    for (size_t i = 0; i < rec.t_grid.size(); ++i) {
      os << rec.experiment_id << "," << format_double(rec.t_grid[i]) << ","
         << format_double(rec.errors[i]) << "," << order << ","
         << (rec.pass ? "true" : "false") << "\n";
    }
  }
}

void ExperimentConfig::validate(bool require_suite) const {
  make_algebra(algebra);
  MeanN::parse(mean);
  if (format != "json" && format != "csv")
    throw DomainError("format must be json or csv");
  if (curves != "noncommuting" && curves != "commuting")
    throw DomainError("curves must be noncommuting or commuting");
  if (samples < 1) throw DomainError("samples must be >= 1");
  if (n < 2) throw DomainError("n must be >= 2");
  if (!(t_min > 0.0) || !(t_max > t_min))
    throw DomainError("need t_max > t_min > 0");
  if (!(min_order > 0.0)) throw DomainError("min_order must be positive");
  if (!weights.empty()) {
    if (static_cast<int>(weights.size()) != n)
      throw DomainError("weights length must equal n");
    WeightVector check(weights);  // positivity
  }
  if (!(lambda >= 0.0 && lambda <= 1.0))
    throw DomainError("lambda must lie in [0,1]");
  tolerances.validate();
  if (require_suite) {
    const auto& suites = known_suites();
    if (std::find(suites.begin(), suites.end(), suite) == suites.end())
      throw DomainError("unknown suite: " + suite);
  }
}

nlohmann::json ExperimentConfig::to_json() const {
  nlohmann::json j;
  j["algebra"] = algebra;
  j["seed"] = seed;
  j["mean"] = mean;
  j["weights"] = weights;
  j["lambda"] = lambda;
  j["suite"] = suite;
  j["n"] = n;
  j["samples"] = samples;
  j["t_min"] = t_min;
  j["t_max"] = t_max;
  j["min_order"] = min_order;
  j["curves"] = curves;
  j["tolerances"] = {{"spec", tolerances.spec},
                     {"pos", tolerances.pos},
                     {"prop", tolerances.prop}};
  j["format"] = format;
  j["exec"] = exec_mode_name(exec);
  return j;
}

ExperimentConfig ExperimentConfig::from_json(const nlohmann::json& j) {
  ExperimentConfig cfg;
  cfg.algebra = j.at("algebra").get<std::string>();
  cfg.seed = j.at("seed").get<std::uint64_t>();
  cfg.mean = j.at("mean").get<std::string>();
  cfg.weights = j.at("weights").get<std::vector<double>>();
  cfg.lambda = j.at("lambda").get<double>();
  cfg.suite = j.at("suite").get<std::string>();
  cfg.n = j.at("n").get<int>();
  cfg.samples = j.at("samples").get<int>();
  cfg.t_min = j.at("t_min").get<double>();
  cfg.t_max = j.at("t_max").get<double>();
  cfg.min_order = j.at("min_order").get<double>();
  cfg.curves = j.at("curves").get<std::string>();
  cfg.tolerances.spec = j.at("tolerances").at("spec").get<double>();
  cfg.tolerances.pos = j.at("tolerances").at("pos").get<double>();
  cfg.tolerances.prop = j.at("tolerances").at("prop").get<double>();
  cfg.format = j.at("format").get<std::string>();
  cfg.exec = parse_exec_mode(j.at("exec").get<std::string>());
  return cfg;
}

SuiteConfig ExperimentConfig::suite_config() const {
  const auto [kind, dim] = split_algebra_spec(algebra);
  SuiteConfig sc;
  sc.suite = suite;
  sc.algebra = kind;
  sc.dims = {dim};
  sc.ns = {n};
  sc.samples = samples;
  sc.seed = seed;
  sc.mean = mean;
  sc.tol = tolerances.prop;
  sc.exec = exec;
  return sc;
}

ConvergeConfig ExperimentConfig::converge_config() const {
  const auto [kind, dim] = split_algebra_spec(algebra);
  ConvergeConfig cc;
  cc.mean = mean;
  cc.n = n;
  cc.algebra = kind;
  cc.dim = dim;
  cc.samples = samples;
  cc.seed = seed;
  cc.t_max = t_max;
  cc.t_min = t_min;
  cc.min_order = min_order;
  cc.curves = curves;
  cc.exec = exec;
  return cc;
}

}  // namespace jordan
