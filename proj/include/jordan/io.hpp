#pragma once

#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "jordan/algebra.hpp"
#include "jordan/suites.hpp"

namespace jordan {

/// Parses "symmetric:N" or "spin:D".
std::shared_ptr<const Algebra> make_algebra(const std::string& spec);
std::shared_ptr<const Algebra> make_algebra(const std::string& kind, int dim);

/// Matrix elements serialize as an array of rows; spin elements as
/// {"s": real, "u": [reals]}.
nlohmann::json element_to_json(const AlgebraElement& a);
AlgebraElement element_from_json(const std::shared_ptr<const Algebra>& alg,
                                 const nlohmann::json& j);

/// Serialized reports omit wall-clock time: identical config and seed yield
/// byte-identical output.
nlohmann::json report_to_json(const ReportRecord& rec);
nlohmann::json converge_to_json(const ConvergeRecord& rec);

/// CSV projection with fixed column order: experiment_id, t, error, order,
/// pass. Verify records use the sample index in the t column; an exact
/// convergence record prints "exact" in the order column.
void write_reports_csv(std::ostream& os,
                       const std::vector<ReportRecord>& records);
void write_converge_csv(std::ostream& os,
                        const std::vector<ConvergeRecord>& records);

/// CLI-facing experiment description. Round-trips through JSON; invalid
/// identifiers are rejected by validate().
struct ExperimentConfig {
  std::string algebra = "symmetric:4";
  std::uint64_t seed = 1;
  std::string mean = "geometric";
  std::vector<double> weights;  ///< empty: uniform (or lambda for 2-means)
  double lambda = 0.5;
  std::string suite;  ///< verify only
  int n = 2;
  int samples = 200;
  double t_min = 0x1p-12;
  double t_max = 0x1p-3;
  double min_order = 0.9;
  std::string curves = "noncommuting";
  Tolerances tolerances;
  std::string format = "json";  ///< json | csv
  ExecMode exec = ExecMode::serial;

  /// Throws DomainError on any invalid identifier or range.
  void validate(bool require_suite) const;
  nlohmann::json to_json() const;
  static ExperimentConfig from_json(const nlohmann::json& j);

  SuiteConfig suite_config() const;
  ConvergeConfig converge_config() const;
};

}  // namespace jordan
