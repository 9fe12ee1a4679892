#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "jordan/algebra.hpp"
#include "jordan/means2.hpp"
#include "jordan/parallel.hpp"

namespace jordan {

/// A point of the open simplex: strictly positive weights, renormalized to
/// sum 1 on ingest. Zero or negative weights are rejected.
class WeightVector {
 public:
  explicit WeightVector(std::vector<double> w);
  /// Uniform weights (1/n, ..., 1/n).
  static WeightVector uniform(int n);

  int size() const { return static_cast<int>(w_.size()); }
  double operator[](int k) const { return w_[k]; }
  const std::vector<double>& values() const { return w_; }

 private:
  std::vector<double> w_;
};

using ElementTuple = std::vector<AlgebraElement>;

/// Throws unless the tuple is nonempty, single-algebra, and positive
/// invertible throughout, with length matching the weights.
void validate_tuple(const WeightVector& w, const ElementTuple& tuple,
                    const char* what);

/// sum_k w_k A_k.
AlgebraElement arithmetic_mean_n(const WeightVector& w,
                                 const ElementTuple& tuple);

/// (sum_k w_k A_k^-1)^-1.
AlgebraElement harmonic_mean_n(const WeightVector& w,
                               const ElementTuple& tuple);

/// Right fold of the base 2-mean with renormalized partial weights:
///   S_n = S_2(1-w_n, w_n; S_{n-1}(w-hat; A_1..A_{n-1}), A_n).
/// Requires n >= 2.
AlgebraElement sagae_tanabe(const WeightVector& w, const ElementTuple& tuple,
                            Mean2 base);

/// Inductive construction pairing every entry with the last:
///   H_n = H_{n-1}(w-hat; H_2(1-w_n, w_n; A_k, A_n) for k < n).
/// Requires n >= 2.
AlgebraElement hansen_inductive(const WeightVector& w,
                                const ElementTuple& tuple, Mean2 base);

/// A weighted n-mean identifier: the closed arithmetic/harmonic forms, or a
/// Sagae-Tanabe / Hansen construction over a base 2-mean. For n = 2 every
/// family reduces to its base 2-mean.
struct MeanN {
  enum class Family { arithmetic, harmonic, sagae, hansen };

  Family family = Family::arithmetic;
  Mean2 base = Mean2::geometric;  // used by sagae / hansen

  /// Accepts "arithmetic", "harmonic", "geometric", "spectral",
  /// "sagae-<base>", "hansen-<base>". Bare "geometric"/"spectral" map to the
  /// Sagae-Tanabe fold of that base.
  static MeanN parse(const std::string& name);
  std::string name() const;

  /// The 2-mean this family reduces to at n = 2.
  Mean2 as_mean2() const;

  AlgebraElement operator()(const WeightVector& w,
                            const ElementTuple& tuple) const;
};

/// Harmonic <= Hansen-geometric <= arithmetic, both sides as Loewner
/// inequalities with eigenvalue slack tol * scale.
struct YoungCheck {
  bool lower_ok = false;
  bool upper_ok = false;
  double lower_violation = 0.0;
  double upper_violation = 0.0;
};

YoungCheck young_check(const WeightVector& w, const ElementTuple& tuple,
                       double tol);

/// Properties of the Hansen geometric mean checked by sampling.
enum class HansenProperty {
  homogeneity,
  monotonicity,
  concavity,
  congruence,
  self_dual
};

HansenProperty parse_hansen_property(const std::string& name);
std::string hansen_property_name(HansenProperty p);

struct PropertySampleConfig {
  std::shared_ptr<const Algebra> algebra;
  int n = 3;
  int samples = 100;
  std::uint64_t seed = 1;
  double condition_cap = 10.0;
  double tol = 1e-9;
  ExecMode exec = ExecMode::serial;
};

struct PropertyReport {
  HansenProperty property;
  int samples = 0;
  double max_violation = 0.0;
  /// Congruence is checked both with symmetries and with general positive
  /// invertible elements; the latter is reported separately here.
  double max_violation_invertible = 0.0;
  bool pass = false;
};

PropertyReport hansen_property_check(HansenProperty property,
                                     const PropertySampleConfig& config);

}  // namespace jordan
