#pragma once

#include <cstdint>
#include <memory>

#include "jordan/algebra.hpp"

namespace jordan {

/// Deterministic generator with explicit distributions (splitmix64 core).
/// Output is identical across platforms and thread counts: every sampler in
/// the suites draws from an Rng seeded by mix_seed(seed, sample_index).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();
  /// Uniform in [0, 1), 53-bit resolution.
  double uniform01();
  double uniform(double a, double b);
  /// Standard normal (Box-Muller).
  double normal();
  /// Uniform integer in [lo, hi].
  int uniform_int(int lo, int hi);
  bool coin() { return (next_u64() & 1u) != 0; }

 private:
  std::uint64_t state_;
  bool has_cached_normal_ = false;
  double cached_normal_ = 0.0;
};

/// Stream splitter: decorrelates per-sample generators from a base seed.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

/// Gaussian element of the algebra (canonicalized coordinates).
AlgebraElement random_symmetric(const std::shared_ptr<const Algebra>& alg,
                                Rng& rng);

/// Positive invertible element with eigenvalue ratio <= condition_cap:
/// a Gaussian element whose spectrum is rescaled into
/// [-log sqrt(cap), log sqrt(cap)], then exponentiated. condition_cap = 1
/// yields the unit.
AlgebraElement random_positive(const std::shared_ptr<const Algebra>& alg,
                               double condition_cap, Rng& rng);
AlgebraElement random_positive(const std::shared_ptr<const Algebra>& alg,
                               double condition_cap, std::uint64_t seed);

/// Random symmetry: signs +-1 on the spectral idempotents of a Gaussian
/// element.
Symmetry make_symmetry(const std::shared_ptr<const Algebra>& alg, Rng& rng);
Symmetry make_symmetry(const std::shared_ptr<const Algebra>& alg,
                       std::uint64_t seed);

/// Positive semidefinite element of norm <= max_norm (possibly zero).
AlgebraElement random_psd(const std::shared_ptr<const Algebra>& alg,
                          double max_norm, Rng& rng);

}  // namespace jordan
