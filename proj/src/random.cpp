#include "jordan/random.hpp"

#include <cmath>
#include <numbers>

namespace jordan {

std::uint64_t Rng::next_u64() {
  // splitmix64
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double Rng::uniform01() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double a, double b) { return a + (b - a) * uniform01(); }

double Rng::normal() {
  if (has_cached_normal_) {
    has_cached_normal_ = false;
    return cached_normal_;
  }
  double u1 = uniform01();
  while (u1 == 0.0) u1 = uniform01();
  const double u2 = uniform01();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * std::numbers::pi * u2;
  cached_normal_ = r * std::sin(a);
  has_cached_normal_ = true;
  return r * std::cos(a);
}

int Rng::uniform_int(int lo, int hi) {
  const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(next_u64() % range);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  // One splitmix64 step over the combined words.
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

AlgebraElement random_symmetric(const std::shared_ptr<const Algebra>& alg,
                                Rng& rng) {
  std::vector<double> coords(alg->coord_dim());
  for (double& c : coords) c = rng.normal();
  return alg->element(std::move(coords));
}

AlgebraElement random_positive(const std::shared_ptr<const Algebra>& alg,
                               double condition_cap, Rng& rng) {
  if (condition_cap < 1.0) throw DomainError("condition_cap must be >= 1");
  const AlgebraElement g = random_symmetric(alg, rng);
  const SpectralDecomposition sd = spectral_decompose(g);
  const double lo = sd.min_eigenvalue();
  const double hi = sd.max_eigenvalue();
  const double half_logc = 0.5 * std::log(condition_cap);
  if (hi - lo <= 1e-12 * (1.0 + std::abs(hi)) || half_logc == 0.0)
    return alg->unit();
  const double scale = 2.0 * half_logc / (hi - lo);
  return apply_spectral(sd, [&](double l) {
    return std::exp(-half_logc + (l - lo) * scale);
  });
}

AlgebraElement random_positive(const std::shared_ptr<const Algebra>& alg,
                               double condition_cap, std::uint64_t seed) {
  Rng rng(seed);
  return random_positive(alg, condition_cap, rng);
}

Symmetry make_symmetry(const std::shared_ptr<const Algebra>& alg, Rng& rng) {
  const SpectralDecomposition sd =
      spectral_decompose(random_symmetric(alg, rng));
  AlgebraElement s = alg->zero();
  for (const AlgebraElement& e : sd.idempotents)
    s += (rng.coin() ? 1.0 : -1.0) * e;
  return Symmetry(s);
}

Symmetry make_symmetry(const std::shared_ptr<const Algebra>& alg,
                       std::uint64_t seed) {
  Rng rng(seed);
  return make_symmetry(alg, rng);
}

AlgebraElement random_psd(const std::shared_ptr<const Algebra>& alg,
                          double max_norm, Rng& rng) {
  const SpectralDecomposition sd =
      spectral_decompose(random_symmetric(alg, rng));
  AlgebraElement p = apply_spectral(sd, [](double l) { return std::max(l, 0.0); });
  const double cur = norm(p);
  if (cur == 0.0) return p;
  return p * (rng.uniform01() * max_norm / cur);
}

}  // namespace jordan
