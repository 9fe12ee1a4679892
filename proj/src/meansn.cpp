#include "jordan/meansn.hpp"

#include <cmath>

#include "jordan/random.hpp"

namespace jordan {

WeightVector::WeightVector(std::vector<double> w) : w_(std::move(w)) {
  if (w_.empty()) throw DomainError("weight vector must be nonempty");
  double sum = 0.0;
  for (double x : w_) {
    if (!(x > 0.0)) throw DomainError("weights must be strictly positive");
    sum += x;
  }
  if (!std::isfinite(sum)) throw DomainError("weights must be finite");
  for (double& x : w_) x /= sum;
}

WeightVector WeightVector::uniform(int n) {
  if (n < 1) throw DomainError("weight vector must be nonempty");
  return WeightVector(std::vector<double>(n, 1.0 / n));
}

void validate_tuple(const WeightVector& w, const ElementTuple& tuple,
                    const char* what) {
  if (tuple.empty()) throw DomainError(std::string(what) + ": empty tuple");
  if (w.size() != static_cast<int>(tuple.size()))
    throw DomainError(std::string(what) + ": weight/tuple length mismatch");
  for (size_t k = 1; k < tuple.size(); ++k)
    require_same_algebra(tuple[0], tuple[k]);
  for (const AlgebraElement& a : tuple) require_positive(a, what);
}

AlgebraElement arithmetic_mean_n(const WeightVector& w,
                                 const ElementTuple& tuple) {
  validate_tuple(w, tuple, "arithmetic_mean_n");
  AlgebraElement acc = w[0] * tuple[0];
  for (int k = 1; k < w.size(); ++k) acc += w[k] * tuple[k];
  return acc;
}

AlgebraElement harmonic_mean_n(const WeightVector& w,
                               const ElementTuple& tuple) {
  validate_tuple(w, tuple, "harmonic_mean_n");
  AlgebraElement acc = w[0] * inverse(tuple[0]);
  for (int k = 1; k < w.size(); ++k) acc += w[k] * inverse(tuple[k]);
  return inverse(acc);
}

AlgebraElement sagae_tanabe(const WeightVector& w, const ElementTuple& tuple,
                            Mean2 base) {
  validate_tuple(w, tuple, "sagae_tanabe");
  const int n = w.size();
  if (n < 2) throw DomainError("sagae_tanabe requires n >= 2");
  // Left fold of the nested form
  //   [ (A_1 m_{w2/(w1+w2)} A_2) m_{w3/(w1+w2+w3)} ... ] m_{w_n} A_n.
  AlgebraElement acc = tuple[0];
  double partial = w[0];
  for (int k = 1; k < n; ++k) {
    partial += w[k];
    acc = mean2(base, acc, tuple[k], w[k] / partial);
  }
  return acc;
}

AlgebraElement hansen_inductive(const WeightVector& w,
                                const ElementTuple& tuple, Mean2 base) {
  validate_tuple(w, tuple, "hansen_inductive");
  if (w.size() < 2) throw DomainError("hansen_inductive requires n >= 2");
  ElementTuple cur = tuple;
  std::vector<double> wt = w.values();
  while (cur.size() > 1) {
    const size_t m = cur.size();
    const double wn = wt[m - 1];
    for (size_t k = 0; k + 1 < m; ++k)
      cur[k] = mean2(base, cur[k], cur[m - 1], wn);
    cur.pop_back();
    wt.pop_back();
    for (double& x : wt) x /= (1.0 - wn);
  }
  return cur.front();
}

MeanN MeanN::parse(const std::string& name) {
  MeanN m;
  if (name == "arithmetic") {
    m.family = Family::arithmetic;
    return m;
  }
  if (name == "harmonic") {
    m.family = Family::harmonic;
    return m;
  }
  if (name == "geometric" || name == "spectral") {
    m.family = Family::sagae;
    m.base = parse_mean2(name);
    return m;
  }
  const auto dash = name.find('-');
  if (dash != std::string::npos) {
    const std::string head = name.substr(0, dash);
    const std::string tail = name.substr(dash + 1);
    if (head == "sagae") {
      m.family = Family::sagae;
      m.base = parse_mean2(tail);
      return m;
    }
    if (head == "hansen") {
      m.family = Family::hansen;
      m.base = parse_mean2(tail);
      return m;
    }
  }
  throw DomainError("unknown mean: " + name);
}

std::string MeanN::name() const {
  switch (family) {
    case Family::arithmetic: return "arithmetic";
    case Family::harmonic: return "harmonic";
    case Family::sagae: return "sagae-" + mean2_name(base);
    case Family::hansen: return "hansen-" + mean2_name(base);
  }
  return "?";
}

Mean2 MeanN::as_mean2() const {
  switch (family) {
    case Family::arithmetic: return Mean2::arithmetic;
    case Family::harmonic: return Mean2::harmonic;
    case Family::sagae:
    case Family::hansen: return base;
  }
  throw DomainError("unknown mean family");
}

AlgebraElement MeanN::operator()(const WeightVector& w,
                                 const ElementTuple& tuple) const {
  switch (family) {
    case Family::arithmetic: return arithmetic_mean_n(w, tuple);
    case Family::harmonic: return harmonic_mean_n(w, tuple);
    case Family::sagae: return sagae_tanabe(w, tuple, base);
    case Family::hansen: return hansen_inductive(w, tuple, base);
  }
  throw DomainError("unknown mean family");
}

YoungCheck young_check(const WeightVector& w, const ElementTuple& tuple,
                       double tol) {
  const AlgebraElement g = hansen_inductive(w, tuple, Mean2::geometric);
  const AlgebraElement h = harmonic_mean_n(w, tuple);
  const AlgebraElement a = arithmetic_mean_n(w, tuple);
  YoungCheck result;
  const double scale = std::max(1.0, norm(g));
  result.lower_violation = loewner_violation(h, g) / scale;
  result.upper_violation = loewner_violation(g, a) / scale;
  result.lower_ok = result.lower_violation <= tol;
  result.upper_ok = result.upper_violation <= tol;
  return result;
}

HansenProperty parse_hansen_property(const std::string& name) {
  if (name == "homogeneity") return HansenProperty::homogeneity;
  if (name == "monotonicity") return HansenProperty::monotonicity;
  if (name == "concavity") return HansenProperty::concavity;
  if (name == "congruence") return HansenProperty::congruence;
  if (name == "self-dual") return HansenProperty::self_dual;
  throw DomainError("unknown hansen property: " + name);
}

std::string hansen_property_name(HansenProperty p) {
  switch (p) {
    case HansenProperty::homogeneity: return "homogeneity";
    case HansenProperty::monotonicity: return "monotonicity";
    case HansenProperty::concavity: return "concavity";
    case HansenProperty::congruence: return "congruence";
    case HansenProperty::self_dual: return "self-dual";
  }
  return "?";
}

namespace {

ElementTuple sample_tuple(const std::shared_ptr<const Algebra>& alg, int n,
                          double cap, Rng& rng) {
  ElementTuple tuple;
  tuple.reserve(n);
  for (int k = 0; k < n; ++k) tuple.push_back(random_positive(alg, cap, rng));
  return tuple;
}

WeightVector sample_weights(int n, Rng& rng) {
  std::vector<double> w(n);
  for (double& x : w) x = rng.uniform(0.1, 1.0);
  return WeightVector(std::move(w));
}

ElementTuple inverted(const ElementTuple& tuple) {
  ElementTuple out;
  out.reserve(tuple.size());
  for (const AlgebraElement& a : tuple) out.push_back(inverse(a));
  return out;
}

struct SampleViolation {
  double main = 0.0;
  double invertible = 0.0;
};

SampleViolation one_property_sample(HansenProperty property,
                                    const PropertySampleConfig& cfg,
                                    std::uint64_t sample_seed) {
  Rng rng(sample_seed);
  const auto& alg = cfg.algebra;
  const int n = cfg.n;
  const WeightVector w = sample_weights(n, rng);
  const ElementTuple tuple = sample_tuple(alg, n, cfg.condition_cap, rng);
  const AlgebraElement g = hansen_inductive(w, tuple, Mean2::geometric);
  const double scale = std::max(1.0, norm(g));

  SampleViolation out;
  switch (property) {
    case HansenProperty::homogeneity: {
      ElementTuple scaled = tuple;
      double factor = 1.0;
      for (int k = 0; k < n; ++k) {
        const double alpha = rng.uniform(0.2, 5.0);
        scaled[k] = alpha * scaled[k];
        factor *= std::pow(alpha, w[k]);
      }
      const AlgebraElement lhs = hansen_inductive(w, scaled, Mean2::geometric);
      out.main = norm(lhs - factor * g) / std::max(1.0, norm(lhs));
      break;
    }
    case HansenProperty::monotonicity: {
      ElementTuple larger = tuple;
      for (int k = 0; k < n; ++k)
        larger[k] = larger[k] + random_psd(alg, norm(tuple[k]), rng);
      const AlgebraElement gb = hansen_inductive(w, larger, Mean2::geometric);
      out.main = loewner_violation(g, gb) / std::max(1.0, norm(gb));
      break;
    }
    case HansenProperty::concavity: {
      const int slot = rng.uniform_int(0, n - 1);
      const AlgebraElement x = random_positive(alg, cfg.condition_cap, rng);
      const AlgebraElement y = random_positive(alg, cfg.condition_cap, rng);
      ElementTuple tx = tuple, ty = tuple, tm = tuple;
      tx[slot] = x;
      ty[slot] = y;
      tm[slot] = 0.5 * (x + y);
      const AlgebraElement rhs =
          0.5 * hansen_inductive(w, tx, Mean2::geometric) +
          0.5 * hansen_inductive(w, ty, Mean2::geometric);
      const AlgebraElement lhs = hansen_inductive(w, tm, Mean2::geometric);
      out.main = loewner_violation(rhs, lhs) / std::max(1.0, norm(lhs));
      break;
    }
    case HansenProperty::congruence: {
      const Symmetry s = make_symmetry(alg, rng);
      ElementTuple cs;
      for (const AlgebraElement& a : tuple) cs.push_back(s.congruence(a));
      out.main = norm(s.congruence(g) -
                      hansen_inductive(w, cs, Mean2::geometric)) /
                 scale;
      const AlgebraElement c = random_positive(alg, cfg.condition_cap, rng);
      ElementTuple cc;
      for (const AlgebraElement& a : tuple) cc.push_back(quadratic_rep(c, a));
      out.invertible =
          norm(quadratic_rep(c, g) -
               hansen_inductive(w, cc, Mean2::geometric)) /
          std::max(1.0, norm(quadratic_rep(c, g)));
      break;
    }
    case HansenProperty::self_dual: {
      const AlgebraElement dual =
          inverse(hansen_inductive(w, inverted(tuple), Mean2::geometric));
      out.main = norm(dual - g) / scale;
      break;
    }
  }
  return out;
}

}  // namespace

PropertyReport hansen_property_check(HansenProperty property,
                                     const PropertySampleConfig& cfg) {
  if (!cfg.algebra) throw DomainError("hansen_property_check: null algebra");
  if (cfg.n < 2) throw DomainError("hansen_property_check requires n >= 2");
  std::vector<SampleViolation> per(cfg.samples);
  parallel_for(cfg.samples, cfg.exec, [&](int i) {
    per[i] = one_property_sample(property, cfg, mix_seed(cfg.seed, i));
  });
  PropertyReport report;
  report.property = property;
  report.samples = cfg.samples;
  for (const SampleViolation& v : per) {
    report.max_violation = std::max(report.max_violation, v.main);
    report.max_violation_invertible =
        std::max(report.max_violation_invertible, v.invertible);
  }
  report.pass = report.max_violation <= cfg.tol &&
                report.max_violation_invertible <= cfg.tol;
  return report;
}

}  // namespace jordan
