#include "jordan/lie_trotter.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace jordan {

namespace {

constexpr double kFloorFactor = 1e-12;
// Round-off in log(M(t))/t and in central differences grows like eps/t, so
// the exclusion floor carries a 1/t term on top of the constant part.
constexpr double kAmplifiedNoiseFactor = 2e-13;

double point_floor(double scale, double t) {
  return scale * std::max(kFloorFactor, kAmplifiedNoiseFactor / t);
}

void validate_grid(const std::vector<double>& t_grid, double epsilon) {
  if (t_grid.empty()) throw DomainError("empty t-grid");
  double prev = std::numeric_limits<double>::infinity();
  for (double t : t_grid) {
    if (!(t > 0.0) || t >= prev)
      throw DomainError("t-grid must be strictly decreasing and positive");
    if (t >= epsilon) {
      std::ostringstream os;
      os << "t = " << t << " outside curve domain (epsilon = " << epsilon
         << ")";
      throw DomainError(os.str());
    }
    prev = t;
  }
}

AlgebraElement log_over_t(const AlgebraElement& m, double t) {
  const SpectralDecomposition sd = spectral_decompose(m);
  for (double l : sd.eigenvalues) {
    if (l <= 0.0) {
      std::ostringstream os;
      os << "curve value not positive invertible at t = " << t;
      throw DomainError(os.str());
    }
  }
  return apply_spectral(sd, [t](double l) { return std::log(l) / t; });
}

}  // namespace

Curve curve_exp(const AlgebraElement& x) {
  const SpectralDecomposition sd = spectral_decompose(x);
  Curve c;
  c.evaluate = [sd](double t) {
    return apply_spectral(sd, [t](double l) { return std::exp(t * l); });
  };
  c.derivative_at_zero = x;
  c.epsilon = std::numeric_limits<double>::infinity();
  c.label = "exp";
  return c;
}

Curve curve_linear(const AlgebraElement& x) {
  const AlgebraElement unit = x.algebra_ptr()->unit();
  Curve c;
  c.evaluate = [unit, x](double t) { return unit + t * x; };
  c.derivative_at_zero = x;
  const double sigma = spectral_radius(x);
  c.epsilon = sigma > 0.0 ? 1.0 / (2.0 * sigma)
                          : std::numeric_limits<double>::infinity();
  c.label = "linear";
  return c;
}

Curve curve_resolvent(const AlgebraElement& x) {
  const AlgebraElement unit = x.algebra_ptr()->unit();
  Curve c;
  c.evaluate = [unit, x](double t) { return inverse(unit - t * x); };
  c.derivative_at_zero = x;
  const double sigma = spectral_radius(x);
  c.epsilon = sigma > 0.0 ? 1.0 / (2.0 * sigma)
                          : std::numeric_limits<double>::infinity();
  c.label = "resolvent";
  return c;
}

OrderFit fit_order(const std::vector<double>& t_grid,
                   const std::vector<double>& errors, double scale) {
  OrderFit fit;
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (size_t i = 0; i < t_grid.size(); ++i) {
    if (errors[i] <= point_floor(scale, t_grid[i])) continue;
    const double x = std::log(t_grid[i]);
    const double y = std::log(errors[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++fit.usable;
  }
  if (fit.usable < 2) {
    fit.exact = true;
    fit.slope = std::numeric_limits<double>::infinity();
    return fit;
  }
  const double denom = fit.usable * sxx - sx * sx;
  fit.slope = (fit.usable * sxy - sx * sy) / denom;
  return fit;
}

namespace {

ConvergenceReport build_report(const std::vector<double>& t_grid,
                               std::vector<double> errors,
                               AlgebraElement limit_target) {
  ConvergenceReport report;
  report.t_grid = t_grid;
  report.errors = std::move(errors);
  report.limit_target = std::move(limit_target);
  const double scale = 1.0 + norm(report.limit_target);
  report.error_floor = kFloorFactor * scale;
  const OrderFit fit = fit_order(report.t_grid, report.errors, scale);
  report.fitted_order = fit.slope;
  report.exact_at_floor = fit.exact;
  report.usable_points = fit.usable;
  return report;
}

}  // namespace

ConvergenceReport power_limit(const Curve& curve,
                              const std::vector<double>& t_grid) {
  validate_grid(t_grid, curve.epsilon);
  const AlgebraElement& target = curve.derivative_at_zero;
  std::vector<double> errors(t_grid.size());
  for (size_t i = 0; i < t_grid.size(); ++i) {
    const double t = t_grid[i];
    errors[i] = norm(log_over_t(curve.evaluate(t), t) - target);
  }
  return build_report(t_grid, std::move(errors), expm(target));
}

double lt_mean_error(const MeanN& mean, const WeightVector& w,
                     const std::vector<Curve>& curves, double t) {
  if (w.size() != static_cast<int>(curves.size()))
    throw DomainError("lt_mean_error: weight/curve count mismatch");
  ElementTuple values;
  values.reserve(curves.size());
  for (const Curve& c : curves) {
    if (!(std::abs(t) < c.epsilon))
      throw DomainError("lt_mean_error: t outside curve domain");
    values.push_back(c.evaluate(t));
  }
  AlgebraElement target = w[0] * curves[0].derivative_at_zero;
  for (int k = 1; k < w.size(); ++k)
    target += w[k] * curves[k].derivative_at_zero;
  const AlgebraElement m = mean(w, values);
  return norm(log_over_t(m, t) - target);
}

ConvergenceReport verify_lie_trotter(const MeanN& mean, const WeightVector& w,
                                     const std::vector<Curve>& curves,
                                     const std::vector<double>& t_grid,
                                     double min_order) {
  double eps = std::numeric_limits<double>::infinity();
  for (const Curve& c : curves) eps = std::min(eps, c.epsilon);
  validate_grid(t_grid, eps);

  std::vector<double> errors(t_grid.size());
  for (size_t i = 0; i < t_grid.size(); ++i)
    errors[i] = lt_mean_error(mean, w, curves, t_grid[i]);

  AlgebraElement target = w[0] * curves[0].derivative_at_zero;
  for (int k = 1; k < w.size(); ++k)
    target += w[k] * curves[k].derivative_at_zero;

  ConvergenceReport report =
      build_report(t_grid, std::move(errors), expm(target));
  report.min_order = min_order;

  // Monotone decay check; points at or near the floor are exempt.
  const double scale = 1.0 + norm(report.limit_target);
  report.monotone = true;
  for (size_t i = 0; i + 1 < report.errors.size(); ++i) {
    const double cur = report.errors[i];
    const double next = report.errors[i + 1];
    if (cur <= 10.0 * point_floor(scale, report.t_grid[i]) ||
        next <= 10.0 * point_floor(scale, report.t_grid[i + 1]))
      continue;
    if (next > cur) report.monotone = false;
  }
  report.pass = report.monotone &&
                (report.exact_at_floor || report.fitted_order >= min_order);
  return report;
}

std::vector<double> default_t_grid() { return dyadic_grid(0x1p-3, 0x1p-12); }

std::vector<double> dyadic_grid(double t_max, double t_min) {
  if (!(t_max > t_min) || !(t_min > 0.0))
    throw DomainError("dyadic_grid requires t_max > t_min > 0");
  std::vector<double> grid;
  for (double t = t_max; t >= t_min * (1.0 - 1e-12); t *= 0.5)
    grid.push_back(t);
  return grid;
}

DerivativeReport mean_derivative_at_identity(
    const MeanN& mean, const WeightVector& w, const ElementTuple& directions,
    const std::vector<double>& h_grid) {
  if (directions.empty())
    throw DomainError("mean_derivative_at_identity: empty directions");
  if (w.size() != static_cast<int>(directions.size()))
    throw DomainError("mean_derivative_at_identity: length mismatch");
  double rho = 0.0;
  for (const AlgebraElement& a : directions)
    rho = std::max(rho, spectral_radius(a));
  const double h_max =
      rho > 0.0 ? 1.0 / rho : std::numeric_limits<double>::infinity();
  validate_grid(h_grid, h_max);

  const auto alg = directions.front().algebra_ptr();
  const AlgebraElement unit = alg->unit();
  AlgebraElement target = w[0] * directions[0];
  for (int k = 1; k < w.size(); ++k) target += w[k] * directions[k];

  DerivativeReport report;
  report.h_grid = h_grid;
  report.errors.resize(h_grid.size());
  report.estimate = alg->zero();
  for (size_t i = 0; i < h_grid.size(); ++i) {
    const double h = h_grid[i];
    ElementTuple plus, minus;
    plus.reserve(directions.size());
    minus.reserve(directions.size());
    for (const AlgebraElement& a : directions) {
      plus.push_back(unit + h * a);
      minus.push_back(unit - h * a);
    }
    const AlgebraElement diff =
        (mean(w, plus) - mean(w, minus)) * (1.0 / (2.0 * h));
    report.errors[i] = norm(diff - target);
    if (i + 1 == h_grid.size()) report.estimate = diff;
  }
  const OrderFit fit = fit_order(h_grid, report.errors, 1.0 + norm(target));
  report.fitted_order = fit.slope;
  report.exact_at_floor = fit.exact;
  report.final_error = report.errors.back();
  return report;
}

SandwichReport sandwich_check(const MeanN& mean, const WeightVector& w,
                              const std::vector<ElementTuple>& samples,
                              double tol) {
  SandwichReport report;
  for (const ElementTuple& tuple : samples) {
    const AlgebraElement g = mean(w, tuple);
    const AlgebraElement h = harmonic_mean_n(w, tuple);
    const AlgebraElement a = arithmetic_mean_n(w, tuple);
    const double scale = std::max(1.0, norm(g));
    const double lo = loewner_violation(h, g) / scale;
    const double hi = loewner_violation(g, a) / scale;
    report.lower_violation = std::max(report.lower_violation, lo);
    report.upper_violation = std::max(report.upper_violation, hi);
    if (lo > tol) report.lower_ok = false;
    if (hi > tol) report.upper_ok = false;
    if (norm(g - h) / scale > tol) report.lower_equality = false;
    if (norm(g - a) / scale > tol) report.upper_equality = false;
  }
  return report;
}

}  // namespace jordan
