#pragma once

#include <functional>
#include <string>
#include <vector>

#include "jordan/algebra.hpp"
#include "jordan/meansn.hpp"

namespace jordan {

/// A differentiable path through the identity of the positive cone, with its
/// derivative at 0 supplied analytically (never finite-differenced).
struct Curve {
  std::function<AlgebraElement(double)> evaluate;
  AlgebraElement derivative_at_zero;
  double epsilon = 0.0;  ///< domain half-width; evaluate(t) valid for |t| < epsilon
  std::string label;
};

/// t -> exp(tX); derivative X; unrestricted domain.
Curve curve_exp(const AlgebraElement& x);
/// t -> I + tX; derivative X; epsilon = 1 / (2 sigma(X)).
Curve curve_linear(const AlgebraElement& x);
/// t -> (I - tX)^-1; derivative X; epsilon = 1 / (2 sigma(X)).
Curve curve_resolvent(const AlgebraElement& x);

/// Outcome of a power-limit / mean-limit experiment over a t-grid.
/// Errors are measured in the log domain: e(t) = ||log(M(t))/t - target||.
/// Grid points at round-off level -- below
/// (1 + ||target||) * max(1e-12, 2e-13/t), the constant floor plus the 1/t
/// amplification of log-domain round-off -- are excluded from the order
/// fit; when fewer than 2 usable points remain the decay is flagged exact
/// and fitted_order is +infinity.
struct ConvergenceReport {
  std::vector<double> t_grid;  ///< strictly decreasing, positive
  std::vector<double> errors;
  double fitted_order = 0.0;
  bool exact_at_floor = false;
  int usable_points = 0;
  double error_floor = 0.0;
  AlgebraElement limit_target;

  bool pass = true;        ///< set by verify_lie_trotter
  bool monotone = true;    ///< errors non-increasing above the floor
  double min_order = 0.0;  ///< threshold used by verify_lie_trotter

  double terminal_error() const { return errors.back(); }
};

/// Least-squares slope of log(error) against log(t) over usable points
/// (those above the per-point floor derived from `scale` = 1 + ||target||).
struct OrderFit {
  double slope = 0.0;
  int usable = 0;
  bool exact = false;
};
OrderFit fit_order(const std::vector<double>& t_grid,
                   const std::vector<double>& errors, double scale);

/// Verifies e^{gamma'(0)} = lim gamma(t)^{1/t} on the grid:
/// e(t) = ||log(gamma(t))/t - gamma'(0)||. The grid must lie in
/// (0, epsilon), strictly decreasing; non-positive gamma(t) raises a
/// DomainError naming t.
ConvergenceReport power_limit(const Curve& curve,
                              const std::vector<double>& t_grid);

/// ||log(G_n(w; gamma_1(t), ..., gamma_n(t)))/t - sum_k w_k gamma_k'(0)||.
double lt_mean_error(const MeanN& mean, const WeightVector& w,
                     const std::vector<Curve>& curves, double t);

/// Runs lt_mean_error over the grid; the report passes iff the errors
/// decrease monotonically (floor saturation allowed) and the fitted order
/// reaches min_order (exact decay always passes).
ConvergenceReport verify_lie_trotter(const MeanN& mean, const WeightVector& w,
                                     const std::vector<Curve>& curves,
                                     const std::vector<double>& t_grid,
                                     double min_order);

/// Default grid 2^-3, 2^-4, ..., 2^-12.
std::vector<double> default_t_grid();
/// Powers of two from t_max down to the last value >= t_min.
std::vector<double> dyadic_grid(double t_max, double t_min);

/// Central-difference derivative of the mean at the identity tuple along
/// `directions`, compared against sum_k w_k A_k over the h-grid.
struct DerivativeReport {
  AlgebraElement estimate;  ///< from the smallest h
  std::vector<double> h_grid;
  std::vector<double> errors;
  double fitted_order = 0.0;
  bool exact_at_floor = false;
  double final_error = 0.0;
};

DerivativeReport mean_derivative_at_identity(const MeanN& mean,
                                             const WeightVector& w,
                                             const ElementTuple& directions,
                                             const std::vector<double>& h_grid);

/// Checks the sandwich H_n <= G_n <= A_n (Loewner, slack tol * scale) on a
/// batch of tuples; the hypothesis gate for the Lie-Trotter
/// characterization.
struct SandwichReport {
  bool lower_ok = true;
  bool upper_ok = true;
  double lower_violation = 0.0;
  double upper_violation = 0.0;
  bool lower_equality = true;  ///< G coincides with H_n on every sample
  bool upper_equality = true;  ///< G coincides with A_n on every sample
};

SandwichReport sandwich_check(const MeanN& mean, const WeightVector& w,
                              const std::vector<ElementTuple>& samples,
                              double tol);

}  // namespace jordan
