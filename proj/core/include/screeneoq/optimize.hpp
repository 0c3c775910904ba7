#pragma once

#include <vector>

#include "screeneoq/types.hpp"

namespace screeneoq {

enum class SolveMethod { ClosedForm, Approximate, Numeric };

/// An optimal (or candidate-optimal) policy with its profit rate.
struct Solution {
  double y_star = 0.0;
  double b_star = 0.0;
  double etpu_star = 0.0;
  double f_min = 0.0;
  SolveMethod method = SolveMethod::ClosedForm;
  std::vector<Diagnostic> diagnostics;
};

/// Second partials of f at a point, plus the Hessian determinant.
struct Hessian {
  double d2f_db2 = 0.0;
  double d2f_dy2 = 0.0;
  double d2f_dbdy = 0.0;
  double determinant = 0.0;
};

/// Closed-form optimum:
///   y* = sqrt(2KD / [hP1 + 2hA1D + 2h_d(P2 - A1 D) - h^2 R/((h+b)P3)])
///   B* = hR/(h+b) * y*
/// Throws NoFiniteOptimumError when the bracket is not positive (the
/// holding benefit of backordering swamps every holding cost). Appends
/// diagnostics when b == 0 or when the optimum cannot clear its own
/// backorder level for the worst-case defective fraction.
Solution optimal_policy(const Moments& m, const Scenario& scenario);

/// Minimizer of f over B at fixed y: B = hR/(h+b) * y.
double b_given_y(double order_size, const Moments& m, const Scenario& scenario);

/// AM-GM floor of f: P3 * sqrt(2KD * bracket). Coincides with f(y*, B*).
double amgm_lower_bound(const Moments& m, const Scenario& scenario);

/// Analytic second partials of f at the given policy:
///   f_BB = (h+b)/(Ry), f_yy = (h+b)B^2/(Ry^3) + 2KDP3/y^3,
///   f_By = -(h+b)B/(Ry^2), det = 2(h+b)KDP3/(Ry^4).
Hessian hessian_check(const Policy& policy, const Moments& m, const Scenario& scenario);

/// Independent oracle for optimal_policy: golden-section search on y with
/// the exact inner minimizer b_given_y. Converges the bracket to relative
/// 1e-10; a diagnostic is appended if the search ends pinned to a bracket
/// edge.
Solution numeric_optimum(const Moments& m, const Scenario& scenario);

/// Small-beta approximation for a single uniform stage (h_d must be 0):
///   y1 = sqrt(2KD(h+b) / (h [h(1-beta)D/x + b(1-beta - D beta/x)]))
///   B1 = h(2-beta)(1-beta-D/x) / (2(h+b)(1-beta)) * y1
/// etpu_star is evaluated with the exact moments, not the approximation.
Solution approx_policy_n1(const Scenario& scenario);

/// Single uniform stage solved through the explicit log closed form
/// (h_d must be 0). Agrees with optimal_policy to floating-point noise;
/// kept as a second algebraic route.
Solution exact_policy_n1_uniform(const Scenario& scenario);

/// Lot size limit as backordering becomes forbidden (b -> infinity):
/// sqrt(2KD / (hP1 + 2hA1D + 2h_d(P2 - A1 D))).
double b_infinite_limit(const Moments& m, const Scenario& scenario);

/// Salvage value below which storing defective items for return cannot
/// pay for their holding: (2/E[rho]) * sqrt(K h_d (P2/D - A1)).
double salvage_threshold(const Moments& m, const Scenario& scenario);

/// Break-even selling price in the no-returns setting (v and h_d forced
/// to zero), computed two ways: `closed_form` uses the direct radical
/// expression, `break_even` back-solves the profit-rate expression for
/// zero profit. When the two disagree beyond 1e-6 * s * D a diagnostic
/// reports both rather than silently preferring one.
struct SellingPriceBound {
  double closed_form = 0.0;
  double break_even = 0.0;
  std::vector<Diagnostic> diagnostics;
};
SellingPriceBound min_selling_price(const Moments& m, const Scenario& scenario);

}  // namespace screeneoq
