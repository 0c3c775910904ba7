#pragma once

#include <span>

#include "screeneoq/types.hpp"

namespace screeneoq {

/// Phases of one replenishment cycle, all in years.
///
///   t_cycle : (1-rho) y / D, full cycle length
///   t1      : B / D, backorder build-up at the end of the cycle
///   t2      : t_cycle - t1 = ((1-rho)y - B)/D, stock-on-hand interval
///   t3      : B / ((1-rho) x_n - D), backorder clearing after arrival
///   t4      : t2 - t3, positive stock remaining after clearing
struct CycleTiming {
  double t_cycle = 0.0;
  double t1 = 0.0;
  double t2 = 0.0;
  double t3 = 0.0;
  double t4 = 0.0;
};

/// Revenue and the six per-cycle cost components, plus their net.
struct CycleBreakdown {
  double revenue = 0.0;
  double purchase = 0.0;
  double screening = 0.0;
  double hold_good = 0.0;
  double hold_defective = 0.0;
  double shortage = 0.0;
  double ordering = 0.0;
  double net_profit = 0.0;
};

/// Cycle phase lengths for a realized defective fraction.
/// Throws InfeasibleError when (1-rho) x_n <= D (good items emerge too
/// slowly to serve demand) or when t4 < 0 (the backorder level cannot be
/// cleared before screening ends).
CycleTiming cycle_timing(const Policy& policy, double rho, const Scenario& scenario);

/// (1-rho) y s + rho y v. Accepts the closed interval rho in [0, 1]; the
/// boundary rho = 1 is a test probe, analytics never reach it.
double revenue(double order_size, double rho, const Scenario& scenario);

/// Sum over stages of d_i * (share still in play when S_i runs) * y.
double screening_cost(double order_size, std::span<const double> rho_props,
                      std::span<const Stage> stages);

/// h * [((1-rho)y - B)^2/(2D) + B^2/(2((1-rho)x_n - D)) + sum rho_i y^2/x_i].
double holding_cost_good(const Policy& policy, double rho,
                         std::span<const double> rho_props, const Scenario& scenario);

/// h_d * [rho(1-rho)/D - sum rho_i/x_i] * y^2.
double holding_cost_defective(double order_size, std::span<const double> rho_props,
                              double rho, const Scenario& scenario);

/// b * (1-rho) / (2 D ((1-rho) - D/x_n)) * B^2.
double shortage_cost(const Policy& policy, double rho, const Scenario& scenario);

/// Every component of one realized cycle. Shared by the simulator and the
/// deterministic tests; the expectation-level functions below use the same
/// algebra with moments substituted.
CycleBreakdown cycle_breakdown(const Policy& policy,
                               std::span<const double> defect_fractions,
                               const Scenario& scenario);

/// Expected net profit per cycle, ETP(y, B).
double expected_net_profit(const Policy& policy, const Moments& m, const Scenario& scenario);

/// Expected cycle length E[T] = (1 - E[rho]) y / D.
double expected_cycle_length(double order_size, const Moments& m, const Scenario& scenario);

/// Renewal-reward profit rate ETPU(y, B) = ETP / E[T], written in its
/// expanded per-year form.
double etpu(const Policy& policy, const Moments& m, const Scenario& scenario);

/// The policy-dependent part of the profit rate, to be minimized:
/// etpu == profit_rate_constant - f_objective at every (y, B).
double f_objective(const Policy& policy, const Moments& m, const Scenario& scenario);

/// s D + v D P4 - (c + A2) D P3: the policy-independent profit-rate terms.
double profit_rate_constant(const Moments& m, const Scenario& scenario);

}  // namespace screeneoq
