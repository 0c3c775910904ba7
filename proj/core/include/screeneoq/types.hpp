#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace screeneoq {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Scenario, policy or realization violates a model feasibility requirement.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The economics admit no finite optimal lot size.
class NoFiniteOptimumError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// 8 h/day * 60 min/h * 365 days: annualization factor for per-minute
/// screening rates. Calibrated against the bundled reference results.
inline constexpr double kDefaultMinutesPerYear = 175200.0;

/// Distribution of the defective fraction produced by one screening process.
///
/// UniformOnZeroBeta is the production model; PointMass collapses the
/// randomness so that expectation formulas can be checked against plain
/// deterministic arithmetic.
struct DefectDist {
  enum class Kind { UniformOnZeroBeta, PointMass };

  Kind kind = Kind::PointMass;
  double value = 0.0;  // beta for UniformOnZeroBeta, the atom for PointMass

  /// Uniform on (0, beta), 0 < beta < 1. beta == 0 degenerates to a point
  /// mass at zero so that moment formulas never divide by beta.
  static DefectDist uniform_beta(double beta);
  /// Point mass at p, 0 <= p < 1.
  static DefectDist point_mass(double p);

  double mean() const;
  /// E[(1 - p)^2]
  double mean_sq_complement() const;
  /// Largest realizable defective fraction (supremum of the support).
  double sup() const;
  bool is_random() const { return kind == Kind::UniformOnZeroBeta; }
  /// Inverse CDF at u in [0, 1).
  double quantile(double u) const;

  bool operator==(const DefectDist&) const = default;
};

/// One screening process: rate (units/minute), per-unit cost, defect model.
struct Stage {
  double rate_per_min = 0.0;
  double unit_cost = 0.0;
  DefectDist defect{};
  std::string label;

  bool operator==(const Stage&) const = default;
};

/// Full economic environment for one product.
///
/// Monetary fields are currency per unit (or per order for order_cost);
/// demand and holding/backorder rates are per year. Screening stages are
/// expected in non-increasing order of annualized rate; canonicalize_stages
/// establishes that order.
struct Scenario {
  double demand = 0.0;          // D, units/year
  double order_cost = 0.0;      // K, currency/order
  double purchase_cost = 0.0;   // c, currency/unit
  double sell_price = 0.0;      // s, currency/unit
  double salvage = 0.0;         // v, currency/unit
  double hold_good = 0.0;       // h, currency/unit/year
  double hold_defective = 0.0;  // h_d, currency/unit/year
  double backorder_cost = 0.0;  // b, currency/unit/year
  std::vector<Stage> stages;
  double minutes_per_year = kDefaultMinutesPerYear;

  double annual_rate(std::size_t i) const;
  /// Smallest annualized screening rate (the bottleneck of the cascade).
  double slowest_annual_rate() const;
  /// Worst-case total defective fraction: 1 - prod_i (1 - sup p_i).
  double max_defective_fraction() const;

  bool operator==(const Scenario&) const = default;
};

/// A decision pair: lot size y and maximum backorder level B.
struct Policy {
  double order_size = 0.0;
  double max_backorder = 0.0;
};

/// How the clearing-rate expectation behind Moments::r was computed.
enum class RMethod { PointEvaluation, ClosedFormLog, GaussLegendre, MonteCarlo };

/// All distribution-derived scalars consumed by the cost and policy formulas.
struct Moments {
  std::vector<double> e_rho_i;  // E[rho_i] per stage, in stage order
  double e_rho = 0.0;           // E[rho] = sum of e_rho_i
  double p1 = 0.0;              // E[(1-rho)^2]
  double p2 = 0.0;              // E[rho(1-rho)]
  double p3 = 0.0;              // 1 / (1 - E[rho])
  double p4 = 0.0;              // E[rho] / (1 - E[rho])
  double r = 0.0;               // (1-E[rho]) / E[(1-rho)/((1-rho)-D/x_n)]
  double a1 = 0.0;              // sum E[rho_i]/x_i, years/unit
  double a2 = 0.0;              // effective screening cost, currency/unit
  RMethod r_method = RMethod::PointEvaluation;
  double r_std_error = 0.0;     // nonzero only when r_method == MonteCarlo
};

/// One reported rule violation from validate_scenario.
struct Diagnostic {
  std::string code;
  std::string message;
};

}  // namespace screeneoq
