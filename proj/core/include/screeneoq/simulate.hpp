#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "screeneoq/types.hpp"

namespace screeneoq {

/// Deterministic per-cycle random stream.
///
/// The stream for cycle k depends only on (seed, k), so cycles can be
/// evaluated in any order (or concurrently) and still reproduce the serial
/// results bit for bit.
class CycleRng {
 public:
  CycleRng(std::uint64_t seed, std::uint64_t cycle);

  /// Next value in [0, 1), 53-bit resolution.
  double next_unit();

 private:
  std::uint64_t state_;
};

struct SimConfig {
  std::uint64_t cycles = 100'000;
  std::uint64_t seed = 0;
  /// Evaluate cycles in antithetic pairs (u, 1-u). An odd cycle count is
  /// rounded up to complete the last pair.
  bool antithetic = false;
  /// Keep the per-cycle (profit, length, rho) trace in the result.
  bool keep_trace = false;
};

struct CycleOutcome {
  double profit = 0.0;
  double length = 0.0;
  double rho = 0.0;
};

struct SimResult {
  /// Ratio-of-sums renewal estimator: sum(profit) / sum(length).
  double etpu_estimate = 0.0;
  /// Delta-method standard error of the ratio; absent with fewer than two
  /// aggregation units.
  std::optional<double> std_error;
  double mean_cycle_length = 0.0;
  std::uint64_t cycles_run = 0;
  std::uint64_t infeasible_cycles = 0;
  std::vector<CycleOutcome> trace;
};

/// Defect fractions for one cycle drawn from the stage distributions.
/// With `antithetic` set the complementary uniforms are used.
std::vector<double> sample_defects(const Scenario& scenario, std::uint64_t seed,
                                   std::uint64_t cycle, bool antithetic);

/// Exact profit and length of one realized cycle, every cost integral in
/// closed form. Throws InfeasibleError for realizations whose backorders
/// cannot be cleared.
std::pair<double, double> simulate_cycle(const Policy& policy,
                                         std::span<const double> sampled_p,
                                         const Scenario& scenario);

/// Long-run profit rate by renewal reward over sampled cycles. Infeasible
/// realizations are counted and excluded; if every cycle is infeasible an
/// InfeasibleError is thrown.
SimResult estimate_etpu(const Policy& policy, const Scenario& scenario,
                        const SimConfig& config);

struct TrajectoryPoint {
  double time = 0.0;             // years from arrival
  double good_level = 0.0;       // stock on hand awaiting sale or screening
  double defective_level = 0.0;  // defective warehouse, cleared at cycle end
  double backorder_level = 0.0;  // outstanding backordered demand
};

/// Piecewise-linear inventory paths of one realized cycle: a uniform grid
/// of `samples_per_cycle` points merged with the exact breakpoints, with
/// jump times emitted twice (left and right limits) so that trapezoid
/// integration of the good path is exact up to the two slope kinks.
std::vector<TrajectoryPoint> trajectory(const Policy& policy,
                                        std::span<const double> sampled_p,
                                        const Scenario& scenario,
                                        std::size_t samples_per_cycle);

}  // namespace screeneoq
