#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "screeneoq/types.hpp"

namespace screeneoq {

/// Per-stage screened-out proportions for one realized defect vector:
/// rho_1 = p_1, rho_i = p_i * prod_{k<i}(1 - p_k). Their sum equals
/// 1 - prod_i(1 - p_i). Each p_i must lie in [0, 1).
std::vector<double> rho_proportions(std::span<const double> defect_fractions);

/// E[rho_i] = E[p_i] * prod_{k<i}(1 - E[p_k]); exact under independence.
std::vector<double> expected_rho_proportions(std::span<const Stage> stages);

/// Knobs for the expectation machinery behind compute_moments.
struct MomentOptions {
  /// Tensor Gauss-Legendre nodes per random dimension.
  int quadrature_nodes = 64;
  /// Quadrature is used while the number of random (uniform) dimensions is
  /// at most this; beyond it the clearing-rate expectation falls back to
  /// Monte Carlo, which keeps cost linear in the dimension count.
  int max_quadrature_dims = 3;
  std::uint64_t mc_samples = 10'000'000;
  std::uint64_t mc_seed = 0x5ce11ed5eedULL;
};

/// All expectation-derived scalars for a validated scenario.
///
/// Stages must already be in non-increasing annualized-rate order (see
/// canonicalize_stages). Throws InfeasibleError when the worst-case
/// defective fraction can stall backorder clearing (the support check on
/// rho_max), DomainError on structural problems.
Moments compute_moments(const Scenario& scenario, const MomentOptions& options = {});

/// Reports every violated model assumption; empty means the scenario is
/// usable as-is. Never throws.
std::vector<Diagnostic> validate_scenario(const Scenario& scenario);

/// Stable-sorts stages by descending annualized rate (ties keep input
/// order). Returns true if the order changed.
bool canonicalize_stages(Scenario& scenario);

/// Scenario restricted to the named stages, in the order given. Unknown
/// labels raise DomainError listing the available ones.
Scenario select_stages(const Scenario& catalog, std::span<const std::string> labels);

}  // namespace screeneoq
