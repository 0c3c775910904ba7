#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "screeneoq/model.hpp"
#include "screeneoq/types.hpp"

namespace screeneoq::reference {

/// The canonical seven-process benchmark scenario used by reproduce-tables
/// and the regression suite: D = 50000/yr, K = 100, c = 25, s = 50, v = 20,
/// h = 5, h_d = 0, b = 10, with stages S1..S7.
Scenario benchmark_scenario();

/// Reference single-stage results: exact optimum and the small-beta
/// approximation, with the profit rate at each policy.
struct SingleStageRef {
  const char* label;
  double y_star, b_star, etpu_star;
  double y_approx, b_approx, etpu_approx;
};

/// Reference results for a stage combination.
struct ComboRef {
  std::array<const char*, 3> labels;  // unused trailing entries are nullptr
  int n;
  double y_star, b_star, etpu_star;
};

std::span<const SingleStageRef> single_stage_refs();  // S1..S7
std::span<const ComboRef> pair_refs();                // 12 two-stage combos
std::span<const ComboRef> triple_refs();              // 12 three-stage combos

/// Comparison tolerances. Single-stage cells use policy_rel on y*/B* and
/// etpu_abs on the profit rate; combination cells use combo_policy_rel and
/// combo_etpu_rel.
struct Tolerances {
  double policy_rel = 1e-4;
  double etpu_abs = 1.0;
  double combo_policy_rel = 1e-3;
  double combo_etpu_rel = 1e-5;
};

struct CellCheck {
  std::string combo;      // e.g. "S1" or "S3+S5+S7"
  std::string metric;     // "y*", "B*", "ETPU*", "y1*", "B1*", "ETPU1*"
  double computed = 0.0;
  double reference = 0.0;
  double deviation = 0.0;  // relative, or absolute where the tolerance is
  bool relative = true;
  double tolerance = 0.0;
  bool pass = false;
};

/// Recomputes every reference cell from `catalog` (must contain stages
/// labelled S1..S7) and compares against the stored values.
std::vector<CellCheck> check_reference_tables(const Scenario& catalog,
                                              const MomentOptions& options = {},
                                              const Tolerances& tol = {});

}  // namespace screeneoq::reference
