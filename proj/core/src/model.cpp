#include "screeneoq/model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "screeneoq/quadrature.hpp"
#include "screeneoq/simulate.hpp"

namespace screeneoq {

// ---------------------------------------------------------------------------
// DefectDist / Scenario members

DefectDist DefectDist::uniform_beta(double beta) {
  if (beta == 0.0) return point_mass(0.0);
  if (!(beta > 0.0 && beta < 1.0))
    throw DomainError("uniform_beta: beta must lie in [0, 1)");
  return DefectDist{Kind::UniformOnZeroBeta, beta};
}

DefectDist DefectDist::point_mass(double p) {
  if (!(p >= 0.0 && p < 1.0))
    throw DomainError("point_mass: p must lie in [0, 1)");
  return DefectDist{Kind::PointMass, p};
}

double DefectDist::mean() const {
  return kind == Kind::UniformOnZeroBeta ? 0.5 * value : value;
}

double DefectDist::mean_sq_complement() const {
  if (kind == Kind::UniformOnZeroBeta) {
    const double beta = value;
    return 1.0 - beta + beta * beta / 3.0;
  }
  return (1.0 - value) * (1.0 - value);
}

double DefectDist::sup() const { return value; }

double DefectDist::quantile(double u) const {
  return kind == Kind::UniformOnZeroBeta ? value * u : value;
}

double Scenario::annual_rate(std::size_t i) const {
  return stages[i].rate_per_min * minutes_per_year;
}

double Scenario::slowest_annual_rate() const {
  if (stages.empty()) throw DomainError("scenario has no screening stages");
  double slowest = annual_rate(0);
  for (std::size_t i = 1; i < stages.size(); ++i)
    slowest = std::min(slowest, annual_rate(i));
  return slowest;
}

double Scenario::max_defective_fraction() const {
  double pass_all = 1.0;
  for (const Stage& st : stages) pass_all *= 1.0 - st.defect.sup();
  return 1.0 - pass_all;
}

// ---------------------------------------------------------------------------
// Screened-out proportions

std::vector<double> rho_proportions(std::span<const double> defect_fractions) {
  std::vector<double> props;
  props.reserve(defect_fractions.size());
  double survive = 1.0;  // share that passed every earlier screen
  for (double p : defect_fractions) {
    if (!(p >= 0.0 && p < 1.0))
      throw DomainError("rho_proportions: defect fraction outside [0, 1)");
    props.push_back(survive * p);
    survive *= 1.0 - p;
  }
  return props;
}

std::vector<double> expected_rho_proportions(std::span<const Stage> stages) {
  std::vector<double> means;
  means.reserve(stages.size());
  for (const Stage& st : stages) means.push_back(st.defect.mean());
  return rho_proportions(means);
}

// ---------------------------------------------------------------------------
// Moments

namespace {

bool stages_sorted_by_rate(const Scenario& sc) {
  for (std::size_t i = 1; i < sc.stages.size(); ++i)
    if (sc.annual_rate(i - 1) < sc.annual_rate(i)) return false;
  return true;
}

// E[(1-rho)/((1-rho) - gamma)] for one uniform stage: the explicit log form.
double clearing_expectation_uniform1(double beta, double gamma) {
  return 1.0 + gamma / beta * std::log((1.0 - gamma) / (1.0 - beta - gamma));
}

struct ClearingExpectation {
  double value = 0.0;
  RMethod method = RMethod::PointEvaluation;
  double std_error = 0.0;
};

// E[W/(W - gamma)] with W = prod(1 - p_i). Point-mass stages contribute a
// constant factor; uniform stages are integrated by tensor Gauss-Legendre
// while their count stays small, by Monte Carlo beyond that.
ClearingExpectation clearing_expectation(const Scenario& sc, double gamma,
                                         const MomentOptions& opt) {
  double fixed = 1.0;
  std::vector<double> betas;
  for (const Stage& st : sc.stages) {
    if (st.defect.is_random())
      betas.push_back(st.defect.value);
    else
      fixed *= 1.0 - st.defect.value;
  }

  if (betas.empty()) {
    return {fixed / (fixed - gamma), RMethod::PointEvaluation, 0.0};
  }
  if (sc.stages.size() == 1) {
    return {clearing_expectation_uniform1(betas[0], gamma),
            RMethod::ClosedFormLog, 0.0};
  }
  if (betas.size() <= static_cast<std::size_t>(opt.max_quadrature_dims)) {
    const double value = tensor_uniform_expectation(
        betas, opt.quadrature_nodes, [&](std::span<const double> p) {
          double w = fixed;
          for (double pi : p) w *= 1.0 - pi;
          return w / (w - gamma);
        });
    return {value, RMethod::GaussLegendre, 0.0};
  }

  // Large stage counts: plain Monte Carlo with a fixed-seed stream keeps
  // memory flat and the result reproducible.
  double sum = 0.0, sumsq = 0.0;
  const std::uint64_t samples = opt.mc_samples;
  for (std::uint64_t k = 0; k < samples; ++k) {
    CycleRng rng(opt.mc_seed, k);
    double w = fixed;
    for (double beta : betas) w *= 1.0 - beta * rng.next_unit();
    const double g = w / (w - gamma);
    sum += g;
    sumsq += g * g;
  }
  const double n = static_cast<double>(samples);
  const double mean = sum / n;
  const double var = std::max(0.0, (sumsq - n * mean * mean) / (n - 1.0));
  return {mean, RMethod::MonteCarlo, std::sqrt(var / n)};
}

}  // namespace

Moments compute_moments(const Scenario& scenario, const MomentOptions& options) {
  if (scenario.stages.empty())
    throw DomainError("compute_moments: scenario has no screening stages");
  if (!stages_sorted_by_rate(scenario))
    throw DomainError(
        "compute_moments: stages must be sorted by non-increasing annualized "
        "rate (see canonicalize_stages)");
  if (!(scenario.demand > 0.0)) throw DomainError("compute_moments: demand must be > 0");

  const double xn = scenario.slowest_annual_rate();
  if (!(xn > scenario.demand))
    throw InfeasibleError("compute_moments: slowest screening rate does not exceed demand");

  const double gamma = scenario.demand / xn;
  const double rho_max = scenario.max_defective_fraction();
  if (rho_max > 1.0 - gamma) {
    std::ostringstream msg;
    msg << "compute_moments: worst-case defective fraction rho_max = " << rho_max
        << " exceeds 1 - D/x_n = " << (1.0 - gamma)
        << "; shortages inside the screening window are possible";
    throw InfeasibleError(msg.str());
  }

  Moments m;
  m.e_rho_i = expected_rho_proportions(scenario.stages);
  m.e_rho = 0.0;
  for (double e : m.e_rho_i) m.e_rho += e;

  m.p1 = 1.0;
  for (const Stage& st : scenario.stages) m.p1 *= st.defect.mean_sq_complement();
  m.p2 = (1.0 - m.e_rho) - m.p1;
  m.p3 = 1.0 / (1.0 - m.e_rho);
  m.p4 = m.e_rho * m.p3;

  m.a1 = 0.0;
  for (std::size_t i = 0; i < scenario.stages.size(); ++i)
    m.a1 += m.e_rho_i[i] / scenario.annual_rate(i);

  m.a2 = 0.0;
  for (const Stage& st : scenario.stages) m.a2 += st.unit_cost;
  for (std::size_t i = 0; i + 1 < scenario.stages.size(); ++i) {
    double later = 0.0;
    for (std::size_t k = i + 1; k < scenario.stages.size(); ++k)
      later += scenario.stages[k].unit_cost;
    m.a2 -= m.e_rho_i[i] * later;
  }

  const ClearingExpectation ce = clearing_expectation(scenario, gamma, options);
  m.r = (1.0 - m.e_rho) / ce.value;
  m.r_method = ce.method;
  m.r_std_error =
      ce.method == RMethod::MonteCarlo ? m.r / ce.value * ce.std_error : 0.0;
  return m;
}

// ---------------------------------------------------------------------------
// Validation

namespace {

void require_nonnegative(std::vector<Diagnostic>& out, const char* name, double v) {
  if (v < 0.0) {
    std::ostringstream msg;
    msg << name << " must be >= 0 (got " << v << ")";
    out.push_back({"negative_field", msg.str()});
  }
}

}  // namespace

std::vector<Diagnostic> validate_scenario(const Scenario& sc) {
  std::vector<Diagnostic> out;

  if (!(sc.demand > 0.0))
    out.push_back({"demand", "demand must be > 0"});
  if (!(sc.minutes_per_year > 0.0))
    out.push_back({"minutes_per_year", "minutes_per_year must be > 0"});
  require_nonnegative(out, "order_cost", sc.order_cost);
  require_nonnegative(out, "purchase_cost", sc.purchase_cost);
  require_nonnegative(out, "sell_price", sc.sell_price);
  require_nonnegative(out, "salvage", sc.salvage);
  require_nonnegative(out, "hold_good", sc.hold_good);
  require_nonnegative(out, "hold_defective", sc.hold_defective);
  require_nonnegative(out, "backorder_cost", sc.backorder_cost);
  if (!(sc.sell_price > sc.salvage))
    out.push_back({"salvage_vs_price", "salvage value must be below the selling price"});

  if (sc.stages.empty())
    out.push_back({"stages", "at least one screening stage is required"});

  for (std::size_t i = 0; i < sc.stages.size(); ++i) {
    const Stage& st = sc.stages[i];
    if (!(st.rate_per_min > 0.0)) {
      std::ostringstream msg;
      msg << "stage " << st.label << ": screening rate must be > 0";
      out.push_back({"stage_rate", msg.str()});
    }
    if (st.unit_cost < 0.0) {
      std::ostringstream msg;
      msg << "stage " << st.label << ": unit screening cost must be >= 0";
      out.push_back({"stage_cost", msg.str()});
    }
  }

  const bool rates_usable = !sc.stages.empty() && sc.minutes_per_year > 0.0 &&
                            std::all_of(sc.stages.begin(), sc.stages.end(),
                                        [](const Stage& st) { return st.rate_per_min > 0.0; });
  if (!rates_usable) return out;

  if (!stages_sorted_by_rate(sc))
    out.push_back({"stage_order",
                   "stages are not sorted by non-increasing annualized rate"});

  if (sc.demand > 0.0) {
    for (std::size_t i = 0; i < sc.stages.size(); ++i) {
      if (!(sc.annual_rate(i) > sc.demand)) {
        std::ostringstream msg;
        msg << "stage " << sc.stages[i].label << ": annualized screening rate "
            << sc.annual_rate(i) << " does not exceed the demand rate " << sc.demand;
        out.push_back({"assumption3", msg.str()});
      }
    }
    const double xn = sc.slowest_annual_rate();
    if (xn > sc.demand) {
      const double rho_max = sc.max_defective_fraction();
      const double bound = 1.0 - sc.demand / xn;
      if (rho_max > bound) {
        std::ostringstream msg;
        msg << "worst-case defective fraction rho_max = " << rho_max
            << " exceeds 1 - D/x_n = " << bound;
        out.push_back({"assumption5", msg.str()});
      }
    }
  }
  return out;
}

bool canonicalize_stages(Scenario& scenario) {
  const double mpy = scenario.minutes_per_year;
  std::vector<Stage> before = scenario.stages;
  std::stable_sort(scenario.stages.begin(), scenario.stages.end(),
                   [mpy](const Stage& a, const Stage& b) {
                     return a.rate_per_min * mpy > b.rate_per_min * mpy;
                   });
  return scenario.stages != before;
}

Scenario select_stages(const Scenario& catalog, std::span<const std::string> labels) {
  Scenario out = catalog;
  out.stages.clear();
  for (const std::string& label : labels) {
    auto it = std::find_if(catalog.stages.begin(), catalog.stages.end(),
                           [&](const Stage& st) { return st.label == label; });
    if (it == catalog.stages.end()) {
      std::ostringstream msg;
      msg << "unknown stage label '" << label << "'; available:";
      for (const Stage& st : catalog.stages) msg << ' ' << st.label;
      throw DomainError(msg.str());
    }
    out.stages.push_back(*it);
  }
  return out;
}

}  // namespace screeneoq
