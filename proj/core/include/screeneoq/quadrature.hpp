#pragma once

#include <functional>
#include <span>
#include <vector>

namespace screeneoq {

/// Nodes on (-1, 1) and weights summing to 2.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule via Newton iteration on the Legendre
/// recurrence. Accurate to ~1e-15 for n up to a few hundred.
QuadratureRule gauss_legendre(int n);

/// E[f(p)] for independent p_i ~ Uniform(0, beta_i), evaluated with a
/// tensor-product Gauss-Legendre rule (nodes_per_dim points per axis).
/// The argument passed to f has one entry per beta, in order.
double tensor_uniform_expectation(
    std::span<const double> betas, int nodes_per_dim,
    const std::function<double(std::span<const double>)>& f);

}  // namespace screeneoq
