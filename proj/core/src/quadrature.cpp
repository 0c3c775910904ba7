#include "screeneoq/quadrature.hpp"

#include <cmath>
#include <cstddef>
#include <numbers>

#include "screeneoq/types.hpp"

namespace screeneoq {

QuadratureRule gauss_legendre(int n) {
  if (n < 1) throw DomainError("gauss_legendre: node count must be >= 1");
  QuadratureRule rule;
  rule.nodes.assign(static_cast<std::size_t>(n), 0.0);
  rule.weights.assign(static_cast<std::size_t>(n), 0.0);

  const int half = (n + 1) / 2;  // roots come in +- pairs
  for (int i = 0; i < half; ++i) {
    // Chebyshev-like initial guess, then Newton on P_n(z).
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      dp = n * (z * p0 - p1) / (z * z - 1.0);
      const double step = p0 / dp;
      z -= step;
      if (std::abs(step) < 1e-15) break;
    }
    rule.nodes[static_cast<std::size_t>(i)] = -z;
    rule.nodes[static_cast<std::size_t>(n - 1 - i)] = z;
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    rule.weights[static_cast<std::size_t>(i)] = w;
    rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
  }
  return rule;
}

double tensor_uniform_expectation(
    std::span<const double> betas, int nodes_per_dim,
    const std::function<double(std::span<const double>)>& f) {
  const std::size_t dims = betas.size();
  if (dims == 0) {
    return f({});
  }
  for (double beta : betas) {
    if (!(beta > 0.0)) throw DomainError("tensor_uniform_expectation: beta must be > 0");
  }
  const QuadratureRule rule = gauss_legendre(nodes_per_dim);
  const std::size_t nn = rule.nodes.size();

  // Per-axis points mapped to (0, beta); weights normalized to sum to 1,
  // which absorbs the 1/beta density.
  std::vector<std::vector<double>> pts(dims), wts(dims);
  for (std::size_t d = 0; d < dims; ++d) {
    pts[d].resize(nn);
    wts[d].resize(nn);
    for (std::size_t j = 0; j < nn; ++j) {
      pts[d][j] = betas[d] * 0.5 * (rule.nodes[j] + 1.0);
      wts[d][j] = 0.5 * rule.weights[j];
    }
  }

  std::vector<std::size_t> idx(dims, 0);
  std::vector<double> p(dims);
  double total = 0.0;
  for (;;) {
    double w = 1.0;
    for (std::size_t d = 0; d < dims; ++d) {
      p[d] = pts[d][idx[d]];
      w *= wts[d][idx[d]];
    }
    total += w * f(p);

    // odometer increment over the tensor grid
    std::size_t d = 0;
    while (d < dims && ++idx[d] == nn) {
      idx[d] = 0;
      ++d;
    }
    if (d == dims) break;
  }
  return total;
}

}  // namespace screeneoq
