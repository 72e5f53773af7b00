// Copyright 2026 The qnmlab Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <stdexcept>

#include "qnmlab/numerics.hpp"

namespace qnmlab
{

QuadratureRule gauss_legendre(int n)
{
  if (n < 1)
  {
    throw std::invalid_argument("gauss_legendre: need at least one node");
  }
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  // Newton on P_n from the Chebyshev-like initial guess; nodes are symmetric.
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i)
  {
    double x = std::cos(pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it)
    {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 1; j <= n; ++j)
      {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p2) / j;
      }
      dp = n * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16)
      {
        break;
      }
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

QuadratureRule gauss_legendre(int n, double a, double b)
{
  auto rule = gauss_legendre(n);
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  for (int i = 0; i < n; ++i)
  {
    rule.nodes[i] = mid + half * rule.nodes[i];
    rule.weights[i] *= half;
  }
  return rule;
}

cplx integrate_exp(cplx q, double len)
{
  const cplx x = cplx(0.0, 1.0) * q * len;
  if (std::abs(x) < 1e-3)
  {
    // (e^x - 1)/x = 1 + x/2 + x^2/6 + x^3/24 + x^4/120
    return len * (1.0 + x * (0.5 + x * (1.0 / 6.0 + x * (1.0 / 24.0 + x / 120.0))));
  }
  return (std::exp(x) - 1.0) / (cplx(0.0, 1.0) * q);
}

}  // namespace qnmlab
