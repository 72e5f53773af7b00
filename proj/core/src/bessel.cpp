// Copyright 2026 The qnmlab Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <vector>

#include <Eigen/Eigenvalues>

#include "qnmlab/errors.hpp"
#include "qnmlab/numerics.hpp"

namespace qnmlab
{

namespace
{

constexpr double euler_gamma = 0.57721566490153286061;
constexpr double series_radius = 12.0;
constexpr int max_series_terms = 80;
constexpr int max_asymptotic_terms = 40;
constexpr double term_floor = 1e-17;

struct J01
{
  cplx j0, j1;
};

J01 series_j01(cplx z)
{
  const cplx mt = -0.25 * z * z;
  cplx t0 = 1.0, t1 = 1.0;
  cplx s0 = 1.0, s1 = 1.0;
  for (int k = 1; k < max_series_terms; ++k)
  {
    t0 *= mt / double(k * k);
    t1 *= mt / double(k * (k + 1));
    s0 += t0;
    s1 += t1;
    if (std::abs(t0) < term_floor * std::abs(s0) && std::abs(t1) < term_floor * std::abs(s1))
    {
      break;
    }
  }
  return {s0, 0.5 * z * s1};
}

CylinderFunctions series_jy01(cplx z)
{
  const cplx mt = -0.25 * z * z;
  cplx t0 = 1.0, t1 = 1.0;
  cplx sj0 = 1.0, sj1 = 1.0;
  cplx sy0 = 0.0, sy1 = 1.0;  // k = 0 term of the Y1 sum: (H_0 + H_1) = 1
  double hk = 0.0;
  for (int k = 1; k < max_series_terms; ++k)
  {
    t0 *= mt / double(k * k);
    t1 *= mt / double(k * (k + 1));
    const double hk_next = hk + 1.0 / k;
    const double hk_next2 = hk_next + 1.0 / (k + 1);
    hk = hk_next;
    sj0 += t0;
    sj1 += t1;
    sy0 += hk_next * t0;
    sy1 += (hk_next + hk_next2) * t1;
    if (std::abs(t0) * (hk + 1.0) < term_floor * std::abs(sj0) &&
        std::abs(t1) * (2.0 * hk + 2.0) < term_floor * std::abs(sj1))
    {
      break;
    }
  }
  const cplx j0 = sj0;
  const cplx j1 = 0.5 * z * sj1;
  const cplx lg = std::log(0.5 * z) + euler_gamma;
  const cplx y0 = (2.0 / pi) * (lg * j0 - sy0);
  const cplx y1 = -2.0 / (pi * z) + (2.0 / pi) * lg * j1 - z / (2.0 * pi) * sy1;
  return {j0, y0, j1, y1};
}

// Σ (±i)^k a_k(ν) / z^k of the Hankel asymptotic expansion, summed to the smallest term.
cplx asymptotic_sum(int order, cplx z, bool first_kind)
{
  const double mu = 4.0 * order * order;
  const cplx unit = first_kind ? cplx(0.0, 1.0) : cplx(0.0, -1.0);
  const cplx ratio = unit / z;
  cplx term = 1.0;
  cplx sum = 1.0;
  double last = 1.0;
  for (int k = 1; k < max_asymptotic_terms; ++k)
  {
    const double odd = 2.0 * k - 1.0;
    const cplx next = term * ratio * ((mu - odd * odd) / (8.0 * k));
    const double mag = std::abs(next);
    if (mag > last)
    {
      break;
    }
    term = next;
    sum += term;
    last = mag;
    if (mag < term_floor * std::abs(sum))
    {
      break;
    }
  }
  return sum;
}

cplx asymptotic_hankel(int order, cplx z, bool first_kind)
{
  const double phase = order * 0.5 * pi + 0.25 * pi;
  const cplx pre = std::sqrt(2.0 / (pi * z));
  const cplx arg = first_kind ? cplx(0.0, 1.0) * (z - phase) : cplx(0.0, -1.0) * (z - phase);
  return pre * std::exp(arg) * asymptotic_sum(order, z, first_kind);
}

// Generalized Gauss–Laguerre rule for ∫_0^∞ t^α e^{-t} g(t) dt (Golub–Welsch).
struct LaguerreRule
{
  std::vector<double> nodes, weights;

  LaguerreRule(int n, double alpha)
  {
    Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
    for (int k = 0; k < n; ++k)
    {
      jacobi(k, k) = 2.0 * k + alpha + 1.0;
      if (k + 1 < n)
      {
        jacobi(k, k + 1) = jacobi(k + 1, k) = std::sqrt((k + 1.0) * (k + 1.0 + alpha));
      }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(jacobi);
    const double mu0 = std::tgamma(alpha + 1.0);
    for (int k = 0; k < n; ++k)
    {
      nodes.push_back(eig.eigenvalues()(k));
      const double v = eig.eigenvectors()(0, k);
      weights.push_back(mu0 * v * v);
    }
  }
};

constexpr int laguerre_points = 64;
constexpr double integral_min_radius = 2.0;

// In the upper half plane H^(1) is exponentially smaller than J and Y, so J + iY from the
// series cancels. There H^(1)_ν(z) = (2/πi) e^{-iνπ/2} K_ν(-iz), with K_ν from
//   K_ν(w) = √(π/2w) e^{-w}/Γ(ν+1/2) ∫_0^∞ e^{-t} t^{ν-1/2} (1 + t/2w)^{ν-1/2} dt.
cplx upper_hankel(int order, cplx z)
{
  static const LaguerreRule rule0(laguerre_points, -0.5);
  static const LaguerreRule rule1(laguerre_points, 0.5);
  const auto &rule = order == 0 ? rule0 : rule1;
  const cplx w = cplx(0.0, -1.0) * z;
  const double power = order - 0.5;
  cplx sum = 0.0;
  for (int k = 0; k < laguerre_points; ++k)
  {
    sum += rule.weights[k] * std::pow(1.0 + rule.nodes[k] / (2.0 * w), power);
  }
  const cplx k_nu = std::sqrt(pi / (2.0 * w)) * std::exp(-w) / std::tgamma(order + 0.5) * sum;
  return order == 0 ? 2.0 / (cplx(0.0, 1.0) * pi) * k_nu : -2.0 / pi * k_nu;
}

bool use_upper_integral(cplx z)
{
  return z.imag() > 0.0 && std::abs(z) > integral_min_radius;
}

void require_nonzero(cplx z)
{
  if (z == cplx(0.0, 0.0))
  {
    throw DomainError("Y0/Y1 and the Hankel functions are singular at z = 0");
  }
}

}  // namespace

CylinderFunctions bessel_jy01(cplx z)
{
  require_nonzero(z);
  if (std::abs(z) <= series_radius)
  {
    return series_jy01(z);
  }
  if (z.real() < 0.0)
  {
    // z = ζ e^{±iπ}: J_n(z) = (-1)^n J_n(ζ), Y_n(z) = (-1)^n (Y_n(ζ) ± 2i J_n(ζ)).
    const auto f = bessel_jy01(-z);
    const cplx twice_i(0.0, z.imag() >= 0.0 ? 2.0 : -2.0);
    return {f.j0, f.y0 + twice_i * f.j0, -f.j1, -(f.y1 + twice_i * f.j1)};
  }
  const cplx h10 = asymptotic_hankel(0, z, true);
  const cplx h20 = asymptotic_hankel(0, z, false);
  const cplx h11 = asymptotic_hankel(1, z, true);
  const cplx h21 = asymptotic_hankel(1, z, false);
  const cplx two_i(0.0, 2.0);
  return {0.5 * (h10 + h20), (h10 - h20) / two_i, 0.5 * (h11 + h21), (h11 - h21) / two_i};
}

namespace
{

cplx hankel_first_kind(int order, cplx z)
{
  require_nonzero(z);
  if (std::abs(z) <= series_radius)
  {
    if (use_upper_integral(z))
    {
      return upper_hankel(order, z);
    }
    const auto f = series_jy01(z);
    return order == 0 ? f.j0 + cplx(0.0, 1.0) * f.y0 : f.j1 + cplx(0.0, 1.0) * f.y1;
  }
  if (z.real() < 0.0 && z.imag() < 0.0)
  {
    // The expansion of H^(1) fails near ph z = -π; continue from ζ = -z instead:
    // H^(1)_n(ζ e^{-iπ}) = (-1)^n (2 H^(1)_n(ζ) + H^(2)_n(ζ)).
    const cplx h = 2.0 * asymptotic_hankel(order, -z, true) + asymptotic_hankel(order, -z, false);
    return order == 0 ? h : -h;
  }
  return asymptotic_hankel(order, z, true);
}

cplx bessel_j(int order, cplx z)
{
  if (std::abs(z) <= series_radius)
  {
    const auto f = series_j01(z);
    return order == 0 ? f.j0 : f.j1;
  }
  if (z.real() < 0.0)
  {
    const cplx j = bessel_j(order, -z);
    return order == 0 ? j : -j;
  }
  return 0.5 * (asymptotic_hankel(order, z, true) + asymptotic_hankel(order, z, false));
}

}  // namespace

cplx hankel0_first_kind(cplx z) { return hankel_first_kind(0, z); }

cplx hankel1_first_kind(cplx z) { return hankel_first_kind(1, z); }

cplx bessel_j0(cplx z) { return bessel_j(0, z); }

cplx bessel_j1(cplx z) { return bessel_j(1, z); }

}  // namespace qnmlab
