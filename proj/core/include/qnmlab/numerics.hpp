// Copyright 2026 The qnmlab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <functional>
#include <numbers>
#include <optional>
#include <vector>

#include <Eigen/Dense>

namespace qnmlab
{

using cplx = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

inline constexpr double pi = std::numbers::pi;

// Complex angular frequency in units where c = 1 and lengths are in the structure's own
// unit. Reported externally as the dimensionless ωa/2πc (see normalized()).
struct ComplexFrequency
{
  cplx omega;

  double q_factor() const { return -omega.real() / (2.0 * omega.imag()); }

  // ωa/2πc for a structure whose reference length is `length_unit`.
  cplx normalized(double length_unit = 1.0) const { return omega * length_unit / (2.0 * pi); }

  static ComplexFrequency from_normalized(cplx nu, double length_unit = 1.0)
  {
    return {nu * 2.0 * pi / length_unit};
  }

  // Accepted QNMs decay in time and oscillate: Im ω < 0 < Re ω.
  bool is_physical() const { return omega.imag() < 0.0 && omega.real() > 0.0; }
};

// ---------------------------------------------------------------------------------------
// Cylinder functions of order 0 and 1 for complex argument.
//
// Ascending series for |z| <= 12, Hankel asymptotic expansion beyond. In the upper half
// plane, where J + iY would cancel, H^(1) comes from the integral representation of K_ν
// (Gauss–Laguerre). Arguments in the left half plane are continued from -z.

struct CylinderFunctions
{
  cplx j0, y0, j1, y1;
};

// J0, Y0, J1, Y1 on the principal branch (cut along the negative real axis). Throws
// DomainError at z = 0.
CylinderFunctions bessel_jy01(cplx z);

cplx hankel0_first_kind(cplx z);
cplx hankel1_first_kind(cplx z);

// J0 and J1 are entire; these accept z = 0.
cplx bessel_j0(cplx z);
cplx bessel_j1(cplx z);

// ---------------------------------------------------------------------------------------
// Root finding.

struct RootResult
{
  cplx root;
  double residual;  // |f(root)|
  int iterations;   // Newton updates applied
};

// Newton iteration with a central-difference derivative (step 1e-7·max(1,|z|)). Returns
// once |f(z)| <= tol; throws NoConvergence after max_iter updates or on a non-finite step.
RootResult find_root_complex(const std::function<cplx(cplx)> &f, cplx z0, double tol,
                             int max_iter);

// ---------------------------------------------------------------------------------------
// Dense eigenproblems.

struct Eigenpair
{
  cplx value;
  ComplexVector vector;  // unit 2-norm
};

// All eigenpairs of a square matrix. With a target the result is sorted by |λ - target|
// ascending; otherwise in solver order. Every returned pair satisfies
// ||Av - λv|| <= 1e-8·||A||_F or NoConvergence is thrown.
std::vector<Eigenpair> dense_eigensolve(const ComplexMatrix &a,
                                        std::optional<cplx> target = std::nullopt);

// Eigenpair closest to `target` by shifted inverse iteration, falling back to the full
// Schur decomposition when the iteration stalls.
// `start` seeds the iteration (e.g. the eigenvector from a nearby parameter value).
Eigenpair nearest_eigenpair(const ComplexMatrix &a, cplx target,
                            const ComplexVector *start = nullptr);

// ---------------------------------------------------------------------------------------
// Quadrature.

struct QuadratureRule
{
  std::vector<double> nodes;
  std::vector<double> weights;
};

// n-point Gauss–Legendre rule on [-1, 1].
QuadratureRule gauss_legendre(int n);

// Gauss–Legendre rule mapped to [a, b].
QuadratureRule gauss_legendre(int n, double a, double b);

// ∫_0^len exp(i q s) ds, stable as q·len -> 0.
cplx integrate_exp(cplx q, double len);

}  // namespace qnmlab
