// Copyright 2026 The qnmlab Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qnmlab/errors.hpp"
#include "qnmlab/numerics.hpp"

namespace qnmlab
{

namespace
{

constexpr double residual_tol = 1e-8;

std::string diagnostics(const ComplexMatrix &a)
{
  std::ostringstream msg;
  msg << "n = " << a.rows() << ", ||A||_F = " << a.norm() << ", finite = " << a.allFinite();
  return msg.str();
}

}  // namespace

std::vector<Eigenpair> dense_eigensolve(const ComplexMatrix &a, std::optional<cplx> target)
{
  if (a.rows() != a.cols())
  {
    throw std::invalid_argument("dense_eigensolve: matrix is not square");
  }
  if (!a.allFinite())
  {
    throw NoConvergence("dense_eigensolve: non-finite matrix (" + diagnostics(a) + ")", 0.0,
                        INFINITY);
  }
  Eigen::ComplexEigenSolver<ComplexMatrix> solver(a, true);
  if (solver.info() != Eigen::Success)
  {
    throw NoConvergence("dense_eigensolve: Schur iteration failed (" + diagnostics(a) + ")",
                        0.0, INFINITY);
  }
  const double scale = std::max(a.norm(), 1e-300);
  std::vector<Eigenpair> pairs;
  pairs.reserve(a.rows());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
  {
    Eigenpair p{solver.eigenvalues()(i), solver.eigenvectors().col(i).normalized()};
    const double res = (a * p.vector - p.value * p.vector).norm();
    if (res > residual_tol * scale)
    {
      std::ostringstream msg;
      msg << "dense_eigensolve: eigenpair residual " << res << " exceeds tolerance ("
          << diagnostics(a) << ")";
      throw NoConvergence(msg.str(), p.value, res);
    }
    pairs.push_back(std::move(p));
  }
  if (target)
  {
    const cplx t = *target;
    std::stable_sort(pairs.begin(), pairs.end(), [t](const Eigenpair &x, const Eigenpair &y)
                     { return std::abs(x.value - t) < std::abs(y.value - t); });
  }
  return pairs;
}

Eigenpair nearest_eigenpair(const ComplexMatrix &a, cplx target, const ComplexVector *start)
{
  const Eigen::Index n = a.rows();
  if (n != a.cols() || n == 0)
  {
    throw std::invalid_argument("nearest_eigenpair: matrix is not square");
  }
  ComplexMatrix shifted = a;
  shifted.diagonal().array() -= target;
  Eigen::PartialPivLU<ComplexMatrix> lu(shifted);

  ComplexVector x = (start && start->size() == n) ? ComplexVector(*start)
                                                  : ComplexVector::Ones(n);
  x.normalize();
  const double scale = std::max(a.norm(), 1e-300);
  cplx lambda = target;
  double res = INFINITY;
  double best = INFINITY;
  int stalled = 0;
  constexpr int max_iter = 300;
  for (int it = 0; it < max_iter; ++it)
  {
    ComplexVector y = lu.solve(x);
    const double ny = y.norm();
    if (!std::isfinite(ny) || ny == 0.0)
    {
      // Target is (numerically) an exact eigenvalue; x from the last step is the vector.
      break;
    }
    x = y / ny;
    const ComplexVector ax = a * x;
    lambda = x.dot(ax);  // x^H A x with ||x|| = 1
    res = (ax - lambda * x).norm();
    if (res <= 1e-14 * scale)
    {
      break;
    }
    if (res < 0.5 * best)
    {
      best = res;
      stalled = 0;
    }
    else if (++stalled >= 4 && res <= residual_tol * scale)
    {
      break;
    }
  }
  if (!(res <= residual_tol * scale))
  {
    // Two eigenvalues (nearly) equidistant from the shift: inverse iteration cannot separate
    // them, the Schur decomposition can.
    return dense_eigensolve(a, target).front();
  }
  // Slow linear convergence leaves λ accurate only to about the residual; a few Rayleigh
  // quotient steps from here converge to the same eigenvalue.
  for (int k = 0; k < 3 && res > 1e-13 * scale; ++k)
  {
    ComplexMatrix s = a;
    s.diagonal().array() -= lambda;
    const ComplexVector y = Eigen::PartialPivLU<ComplexMatrix>(s).solve(x);
    const double ny = y.norm();
    if (!std::isfinite(ny) || ny == 0.0)
    {
      break;
    }
    const ComplexVector xn = y / ny;
    const ComplexVector ax = a * xn;
    const cplx ln = xn.dot(ax);
    const double rn = (ax - ln * xn).norm();
    if (!(rn < res))
    {
      break;
    }
    x = xn;
    lambda = ln;
    res = rn;
  }
  return {lambda, x};
}

}  // namespace qnmlab
