// Copyright 2026 The qnmlab Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <sstream>
#include <string>

#include "qnmlab/errors.hpp"
#include "qnmlab/numerics.hpp"

namespace qnmlab
{

RootResult find_root_complex(const std::function<cplx(cplx)> &f, cplx z0, double tol,
                             int max_iter)
{
  if (!(tol > 0.0))
  {
    throw std::invalid_argument("find_root_complex: tolerance must be positive");
  }
  auto fail = [](const std::string &why, cplx z, double residual)
  {
    std::ostringstream msg;
    msg << "Newton iteration " << why << " (last iterate " << z << ", residual " << residual
        << ")";
    return NoConvergence(msg.str(), z, residual);
  };
  cplx z = z0;
  cplx fz = f(z);
  for (int it = 0;; ++it)
  {
    const double residual = std::abs(fz);
    if (!std::isfinite(residual))
    {
      throw fail("produced a non-finite residual", z, residual);
    }
    if (residual <= tol)
    {
      return {z, residual, it};
    }
    if (it >= max_iter)
    {
      throw fail("did not converge in " + std::to_string(max_iter) + " steps", z, residual);
    }
    const double h = 1e-7 * std::max(1.0, std::abs(z));
    const cplx df = (f(z + h) - f(z - h)) / (2.0 * h);
    if (df == cplx(0.0) || !std::isfinite(std::abs(df)))
    {
      throw fail("hit a vanishing derivative", z, residual);
    }
    z -= fz / df;
    fz = f(z);
  }
}

}  // namespace qnmlab
