// Copyright 2026 The qnmlab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/LU>

#include "qnmlab/qnm1d.hpp"
#include "qnmlab/qnm2d.hpp"

namespace qnmlab
{

// Scalar Green's functions solve ∇²G + ω²ε G = -δ(r - r') with outgoing waves at infinity
// (c = 1). In a uniform background of permittivity ε_B, g_B = (i/4) H0(k_B |r - r'|).

// How to treat r == r', where Re g_B diverges logarithmically.
enum class Coincidence
{
  Reject,             // throw DomainError
  ImaginaryPartOnly,  // return (+inf, Im g): the real part is flagged as divergent
};

cplx greens_background_2d(Point2 r, Point2 r_prime, cplx omega, double eps_bg,
                          Coincidence coincidence = Coincidence::Reject);

// Dyson solve on a scatterer mesh at one real frequency. The interior response to a source
// at r' solves (I - A(ω)) G_cells = g_B(cells, r'); sources at the origin of a hexagonal
// crystallite use the A1-reduced system. Factorizations are built lazily and reused.
class DysonSolver
{
public:
  DysonSolver(const RodLattice2D &lattice, std::shared_ptr<const ScattererMesh> mesh,
              double omega);

  double omega() const { return omega_; }

  // G(cell_j, source) for every mesh cell.
  ComplexVector interior_response(Point2 source) const;

  // G - g_B at r for a source at r'.
  cplx scattered(Point2 r, Point2 source) const;

  // Full G(r, r'); at r == r' the coincidence policy applies to the background part.
  cplx full(Point2 r, Point2 source, Coincidence coincidence = Coincidence::Reject) const;

private:
  const Eigen::PartialPivLU<ComplexMatrix> &factor(bool reduced) const;

  RodLattice2D lattice_;
  std::shared_ptr<const ScattererMesh> mesh_;
  double omega_;
  mutable std::optional<Eigen::PartialPivLU<ComplexMatrix>> full_lu_, reduced_lu_;
};

cplx greens_full_2d(const RodLattice2D &lattice, Point2 r, Point2 r_prime, double omega,
                    std::shared_ptr<const ScattererMesh> mesh,
                    Coincidence coincidence = Coincidence::Reject);

// Im G(p, p, ω)/Im g_B(p, p, ω) = 1 + 4 Im G_scattered(p, p). The probe must lie in the
// background; InvalidGeometry otherwise.
double ldos_enhancement(const RodLattice2D &lattice, Point2 probe, double omega,
                        std::shared_ptr<const ScattererMesh> mesh);
double ldos_enhancement(const DysonSolver &solver, const RodLattice2D &lattice, Point2 probe);

// One-term modal expansion f(r) f(r') / (2ω̃(ω̃ - ω)) for a mode normalized to ⟨⟨f|f⟩⟩ = 1.
cplx greens_single_mode(const Qnm2D &mode, Point2 r, Point2 r_prime, double omega);
cplx greens_single_mode(const Qnm1D &mode, double x, double x_prime, double omega);

struct LdosSpectrum
{
  Point2 probe;
  std::vector<double> frequencies;  // ω (c = 1, lattice units)
  std::vector<double> enhancement_full;
  std::vector<double> enhancement_single;  // zeros when no mode was supplied
};

// 201 frequencies across Re ω̃ ± 10|Im ω̃|.
std::vector<double> default_ldos_frequencies(ComplexFrequency mode_frequency, int count = 201);

// Full and single-mode LDOS enhancement at `probe` for each frequency.
LdosSpectrum ldos_spectrum(const RodLattice2D &lattice, std::shared_ptr<const ScattererMesh> mesh,
                           Point2 probe, std::span<const double> frequencies,
                           const Qnm2D *mode = nullptr);

// Exact Green's function of a layered stack for real or complex ω, from the two outgoing
// solutions: G = -u_L(x<) u_R(x>)/W.
cplx greens_exact_1d(const LayeredStack1D &stack, double x, double x_prime, cplx omega);

// Im G(x, x, ω)/Im G_B(x, x, ω) with G_B the Green's function of the uniform medium of
// permittivity ε(x), Im G_B = 1/(2ω√ε).
double ldos_enhancement_1d(const LayeredStack1D &stack, double x, double omega);

}  // namespace qnmlab
