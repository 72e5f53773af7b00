// Copyright 2026 The qnmlab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <vector>

#include "qnmlab/greens.hpp"
#include "qnmlab/qnm1d.hpp"
#include "qnmlab/qnm2d.hpp"

namespace qnmlab
{

struct Antinode2D
{
  Point2 position;
  double index;  // √ε at the antinode
};

struct Antinode1D
{
  double position;
  double index;
};

// Maximum of ε|f|² over the background points of a 201 × 201 grid covering the central
// lattice cell [-a/2, a/2]². Emitters are only admitted in the background, so rod interiors
// are not searched. Ties go to the point closest to the origin.
Antinode2D find_antinode(const Qnm2D &mode);

// Largest interior local maximum of ε|f|² on the mode's sample grid, ties going to the point
// nearest the stack midpoint. Falls back to the global maximum when ε|f|² has no interior
// peak (the field then peaks at an outer interface).
Antinode1D find_antinode(const Qnm1D &mode);

// Weighted samples of a region, with the permittivity at each point.
struct SampleGrid
{
  std::vector<Point2> points;
  std::vector<double> weights;
  std::vector<double> eps;
};

// Composite Gauss–Legendre grid on [x0, x1] (points on the x axis), breaking panels at the
// stack interfaces.
SampleGrid interval_grid(const LayeredStack1D &stack, double x0, double x1, int panels = 64,
                         int nodes = 8);

// Polar grid on the origin-centred disk of the given radius.
SampleGrid disk_grid(const RodLattice2D &lattice, double radius, int radial = 64,
                     int angular = 128);

// Σ w ε conj(f_a) f_b.
cplx hermitian_inner_product(std::span<const cplx> field_a, std::span<const cplx> field_b,
                             const SampleGrid &grid);

// ∫ ε|f|² / (ε_c |f_c|²). Throws NearZeroField when f_c is negligible against the samples.
double normal_mode_volume(std::span<const cplx> field, const SampleGrid &grid, double eps_c,
                          cplx f_c);
double normal_mode_volume(const Qnm2D &mode, const Antinode2D &antinode, double radius);
double normal_mode_volume(const Qnm1D &mode, const Antinode1D &antinode, double x0, double x1);

struct QnmVolume
{
  cplx v_q;         // ⟨⟨f|f⟩⟩ / f(r_c)²
  double v_eff_q;  // |v_Q|² / (n_c² Re v_Q)
};

// Throws DomainError when Re v_Q <= 0 and NearZeroField when f_c vanishes.
QnmVolume quasinormal_mode_volume(cplx norm, cplx f_c, double n_c);
QnmVolume quasinormal_mode_volume(const Qnm2D &mode, const Antinode2D &antinode);
QnmVolume quasinormal_mode_volume(const Qnm1D &mode, const Antinode1D &antinode);

// (3/4π²)(λ_c/n_c)³ Q/V_eff. All inputs must be positive.
double purcell_factor(double lambda_c, double n_c, double q, double v_eff);

// Single-mode LDOS enhancement at ω = Re ω̃ implied by (ω̃, v_Q) alone:
// Im[1/(v_Q 2ω̃ (ω̃ - Re ω̃))] / Im g_B, with Im g_B = 1/4 in 2D.
double single_mode_enhancement_2d(ComplexFrequency omega, cplx v_q);

struct LdosVolume
{
  double f_full;    // LDOS enhancement from the full Green's function at Re ω̃
  double f_single;  // the same from the single-mode expansion
  double v_eff_q;
  double v_eff_tot;  // v_eff_q · f_single / f_full
};

LdosVolume effective_volume_from_ldos(const Qnm2D &mode, const Antinode2D &antinode);
LdosVolume effective_volume_from_ldos(const Qnm1D &mode, const Antinode1D &antinode);

struct SweepRow
{
  double radius;
  double v_eff_n;
  double v_eff_q;
  cplx v_q;
};

// V_eff^N and V_eff^Q (norm recomputed on each disk) for increasing radii that enclose the
// crystallite.
std::vector<SweepRow> convergence_sweep(const Qnm2D &mode, const Antinode2D &antinode,
                                        std::span<const double> radii);

// 12 radii from circumradius + a/2 to 10a.
std::vector<double> default_sweep_radii(const RodLattice2D &lattice);

struct ModeVolumeReport
{
  Antinode2D antinode;
  QnmVolume volume;
  std::vector<SweepRow> sweep;
  LdosVolume ldos;
};

ModeVolumeReport mode_volume_report(const Qnm2D &mode, std::span<const double> radii,
                                    bool with_ldos = true);

}  // namespace qnmlab
