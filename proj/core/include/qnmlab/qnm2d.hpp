// Copyright 2026 The qnmlab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "qnmlab/numerics.hpp"
#include "qnmlab/structures.hpp"

namespace qnmlab
{

// One collocation cell: a square pixel clipped to a rod disk. `center` is the centroid of
// the clipped region; (ix, iy) index the pixel in the rod's local radial/tangential frame.
struct MeshCell
{
  Point2 center;
  double area;
  int rod;
  int ix, iy;
};

// Pixel discretization of the rods of a crystallite (the support of Δε). Each rod carries a
// resolution × resolution pixel grid aligned with its radial direction, so the mesh is
// mapped onto itself by every symmetry of a hexagonal crystallite.
class ScattererMesh
{
public:
  ScattererMesh(const RodLattice2D &lattice, int resolution);

  const std::vector<MeshCell> &cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }
  int resolution() const { return resolution_; }
  double pixel_size() const { return pixel_; }

  // Radius of the disk with the same area as cell i.
  double equivalent_radius(std::size_t i) const { return eq_radius_[i]; }

  // Orbits of cells under the 12 operations of C6v, when the lattice has that symmetry.
  bool has_hexagonal_symmetry() const { return !orbit_of_.empty(); }
  const std::vector<int> &orbit_of() const { return orbit_of_; }
  const std::vector<int> &orbit_representatives() const { return orbit_reps_; }

  // Cell index reached by x -> -x, or empty when the lattice is not mirror symmetric.
  const std::vector<int> &mirror_x() const { return mirror_x_; }

private:
  int resolution_;
  double pixel_;
  std::vector<MeshCell> cells_;
  std::vector<double> eq_radius_;
  std::vector<int> orbit_of_;
  std::vector<int> orbit_reps_;
  std::vector<int> mirror_x_;
};

// Which part of the operator is solved. A1 restricts to fields invariant under the full
// hexagonal point group (the monopole-like defect mode), using one unknown per cell orbit.
enum class SymmetrySector
{
  Full,
  A1,
};

// ∫ over a disk of radius `radius` of g_B(r, r') = (i/4) H0(k|r - r'|), evaluated at a
// point at distance rho from its centre: -1/k² + (iπa/2k) H1(ka) J0(kρ) for ρ < a and
// (iπa/2k) J1(ka) H0(kρ) outside.
cplx disk_integral_green(cplx k, double radius, double rho);

// Discretized Lippmann–Schwinger operator: A[i][j] = k0² g_B(r_i, r_j) Δε area_j off the
// diagonal, and the equal-area disk self-integral k0² Δε ∫disk g_B on the diagonal.
ComplexMatrix assemble_ls_operator(const RodLattice2D &lattice, cplx omega,
                                   const ScattererMesh &mesh);

// The same operator restricted to A1-symmetric fields: rows are orbit representatives,
// column J sums the entries of all cells in orbit J.
ComplexMatrix assemble_ls_operator_a1(const RodLattice2D &lattice, cplx omega,
                                      const ScattererMesh &mesh);

// Field radiated by cell sources: Σ_j k0² Δε area_j K(r, cell_j) values_j, with K = g_B
// except for the nearest cell when r falls within its equivalent disk, where the disk
// integral is used.
std::vector<cplx> radiate_from_cells(const RodLattice2D &lattice, const ScattererMesh &mesh,
                                     cplx omega, const ComplexVector &values,
                                     std::span<const Point2> points);

struct Qnm2DOptions
{
  SymmetrySector sector = SymmetrySector::A1;
  // Radius for ⟨⟨f|f⟩⟩; 0 selects max(6a, circumradius + 2a).
  double normalization_radius = 0.0;
  double tolerance = 1e-8;
  int max_iter = 40;
};

struct Qnm2D
{
  ComplexFrequency omega;
  RodLattice2D lattice;
  std::shared_ptr<const ScattererMesh> mesh;
  ComplexVector interior_values;  // one value per mesh cell
  cplx norm;                      // ⟨⟨f|f⟩⟩ at normalization_radius for the stored scaling
  double normalization_radius;
  SymmetrySector sector;
  double eigen_residual;  // |λ(ω̃) - 1|
  std::vector<std::string> warnings;

  cplx normalized_frequency() const { return omega.normalized(lattice.lattice_constant()); }
  Qnm2D scaled(cplx alpha) const;
};

// Newton iteration on λ(ω) - 1 for the eigenvalue of the discretized operator nearest 1.
// `nu_guess` is the dimensionless ωa/2πc. The returned mode is normalized to ⟨⟨f|f⟩⟩ = 1.
// Throws NoConvergence, or SpuriousRoot for a non-decaying root.
Qnm2D find_qnm_2d(const RodLattice2D &lattice, cplx nu_guess, int resolution,
                  const Qnm2DOptions &options = {});
Qnm2D find_qnm_2d(const RodLattice2D &lattice, cplx nu_guess,
                  std::shared_ptr<const ScattererMesh> mesh, const Qnm2DOptions &options = {});

// Real ωa/2πc on [nu_min, nu_max] (step `step`) where |λ - 1| is smallest.
double seed_scan_2d(const RodLattice2D &lattice, const ScattererMesh &mesh,
                    SymmetrySector sector, double nu_min = 0.38, double nu_max = 0.46,
                    double step = 0.002);

// Mode field at arbitrary points from the integral representation.
std::vector<cplx> evaluate_qnm_field(const Qnm2D &mode, std::span<const Point2> points);

// Integrals of two modes over origin-centred disks.
struct DiskMoments
{
  double radius;
  cplx eps_product;   // ∫ ε f_a f_b dA
  double eps_energy;  // ∫ ε |f_a|² dA
  cplx ring_product;  // ∮ f_a f_b dl on the circle
};

// One entry per radius (ascending, each larger than the crystallite circumradius).
std::vector<DiskMoments> disk_moments(const Qnm2D &a, const Qnm2D &b,
                                      std::span<const double> radii);

// ⟨⟨a|b⟩⟩ over the disk of the given radius, including the boundary term
// i√ε_B/(ω_a+ω_b) ∮ f_a f_b dl.
cplx qnm_inner_product_2d(const Qnm2D &a, const Qnm2D &b, double radius);

// ⟨⟨f|f⟩⟩ of one mode at several radii from a single quadrature pass.
std::vector<cplx> qnm_self_products(const Qnm2D &mode, std::span<const double> radii);

}  // namespace qnmlab
