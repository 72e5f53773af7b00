// Copyright 2026 The qnmlab Authors
// SPDX-License-Identifier: Apache-2.0

#include "qnmlab/greens.hpp"

#include <array>
#include <cmath>
#include <limits>

#include "qnmlab/errors.hpp"

namespace qnmlab
{

namespace
{

constexpr cplx I{0.0, 1.0};

bool is_origin(Point2 p) { return p.x == 0.0 && p.y == 0.0; }

}  // namespace

cplx greens_background_2d(Point2 r, Point2 r_prime, cplx omega, double eps_bg,
                          Coincidence coincidence)
{
  if (omega == cplx(0.0))
  {
    throw std::invalid_argument("greens_background_2d: omega must be non-zero");
  }
  const double d = distance(r, r_prime);
  if (d == 0.0)
  {
    if (coincidence == Coincidence::Reject)
    {
      throw DomainError("greens_background_2d: real part diverges at r == r'");
    }
    return {std::numeric_limits<double>::infinity(), 0.25};
  }
  return 0.25 * I * hankel0_first_kind(omega * std::sqrt(eps_bg) * d);
}

DysonSolver::DysonSolver(const RodLattice2D &lattice, std::shared_ptr<const ScattererMesh> mesh,
                         double omega)
  : lattice_(lattice), mesh_(std::move(mesh)), omega_(omega)
{
  if (!(omega > 0.0))
  {
    throw std::invalid_argument("DysonSolver: omega must be positive");
  }
}

const Eigen::PartialPivLU<ComplexMatrix> &DysonSolver::factor(bool reduced) const
{
  auto &slot = reduced ? reduced_lu_ : full_lu_;
  if (!slot)
  {
    ComplexMatrix a = reduced ? assemble_ls_operator_a1(lattice_, omega_, *mesh_)
                              : assemble_ls_operator(lattice_, omega_, *mesh_);
    a = ComplexMatrix::Identity(a.rows(), a.cols()) - a;
    slot.emplace(a);
    if (slot->rcond() < 1e-13)
    {
      slot.reset();
      throw SingularSystem("Dyson system is numerically singular at this frequency");
    }
  }
  return *slot;
}

ComplexVector DysonSolver::interior_response(Point2 source) const
{
  const auto &cells = mesh_->cells();
  // Background field of the source at each cell. A source inside a cell's equivalent disk
  // sees that cell's disk average, the same kernel used when radiating back out, which keeps
  // the discrete Green's function reciprocal.
  const double eb = lattice_.eps_bg();
  std::ptrdiff_t inside = -1;
  double inside_ratio = 1.0;
  for (std::size_t j = 0; j < cells.size(); ++j)
  {
    const double ratio = distance(source, cells[j].center) / mesh_->equivalent_radius(j);
    if (ratio < inside_ratio)
    {
      inside_ratio = ratio;
      inside = std::ptrdiff_t(j);
    }
  }
  auto incident = [&](std::size_t j)
  {
    if (std::ptrdiff_t(j) == inside)
    {
      const double d = distance(source, cells[j].center);
      return disk_integral_green(omega_ * std::sqrt(eb), mesh_->equivalent_radius(j), d) /
             cells[j].area;
    }
    return greens_background_2d(cells[j].center, source, omega_, eb);
  };
  const bool reduced = is_origin(source) && mesh_->has_hexagonal_symmetry();
  if (reduced)
  {
    const auto &reps = mesh_->orbit_representatives();
    ComplexVector rhs(reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i)
    {
      rhs(i) = incident(std::size_t(reps[i]));
    }
    const ComplexVector v = factor(true).solve(rhs);
    const auto &orbit = mesh_->orbit_of();
    ComplexVector out(cells.size());
    for (std::size_t j = 0; j < cells.size(); ++j)
    {
      out(j) = v(orbit[j]);
    }
    return out;
  }
  ComplexVector rhs(cells.size());
  for (std::size_t j = 0; j < cells.size(); ++j)
  {
    rhs(j) = incident(j);
  }
  return factor(false).solve(rhs);
}

cplx DysonSolver::scattered(Point2 r, Point2 source) const
{
  if (lattice_.delta_eps() == 0.0)
  {
    return 0.0;
  }
  const ComplexVector g = interior_response(source);
  return radiate_from_cells(lattice_, *mesh_, omega_, g, std::span<const Point2>(&r, 1)).front();
}

cplx DysonSolver::full(Point2 r, Point2 source, Coincidence coincidence) const
{
  const cplx gb = greens_background_2d(r, source, omega_, lattice_.eps_bg(), coincidence);
  const cplx gs = scattered(r, source);
  if (std::isinf(gb.real()))
  {
    return {gb.real(), gb.imag() + gs.imag()};
  }
  return gb + gs;
}

cplx greens_full_2d(const RodLattice2D &lattice, Point2 r, Point2 r_prime, double omega,
                    std::shared_ptr<const ScattererMesh> mesh, Coincidence coincidence)
{
  return DysonSolver(lattice, std::move(mesh), omega).full(r, r_prime, coincidence);
}

double ldos_enhancement(const DysonSolver &solver, const RodLattice2D &lattice, Point2 probe)
{
  if (lattice.rod_containing(probe) >= 0)
  {
    throw InvalidGeometry("ldos_enhancement: emitters inside rods are not supported");
  }
  return 1.0 + 4.0 * solver.scattered(probe, probe).imag();
}

double ldos_enhancement(const RodLattice2D &lattice, Point2 probe, double omega,
                        std::shared_ptr<const ScattererMesh> mesh)
{
  if (lattice.rod_containing(probe) >= 0)
  {
    throw InvalidGeometry("ldos_enhancement: emitters inside rods are not supported");
  }
  return ldos_enhancement(DysonSolver(lattice, std::move(mesh), omega), lattice, probe);
}

cplx greens_single_mode(const Qnm2D &mode, Point2 r, Point2 r_prime, double omega)
{
  const std::array<Point2, 2> pts{r, r_prime};
  const auto f = evaluate_qnm_field(mode, r == r_prime ? std::span<const Point2>(pts.data(), 1)
                                                       : std::span<const Point2>(pts));
  const cplx fr = f.front(), fp = f.back();
  const cplx w = mode.omega.omega;
  return fr * fp / (2.0 * w * (w - omega));
}

cplx greens_single_mode(const Qnm1D &mode, double x, double x_prime, double omega)
{
  const cplx w = mode.omega.omega;
  return mode.value(x) * mode.value(x_prime) / (2.0 * w * (w - omega));
}

std::vector<double> default_ldos_frequencies(ComplexFrequency mode_frequency, int count)
{
  if (count < 2)
  {
    throw std::invalid_argument("default_ldos_frequencies: need at least two points");
  }
  const double centre = mode_frequency.omega.real();
  const double half = 10.0 * std::abs(mode_frequency.omega.imag());
  std::vector<double> out(count);
  for (int i = 0; i < count; ++i)
  {
    out[i] = centre - half + 2.0 * half * i / (count - 1);
  }
  return out;
}

LdosSpectrum ldos_spectrum(const RodLattice2D &lattice, std::shared_ptr<const ScattererMesh> mesh,
                           Point2 probe, std::span<const double> frequencies, const Qnm2D *mode)
{
  if (lattice.rod_containing(probe) >= 0)
  {
    throw InvalidGeometry("ldos_spectrum: emitters inside rods are not supported");
  }
  LdosSpectrum out{probe,
                   {frequencies.begin(), frequencies.end()},
                   std::vector<double>(frequencies.size()),
                   std::vector<double>(frequencies.size(), 0.0)};
  cplx f2 = 0.0;
  if (mode)
  {
    const cplx f = evaluate_qnm_field(*mode, std::span<const Point2>(&probe, 1)).front();
    f2 = f * f;
  }
  const std::ptrdiff_t n = std::ptrdiff_t(frequencies.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < n; ++i)
  {
    const double w = frequencies[i];
    out.enhancement_full[i] = ldos_enhancement(DysonSolver(lattice, mesh, w), lattice, probe);
    if (mode)
    {
      const cplx wt = mode->omega.omega;
      out.enhancement_single[i] = 4.0 * (f2 / (2.0 * wt * (wt - w))).imag();
    }
  }
  return out;
}

cplx greens_exact_1d(const LayeredStack1D &stack, double x, double x_prime, cplx omega)
{
  const auto left = StackWave::from_left(stack, omega, 0.0, 1.0);
  const auto right = StackWave::from_right(stack, omega, 1.0, 0.0);
  const double lo = std::min(x, x_prime), hi = std::max(x, x_prime);
  // The Wronskian is constant; evaluate it at the upper point.
  const cplx w = left.value(hi) * right.derivative(hi) - left.derivative(hi) * right.value(hi);
  return -left.value(lo) * right.value(hi) / w;
}

double ldos_enhancement_1d(const LayeredStack1D &stack, double x, double omega)
{
  if (!(omega > 0.0))
  {
    throw std::invalid_argument("ldos_enhancement_1d: omega must be positive");
  }
  const double n = std::sqrt(stack.eps_at(x));
  return greens_exact_1d(stack, x, x, omega).imag() * 2.0 * omega * n;
}

}  // namespace qnmlab
