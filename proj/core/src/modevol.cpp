// Copyright 2026 The qnmlab Authors
// SPDX-License-Identifier: Apache-2.0

#include "qnmlab/modevol.hpp"

#include <algorithm>
#include <cmath>

#include "qnmlab/errors.hpp"

namespace qnmlab
{

namespace
{

constexpr cplx I{0.0, 1.0};
constexpr int antinode_grid = 201;

// Strictly larger by more than roundoff, or equal within roundoff and closer to the anchor.
bool better_peak(double value, double dist, double best_value, double best_dist)
{
  const double tol = 1e-12 * std::max(value, best_value);
  if (value > best_value + tol)
  {
    return true;
  }
  return value >= best_value - tol && dist < best_dist;
}

cplx field_at(const Qnm2D &mode, Point2 p)
{
  return evaluate_qnm_field(mode, std::span<const Point2>(&p, 1)).front();
}

void guard_node(cplx f_c, double peak)
{
  if (!(std::norm(f_c) >= 1e-12 * peak))
  {
    throw NearZeroField("field at the reference point is negligible (node)");
  }
}

double peak_interior(const Qnm2D &mode)
{
  double peak = 0.0;
  for (Eigen::Index i = 0; i < mode.interior_values.size(); ++i)
  {
    peak = std::max(peak, std::norm(mode.interior_values(i)));
  }
  return peak;
}

double peak_samples(const Qnm1D &mode)
{
  double peak = 0.0;
  for (const auto &s : mode.samples)
  {
    peak = std::max(peak, std::norm(s));
  }
  return peak;
}

}  // namespace

Antinode2D find_antinode(const Qnm2D &mode)
{
  const auto &lattice = mode.lattice;
  Point2 best{};
  double best_value = -1.0, best_dist = INFINITY;
  auto consider = [&](Point2 p, double value)
  {
    const double d = norm(p);
    if (better_peak(value, d, best_value, best_dist))
    {
      best = p;
      best_value = value;
      best_dist = d;
    }
  };
  // Grid coordinates a(i - 100)/200 are exact mirror images of each other, so for a mode
  // of the symmetric sector one quadrant determines the rest.
  const int half = antinode_grid / 2;
  const double a = lattice.lattice_constant();
  auto coord = [&](int i) { return a * (i - half) / (antinode_grid - 1); };
  const bool quadrant = mode.sector == SymmetrySector::A1;
  const int lo = quadrant ? half : 0;
  const int width = antinode_grid - lo;
  std::vector<Point2> points;
  points.reserve(std::size_t(width) * width);
  for (int i = lo; i < antinode_grid; ++i)
  {
    for (int j = lo; j < antinode_grid; ++j)
    {
      points.push_back({coord(i), coord(j)});
    }
  }
  const auto f = evaluate_qnm_field(mode, points);
  for (int i = 0; i < antinode_grid; ++i)
  {
    for (int j = 0; j < antinode_grid; ++j)
    {
      const int ii = quadrant ? half + std::abs(i - half) : i;
      const int jj = quadrant ? half + std::abs(j - half) : j;
      const Point2 p{coord(i), coord(j)};
      if (lattice.rod_containing(p) < 0)
      {
        consider(p, lattice.eps_bg() * std::norm(f[std::size_t(ii - lo) * width + (jj - lo)]));
      }
    }
  }
  if (best_value < 0.0)
  {
    throw InvalidGeometry("find_antinode: the central cell has no background points");
  }
  return {best, std::sqrt(lattice.eps_bg())};
}

Antinode1D find_antinode(const Qnm1D &mode)
{
  const auto &stack = mode.stack();
  const auto &x = mode.grid;
  const double mid = 0.5 * stack.length();
  std::vector<double> v(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
  {
    v[i] = stack.eps_at(x[i]) * std::norm(mode.samples[i]);
  }
  double best_value = -1.0, best_dist = INFINITY, best_x = mid;
  auto consider = [&](std::size_t i)
  {
    const double d = std::abs(x[i] - mid);
    if (better_peak(v[i], d, best_value, best_dist))
    {
      best_value = v[i];
      best_dist = d;
      best_x = x[i];
    }
  };
  // Peaks created by a permittivity step between neighbouring samples are not field peaks.
  for (std::size_t i = 1; i + 1 < x.size(); ++i)
  {
    const int region = stack.region_of(x[i]);
    if (stack.region_of(x[i - 1]) != region || stack.region_of(x[i + 1]) != region)
    {
      continue;
    }
    if (v[i] > v[i - 1] && v[i] >= v[i + 1])
    {
      consider(i);
    }
  }
  if (best_value < 0.0)
  {
    for (std::size_t i = 0; i < x.size(); ++i)
    {
      consider(i);
    }
  }
  return {best_x, std::sqrt(stack.eps_at(best_x))};
}

SampleGrid interval_grid(const LayeredStack1D &stack, double x0, double x1, int panels,
                         int nodes)
{
  if (!(x1 > x0) || panels < 1 || nodes < 1)
  {
    throw std::invalid_argument("interval_grid: empty interval or rule");
  }
  std::vector<double> edges{x0};
  for (double s : stack.interfaces())
  {
    if (s > x0 && s < x1)
    {
      edges.push_back(s);
    }
  }
  edges.push_back(x1);
  SampleGrid grid;
  for (std::size_t e = 0; e + 1 < edges.size(); ++e)
  {
    const double lo = edges[e], hi = edges[e + 1];
    const int count = std::max(1, int(std::ceil(panels * (hi - lo) / (x1 - x0))));
    for (int p = 0; p < count; ++p)
    {
      const double a = lo + (hi - lo) * p / count, b = lo + (hi - lo) * (p + 1) / count;
      const double eps = stack.eps_at(0.5 * (a + b));
      const auto rule = gauss_legendre(nodes, a, b);
      for (int q = 0; q < nodes; ++q)
      {
        grid.points.push_back({rule.nodes[q], 0.0});
        grid.weights.push_back(rule.weights[q]);
        grid.eps.push_back(eps);
      }
    }
  }
  return grid;
}

SampleGrid disk_grid(const RodLattice2D &lattice, double radius, int radial, int angular)
{
  if (!(radius > 0.0) || radial < 1 || angular < 1)
  {
    throw std::invalid_argument("disk_grid: empty disk or rule");
  }
  SampleGrid grid;
  const auto rule = gauss_legendre(radial, 0.0, radius);
  for (int i = 0; i < radial; ++i)
  {
    const double r = rule.nodes[i];
    for (int k = 0; k < angular; ++k)
    {
      const double t = 2.0 * pi * k / angular;
      const Point2 p{r * std::cos(t), r * std::sin(t)};
      grid.points.push_back(p);
      grid.weights.push_back(rule.weights[i] * r * 2.0 * pi / angular);
      grid.eps.push_back(lattice.eps_at(p));
    }
  }
  return grid;
}

cplx hermitian_inner_product(std::span<const cplx> field_a, std::span<const cplx> field_b,
                             const SampleGrid &grid)
{
  if (field_a.size() != grid.weights.size() || field_b.size() != grid.weights.size())
  {
    throw std::invalid_argument("hermitian_inner_product: fields must match the grid");
  }
  cplx sum = 0.0;
  for (std::size_t i = 0; i < field_a.size(); ++i)
  {
    sum += grid.weights[i] * grid.eps[i] * std::conj(field_a[i]) * field_b[i];
  }
  return sum;
}

double normal_mode_volume(std::span<const cplx> field, const SampleGrid &grid, double eps_c,
                          cplx f_c)
{
  double peak = 0.0;
  for (const auto &f : field)
  {
    peak = std::max(peak, std::norm(f));
  }
  guard_node(f_c, peak);
  return hermitian_inner_product(field, field, grid).real() / (eps_c * std::norm(f_c));
}

double normal_mode_volume(const Qnm2D &mode, const Antinode2D &antinode, double radius)
{
  const cplx f_c = field_at(mode, antinode.position);
  guard_node(f_c, peak_interior(mode));
  const auto m = disk_moments(mode, mode, std::span<const double>(&radius, 1)).front();
  return m.eps_energy / (antinode.index * antinode.index * std::norm(f_c));
}

double normal_mode_volume(const Qnm1D &mode, const Antinode1D &antinode, double x0, double x1)
{
  if (x0 > 0.0 || x1 < mode.stack().length())
  {
    throw std::invalid_argument("normal_mode_volume: interval must contain the stack");
  }
  const cplx f_c = mode.value(antinode.position);
  guard_node(f_c, peak_samples(mode));
  const double energy = overlap_integral_1d(mode.wave, mode.wave, x0, x1, true).real();
  return energy / (antinode.index * antinode.index * std::norm(f_c));
}

QnmVolume quasinormal_mode_volume(cplx norm, cplx f_c, double n_c)
{
  if (f_c == cplx(0.0))
  {
    throw NearZeroField("quasinormal_mode_volume: field vanishes at the reference point");
  }
  const cplx v = norm / (f_c * f_c);
  if (!(v.real() > 0.0))
  {
    throw DomainError("quasinormal_mode_volume: Re v_Q must be positive");
  }
  return {v, std::norm(v) / (n_c * n_c * v.real())};
}

QnmVolume quasinormal_mode_volume(const Qnm2D &mode, const Antinode2D &antinode)
{
  const cplx f_c = field_at(mode, antinode.position);
  guard_node(f_c, peak_interior(mode));
  return quasinormal_mode_volume(mode.norm, f_c, antinode.index);
}

QnmVolume quasinormal_mode_volume(const Qnm1D &mode, const Antinode1D &antinode)
{
  const cplx f_c = mode.value(antinode.position);
  guard_node(f_c, peak_samples(mode));
  return quasinormal_mode_volume(mode.norm, f_c, antinode.index);
}

double purcell_factor(double lambda_c, double n_c, double q, double v_eff)
{
  if (!(lambda_c > 0.0 && n_c > 0.0 && q > 0.0 && v_eff > 0.0))
  {
    throw std::invalid_argument("purcell_factor: inputs must be positive");
  }
  const double l = lambda_c / n_c;
  return 3.0 / (4.0 * pi * pi) * l * l * l * q / v_eff;
}

double single_mode_enhancement_2d(ComplexFrequency omega, cplx v_q)
{
  const cplx w = omega.omega;
  return 4.0 * (1.0 / (v_q * 2.0 * w * (w - w.real()))).imag();
}

LdosVolume effective_volume_from_ldos(const Qnm2D &mode, const Antinode2D &antinode)
{
  const double w = mode.omega.omega.real();
  const auto volume = quasinormal_mode_volume(mode, antinode);
  const double f_full = ldos_enhancement(mode.lattice, antinode.position, w, mode.mesh);
  const double f_single =
      4.0 * greens_single_mode(mode, antinode.position, antinode.position, w).imag();
  return {f_full, f_single, volume.v_eff_q, volume.v_eff_q * f_single / f_full};
}

LdosVolume effective_volume_from_ldos(const Qnm1D &mode, const Antinode1D &antinode)
{
  const double w = mode.omega.omega.real();
  const auto volume = quasinormal_mode_volume(mode, antinode);
  const double f_full = ldos_enhancement_1d(mode.stack(), antinode.position, w);
  const double f_single =
      greens_single_mode(mode, antinode.position, antinode.position, w).imag() * 2.0 * w *
      antinode.index;
  return {f_full, f_single, volume.v_eff_q, volume.v_eff_q * f_single / f_full};
}

std::vector<SweepRow> convergence_sweep(const Qnm2D &mode, const Antinode2D &antinode,
                                        std::span<const double> radii)
{
  if (radii.empty())
  {
    throw std::invalid_argument("convergence_sweep: no radii given");
  }
  const cplx f_c = field_at(mode, antinode.position);
  guard_node(f_c, peak_interior(mode));
  const auto moments = disk_moments(mode, mode, radii);
  const double eps_c = antinode.index * antinode.index;
  const double nb = std::sqrt(mode.lattice.eps_bg());
  std::vector<SweepRow> rows;
  rows.reserve(moments.size());
  for (const auto &m : moments)
  {
    const cplx norm = m.eps_product + I * nb / (2.0 * mode.omega.omega) * m.ring_product;
    const auto q = quasinormal_mode_volume(norm, f_c, antinode.index);
    rows.push_back({m.radius, m.eps_energy / (eps_c * std::norm(f_c)), q.v_eff_q, q.v_q});
  }
  return rows;
}

std::vector<double> default_sweep_radii(const RodLattice2D &lattice)
{
  const double a = lattice.lattice_constant();
  const double lo = lattice.circumradius() + 0.5 * a, hi = 10.0 * a;
  if (!(hi > lo))
  {
    throw InvalidGeometry("default_sweep_radii: crystallite extends beyond 10 lattice constants");
  }
  std::vector<double> radii(12);
  for (int i = 0; i < 12; ++i)
  {
    radii[i] = lo + (hi - lo) * i / 11.0;
  }
  return radii;
}

ModeVolumeReport mode_volume_report(const Qnm2D &mode, std::span<const double> radii,
                                    bool with_ldos)
{
  ModeVolumeReport report;
  report.antinode = find_antinode(mode);
  report.volume = quasinormal_mode_volume(mode, report.antinode);
  report.sweep = convergence_sweep(mode, report.antinode, radii);
  if (with_ldos)
  {
    report.ldos = effective_volume_from_ldos(mode, report.antinode);
  }
  else
  {
    report.ldos = {NAN, NAN, report.volume.v_eff_q, NAN};
  }
  return report;
}

}  // namespace qnmlab
