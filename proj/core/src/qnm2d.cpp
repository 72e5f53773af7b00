// Copyright 2026 The qnmlab Authors
// SPDX-License-Identifier: Apache-2.0

#include "qnmlab/qnm2d.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qnmlab/errors.hpp"

namespace qnmlab
{

namespace
{

constexpr cplx I{0.0, 1.0};

// Quadrature layout for disk integrals: fine inside the crystallite, where the field has
// kinks at rod boundaries, coarser in the smooth exterior.
constexpr double inner_panel = 0.125;
constexpr int inner_panel_nodes = 6;
constexpr double inner_arc = 0.04;
constexpr double outer_panel = 0.5;
constexpr int outer_panel_nodes = 10;
constexpr double outer_arc = 0.1;

cplx background_wavenumber(const RodLattice2D &lattice, cplx omega)
{
  return omega * std::sqrt(lattice.eps_bg());
}

}  // namespace

cplx disk_integral_green(cplx k, double radius, double rho)
{
  const cplx ka = k * radius;
  const cplx pre = I * pi * radius / (2.0 * k);
  if (rho < radius)
  {
    return -1.0 / (k * k) + pre * hankel1_first_kind(ka) * bessel_j0(k * rho);
  }
  return pre * bessel_j1(ka) * hankel0_first_kind(k * rho);
}

ComplexMatrix assemble_ls_operator(const RodLattice2D &lattice, cplx omega,
                                   const ScattererMesh &mesh)
{
  if (omega == cplx(0.0))
  {
    throw std::invalid_argument("assemble_ls_operator: omega must be non-zero");
  }
  const auto &cells = mesh.cells();
  const Eigen::Index n = Eigen::Index(cells.size());
  ComplexMatrix a = ComplexMatrix::Zero(n, n);
  const double de = lattice.delta_eps();
  if (de == 0.0)
  {
    return a;
  }
  const cplx kb = background_wavenumber(lattice, omega);
  const cplx coupling = omega * omega * de;
  const cplx point = coupling * 0.25 * I;

#pragma omp parallel for schedule(dynamic, 16)
  for (Eigen::Index i = 0; i < n; ++i)
  {
    a(i, i) = coupling * disk_integral_green(kb, mesh.equivalent_radius(i), 0.0);
    for (Eigen::Index j = i + 1; j < n; ++j)
    {
      const cplx h = point * hankel0_first_kind(kb * distance(cells[i].center, cells[j].center));
      a(i, j) = h * cells[j].area;
      a(j, i) = h * cells[i].area;
    }
  }
  return a;
}

ComplexMatrix assemble_ls_operator_a1(const RodLattice2D &lattice, cplx omega,
                                      const ScattererMesh &mesh)
{
  if (!mesh.has_hexagonal_symmetry())
  {
    throw std::invalid_argument("assemble_ls_operator_a1: mesh lacks hexagonal symmetry");
  }
  if (omega == cplx(0.0))
  {
    throw std::invalid_argument("assemble_ls_operator_a1: omega must be non-zero");
  }
  const auto &cells = mesh.cells();
  const auto &reps = mesh.orbit_representatives();
  const auto &orbit = mesh.orbit_of();
  const Eigen::Index m = Eigen::Index(reps.size());
  ComplexMatrix a = ComplexMatrix::Zero(m, m);
  const double de = lattice.delta_eps();
  if (de == 0.0)
  {
    return a;
  }
  const cplx kb = background_wavenumber(lattice, omega);
  const cplx coupling = omega * omega * de;
  const cplx point = coupling * 0.25 * I;

#pragma omp parallel for schedule(dynamic, 4)
  for (Eigen::Index r = 0; r < m; ++r)
  {
    const int i = reps[r];
    for (std::size_t j = 0; j < cells.size(); ++j)
    {
      cplx v;
      if (int(j) == i)
      {
        v = coupling * disk_integral_green(kb, mesh.equivalent_radius(j), 0.0);
      }
      else
      {
        v = point * hankel0_first_kind(kb * distance(cells[i].center, cells[j].center)) *
            cells[j].area;
      }
      a(r, orbit[j]) += v;
    }
  }
  return a;
}

std::vector<cplx> radiate_from_cells(const RodLattice2D &lattice, const ScattererMesh &mesh,
                                     cplx omega, const ComplexVector &values,
                                     std::span<const Point2> points)
{
  const auto &cells = mesh.cells();
  std::vector<cplx> out(points.size(), 0.0);
  const double de = lattice.delta_eps();
  if (de == 0.0 || cells.empty())
  {
    return out;
  }
  const cplx kb = background_wavenumber(lattice, omega);
  const cplx coupling = omega * omega * de;

#pragma omp parallel for schedule(dynamic, 8)
  for (std::size_t p = 0; p < points.size(); ++p)
  {
    const Point2 r = points[p];
    // Nearest cell whose equivalent disk contains r gets the disk integral.
    std::ptrdiff_t inside = -1;
    double inside_ratio = 1.0;
    for (std::size_t j = 0; j < cells.size(); ++j)
    {
      const double ratio = distance(r, cells[j].center) / mesh.equivalent_radius(j);
      if (ratio < inside_ratio)
      {
        inside_ratio = ratio;
        inside = std::ptrdiff_t(j);
      }
    }
    cplx sum = 0.0;
    for (std::size_t j = 0; j < cells.size(); ++j)
    {
      const double d = distance(r, cells[j].center);
      if (std::ptrdiff_t(j) == inside)
      {
        sum += disk_integral_green(kb, mesh.equivalent_radius(j), d) * values(j);
      }
      else
      {
        sum += 0.25 * I * hankel0_first_kind(kb * d) * cells[j].area * values(j);
      }
    }
    out[p] = coupling * sum;
  }
  return out;
}

Qnm2D Qnm2D::scaled(cplx alpha) const
{
  Qnm2D out = *this;
  out.interior_values *= alpha;
  out.norm *= alpha * alpha;
  return out;
}

namespace
{

struct SectorOperator
{
  const RodLattice2D &lattice;
  const ScattererMesh &mesh;
  SymmetrySector sector;

  ComplexMatrix operator()(cplx omega) const
  {
    return sector == SymmetrySector::A1 ? assemble_ls_operator_a1(lattice, omega, mesh)
                                        : assemble_ls_operator(lattice, omega, mesh);
  }

  ComplexVector expand(const ComplexVector &v) const
  {
    if (sector == SymmetrySector::Full)
    {
      return v;
    }
    const auto &orbit = mesh.orbit_of();
    ComplexVector full(orbit.size());
    for (std::size_t j = 0; j < orbit.size(); ++j)
    {
      full(j) = v(orbit[j]);
    }
    return full;
  }
};

SymmetrySector usable_sector(const ScattererMesh &mesh, SymmetrySector requested,
                             std::vector<std::string> *warnings)
{
  if (requested == SymmetrySector::A1 && !mesh.has_hexagonal_symmetry())
  {
    if (warnings)
    {
      warnings->push_back("mesh lacks hexagonal symmetry; solving the full operator");
    }
    return SymmetrySector::Full;
  }
  return requested;
}

double default_normalization_radius(const RodLattice2D &lattice)
{
  const double a = lattice.lattice_constant();
  return std::max(6.0 * a, lattice.circumradius() + 2.0 * a);
}

}  // namespace

Qnm2D find_qnm_2d(const RodLattice2D &lattice, cplx nu_guess, int resolution,
                  const Qnm2DOptions &options)
{
  return find_qnm_2d(lattice, nu_guess, std::make_shared<const ScattererMesh>(lattice, resolution),
                     options);
}

Qnm2D find_qnm_2d(const RodLattice2D &lattice, cplx nu_guess,
                  std::shared_ptr<const ScattererMesh> mesh, const Qnm2DOptions &options)
{
  if (lattice.delta_eps() == 0.0)
  {
    throw NoConvergence("homogeneous medium: no quasinormal modes exist", nu_guess, INFINITY);
  }
  std::vector<std::string> warnings;
  const SymmetrySector sector = usable_sector(*mesh, options.sector, &warnings);
  const SectorOperator op{lattice, *mesh, sector};
  const double a = lattice.lattice_constant();

  ComplexVector warm;
  auto eigen_at = [&](cplx nu)
  {
    const ComplexMatrix m = op(ComplexFrequency::from_normalized(nu, a).omega);
    auto pair = nearest_eigenpair(m, 1.0, warm.size() ? &warm : nullptr);
    warm = pair.vector;
    return pair;
  };
  const auto root = find_root_complex([&](cplx nu) { return eigen_at(nu).value - 1.0; },
                                      nu_guess, options.tolerance, options.max_iter);
  const ComplexFrequency freq = ComplexFrequency::from_normalized(root.root, a);
  if (!freq.is_physical())
  {
    std::ostringstream msg;
    msg << "root at omega*a/2pi c = " << root.root << " is not a decaying resonance";
    throw SpuriousRoot(msg.str(), root.root, root.residual);
  }

  const ComplexMatrix m = op(freq.omega);
  const auto pair = nearest_eigenpair(m, 1.0, &warm);
  if (m.rows() <= 1500)
  {
    const auto all = dense_eigensolve(m, cplx(1.0));
    if (all.size() > 1 && std::abs(all[1].value - 1.0) < 1e-3)
    {
      std::ostringstream msg;
      msg << "mode collision: second eigenvalue " << all[1].value << " within 1e-3 of 1";
      warnings.push_back(msg.str());
    }
  }

  Qnm2D mode{freq,
             lattice,
             mesh,
             op.expand(pair.vector),
             1.0,
             options.normalization_radius > 0.0 ? options.normalization_radius
                                                : default_normalization_radius(lattice),
             sector,
             std::abs(pair.value - 1.0),
             std::move(warnings)};
  const double r = mode.normalization_radius;
  const cplx norm = qnm_self_products(mode, std::span<const double>(&r, 1)).front();
  mode = mode.scaled(1.0 / std::sqrt(norm));
  mode.norm = qnm_self_products(mode, std::span<const double>(&r, 1)).front();
  return mode;
}

double seed_scan_2d(const RodLattice2D &lattice, const ScattererMesh &mesh,
                    SymmetrySector sector, double nu_min, double nu_max, double step)
{
  const SectorOperator op{lattice, mesh, usable_sector(mesh, sector, nullptr)};
  const double a = lattice.lattice_constant();
  double best_nu = nu_min, best = INFINITY;
  const int count = int(std::floor((nu_max - nu_min) / step + 1e-9)) + 1;
  ComplexVector warm;
  for (int i = 0; i < count; ++i)
  {
    const double nu = nu_min + i * step;
    const auto pair = nearest_eigenpair(op(ComplexFrequency::from_normalized(nu, a).omega), 1.0,
                                        warm.size() ? &warm : nullptr);
    warm = pair.vector;
    const double dist = std::abs(pair.value - 1.0);
    if (dist < best)
    {
      best = dist;
      best_nu = nu;
    }
  }
  return best_nu;
}

std::vector<cplx> evaluate_qnm_field(const Qnm2D &mode, std::span<const Point2> points)
{
  return radiate_from_cells(mode.lattice, *mode.mesh, mode.omega.omega, mode.interior_values,
                            points);
}

std::vector<DiskMoments> disk_moments(const Qnm2D &a, const Qnm2D &b,
                                      std::span<const double> radii)
{
  const auto &lattice = a.lattice;
  const double unit = lattice.lattice_constant();
  const double rc = lattice.circumradius();
  for (std::size_t i = 0; i < radii.size(); ++i)
  {
    if (!(radii[i] > rc) || (i > 0 && !(radii[i] > radii[i - 1])))
    {
      throw std::invalid_argument(
          "disk_moments: radii must increase and exceed the crystallite circumradius");
    }
  }
  const bool same = &a == &b;
  const bool sector = a.sector == SymmetrySector::A1 && b.sector == SymmetrySector::A1;
  const double span_angle = sector ? pi / 6.0 : 2.0 * pi;
  const double copies = sector ? 12.0 : 1.0;
  const double inner_edge = rc + 0.5 * unit;

  // Radial nodes, panel by panel, with panel edges at each requested radius.
  struct Ring
  {
    double r, weight;
    std::size_t first, count;
    std::vector<double> angle_weights;
  };
  std::vector<Ring> rings;
  std::vector<Point2> points;
  auto add_ring = [&](double r, double weight)
  {
    const double arc = r < inner_edge ? inner_arc * unit : outer_arc * unit;
    Ring ring{r, weight, points.size(), 0, {}};
    if (sector)
    {
      const int m = std::max(8, int(std::ceil(span_angle * r / arc)));
      for (int k = 0; k <= m; ++k)
      {
        const double t = span_angle * k / m;
        points.push_back({r * std::cos(t), r * std::sin(t)});
        ring.angle_weights.push_back(copies * span_angle / m * ((k == 0 || k == m) ? 0.5 : 1.0));
      }
    }
    else
    {
      const int m = std::max(64, int(std::ceil(span_angle * r / arc)));
      for (int k = 0; k < m; ++k)
      {
        const double t = span_angle * k / m;
        points.push_back({r * std::cos(t), r * std::sin(t)});
        ring.angle_weights.push_back(span_angle / m);
      }
    }
    ring.count = points.size() - ring.first;
    rings.push_back(std::move(ring));
  };

  std::vector<std::size_t> panel_end;  // number of area rings up to each radius
  std::vector<std::size_t> edge_ring;  // index of the ring on each requested circle
  double start = 0.0;
  for (double radius : radii)
  {
    // Split at the inner/outer transition so panels follow the local resolution.
    std::vector<double> edges{start};
    if (start < inner_edge && radius > inner_edge)
    {
      edges.push_back(inner_edge);
    }
    edges.push_back(radius);
    for (std::size_t e = 0; e + 1 < edges.size(); ++e)
    {
      const double lo = edges[e], hi = edges[e + 1];
      const bool inner = hi <= inner_edge + 1e-12;
      const double width = (inner ? inner_panel : outer_panel) * unit;
      const int nodes = inner ? inner_panel_nodes : outer_panel_nodes;
      const int panels = std::max(1, int(std::ceil((hi - lo) / width)));
      for (int p = 0; p < panels; ++p)
      {
        const auto rule =
            gauss_legendre(nodes, lo + (hi - lo) * p / panels, lo + (hi - lo) * (p + 1) / panels);
        for (int q = 0; q < nodes; ++q)
        {
          add_ring(rule.nodes[q], rule.weights[q] * rule.nodes[q]);
        }
      }
    }
    panel_end.push_back(rings.size());
    add_ring(radius, 0.0);
    edge_ring.push_back(rings.size() - 1);
    start = radius;
  }

  const auto fa = evaluate_qnm_field(a, points);
  const auto fb = same ? fa : evaluate_qnm_field(b, points);

  const double eb = lattice.eps_bg();
  const double de = lattice.delta_eps();
  const auto &cells = a.mesh->cells();
  cplx rod_product = 0.0;
  double rod_energy = 0.0;
  for (std::size_t j = 0; j < cells.size(); ++j)
  {
    rod_product += de * cells[j].area * a.interior_values(j) * b.interior_values(j);
    rod_energy += de * cells[j].area * std::norm(a.interior_values(j));
  }

  auto ring_sum = [&](const Ring &ring, auto &&f)
  {
    using T = decltype(f(std::size_t(0)));
    T s{};
    for (std::size_t k = 0; k < ring.count; ++k)
    {
      s += ring.angle_weights[k] * f(ring.first + k);
    }
    return s;
  };
  auto product = [&](std::size_t p) { return fa[p] * fb[p]; };
  auto energy = [&](std::size_t p) { return std::norm(fa[p]); };

  std::vector<DiskMoments> out;
  cplx area_product = 0.0;
  double area_energy = 0.0;
  std::size_t next = 0;
  for (std::size_t i = 0; i < radii.size(); ++i)
  {
    for (; next < panel_end[i]; ++next)
    {
      const auto &ring = rings[next];
      if (ring.weight == 0.0)
      {
        continue;  // circle rings of earlier radii
      }
      area_product += ring.weight * ring_sum(ring, product);
      area_energy += ring.weight * ring_sum(ring, energy);
    }
    next = edge_ring[i] + 1;
    const auto &edge = rings[edge_ring[i]];
    out.push_back({radii[i], eb * area_product + rod_product, eb * area_energy + rod_energy,
                   edge.r * ring_sum(edge, product)});
  }
  return out;
}

cplx qnm_inner_product_2d(const Qnm2D &a, const Qnm2D &b, double radius)
{
  const auto m = disk_moments(a, b, std::span<const double>(&radius, 1)).front();
  const double nb = std::sqrt(a.lattice.eps_bg());
  return m.eps_product + I * nb / (a.omega.omega + b.omega.omega) * m.ring_product;
}

std::vector<cplx> qnm_self_products(const Qnm2D &mode, std::span<const double> radii)
{
  const auto moments = disk_moments(mode, mode, radii);
  const double nb = std::sqrt(mode.lattice.eps_bg());
  std::vector<cplx> out;
  out.reserve(moments.size());
  for (const auto &m : moments)
  {
    out.push_back(m.eps_product + I * nb / (2.0 * mode.omega.omega) * m.ring_product);
  }
  return out;
}

}  // namespace qnmlab
