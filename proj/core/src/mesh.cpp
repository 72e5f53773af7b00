// Copyright 2026 The qnmlab Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>

#include "qnmlab/errors.hpp"
#include "qnmlab/qnm2d.hpp"

namespace qnmlab
{

namespace
{

struct ClippedCell
{
  double area = 0.0;
  double cu = 0.0, cv = 0.0;  // centroid
};

// Area and centroid of [u0,u1]×[v0,v1] ∩ {u² + v² < R²} in closed form. Within each piece
// between breakpoints the upper/lower edges are either a pixel side or the circle.
ClippedCell clip_to_disk(double u0, double u1, double v0, double v1, double radius)
{
  const double r2 = radius * radius;
  auto s = [&](double x) { return std::sqrt(std::max(0.0, r2 - x * x)); };
  auto int_s = [&](double x)
  {
    const double xc = std::clamp(x, -radius, radius);
    return 0.5 * (xc * s(xc) + r2 * std::asin(xc / radius));
  };
  auto int_xs = [&](double x)
  {
    const double t = std::max(0.0, r2 - x * x);
    return -t * std::sqrt(t) / 3.0;
  };
  auto int_s2 = [&](double x) { return r2 * x - x * x * x / 3.0; };

  std::vector<double> bp{u0, u1};
  for (double v : {v0, v1})
  {
    if (std::abs(v) < radius)
    {
      bp.push_back(-s(v));
      bp.push_back(s(v));
    }
  }
  bp.push_back(-radius);
  bp.push_back(radius);
  std::sort(bp.begin(), bp.end());

  ClippedCell c;
  double mu = 0.0, mv = 0.0;
  for (std::size_t i = 0; i + 1 < bp.size(); ++i)
  {
    const double a = std::max(bp[i], u0), b = std::min(bp[i + 1], u1);
    if (!(b > a))
    {
      continue;
    }
    const double m = 0.5 * (a + b);
    if (std::abs(m) >= radius)
    {
      continue;
    }
    const double sm = s(m);
    const bool hi_circle = sm <= v1;
    const bool lo_circle = -sm >= v0;
    const double hi_m = hi_circle ? sm : v1;
    const double lo_m = lo_circle ? -sm : v0;
    if (!(hi_m > lo_m))
    {
      continue;
    }
    const double ds = int_s(b) - int_s(a);
    const double dxs = int_xs(b) - int_xs(a);
    const double ds2 = int_s2(b) - int_s2(a);
    const double dx2 = 0.5 * (b * b - a * a);
    const double ihi = hi_circle ? ds : v1 * (b - a);
    const double ilo = lo_circle ? -ds : v0 * (b - a);
    const double xhi = hi_circle ? dxs : v1 * dx2;
    const double xlo = lo_circle ? -dxs : v0 * dx2;
    const double hh = hi_circle ? ds2 : v1 * v1 * (b - a);
    const double ll = lo_circle ? ds2 : v0 * v0 * (b - a);
    c.area += ihi - ilo;
    mu += xhi - xlo;
    mv += 0.5 * (hh - ll);
  }
  if (c.area > 0.0)
  {
    c.cu = mu / c.area;
    c.cv = mv / c.area;
  }
  return c;
}

struct PointOp
{
  double m00, m01, m10, m11;
  bool reflection;
  Point2 apply(Point2 p) const { return {m00 * p.x + m01 * p.y, m10 * p.x + m11 * p.y}; }
};

// C6v: rotations by k·60° and reflections across the lines at k·30°.
std::array<PointOp, 12> hexagonal_group()
{
  std::array<PointOp, 12> ops;
  for (int k = 0; k < 6; ++k)
  {
    const double a = k * pi / 3.0;
    const double c = std::cos(a), s = std::sin(a);
    ops[2 * k] = {c, -s, s, c, false};
    ops[2 * k + 1] = {c, s, s, -c, true};
  }
  return ops;
}

std::optional<std::vector<int>> rod_permutation(const std::vector<Point2> &centers,
                                                const PointOp &op, double tol)
{
  std::vector<int> perm(centers.size(), -1);
  for (std::size_t i = 0; i < centers.size(); ++i)
  {
    const Point2 q = op.apply(centers[i]);
    for (std::size_t j = 0; j < centers.size(); ++j)
    {
      if (distance(q, centers[j]) < tol)
      {
        perm[i] = int(j);
        break;
      }
    }
    if (perm[i] < 0)
    {
      return std::nullopt;
    }
  }
  return perm;
}

}  // namespace

ScattererMesh::ScattererMesh(const RodLattice2D &lattice, int resolution)
  : resolution_(resolution)
{
  if (resolution < 1)
  {
    throw InvalidGeometry("mesh resolution must be at least one cell per rod diameter");
  }
  const double radius = lattice.rod_radius();
  pixel_ = 2.0 * radius / resolution;

  struct Local
  {
    int ix, iy;
    ClippedCell geom;
  };
  std::vector<Local> local;
  for (int ix = 0; ix < resolution; ++ix)
  {
    for (int iy = 0; iy < resolution; ++iy)
    {
      const double u0 = -radius + ix * pixel_, v0 = -radius + iy * pixel_;
      const auto g = clip_to_disk(u0, u0 + pixel_, v0, v0 + pixel_, radius);
      if (g.area > 1e-9 * pixel_ * pixel_)
      {
        local.push_back({ix, iy, g});
      }
    }
  }

  const auto &centers = lattice.rod_centers();
  const int per_rod = resolution * resolution;
  std::vector<int> lookup(centers.size() * per_rod, -1);
  cells_.reserve(centers.size() * local.size());
  for (std::size_t r = 0; r < centers.size(); ++r)
  {
    const double theta = std::atan2(centers[r].y, centers[r].x);
    const double c = std::cos(theta), s = std::sin(theta);
    for (const auto &l : local)
    {
      const Point2 p{centers[r].x + c * l.geom.cu - s * l.geom.cv,
                     centers[r].y + s * l.geom.cu + c * l.geom.cv};
      lookup[r * per_rod + l.ix * resolution + l.iy] = int(cells_.size());
      cells_.push_back({p, l.geom.area, int(r), l.ix, l.iy});
    }
  }
  eq_radius_.resize(cells_.size());
  for (std::size_t i = 0; i < cells_.size(); ++i)
  {
    eq_radius_[i] = std::sqrt(cells_[i].area / pi);
  }

  // Cell permutation induced by a point operation, if the lattice is invariant under it.
  const double tol = 1e-9 * lattice.lattice_constant();
  auto cell_map = [&](const PointOp &op) -> std::optional<std::vector<int>>
  {
    const auto perm = rod_permutation(centers, op, tol);
    if (!perm)
    {
      return std::nullopt;
    }
    std::vector<int> map(cells_.size());
    for (std::size_t i = 0; i < cells_.size(); ++i)
    {
      const auto &cell = cells_[i];
      const int iy = op.reflection ? resolution - 1 - cell.iy : cell.iy;
      const int j = lookup[(*perm)[cell.rod] * per_rod + cell.ix * resolution + iy];
      if (j < 0)
      {
        return std::nullopt;
      }
      map[i] = j;
    }
    return map;
  };

  const auto group = hexagonal_group();
  if (auto m = cell_map(group[7]))  // reflection across the y axis
  {
    mirror_x_ = std::move(*m);
  }
  std::vector<std::vector<int>> maps;
  for (const auto &op : group)
  {
    auto m = cell_map(op);
    if (!m)
    {
      maps.clear();
      break;
    }
    maps.push_back(std::move(*m));
  }
  if (!maps.empty() && !cells_.empty())
  {
    orbit_of_.assign(cells_.size(), -1);
    for (std::size_t i = 0; i < cells_.size(); ++i)
    {
      if (orbit_of_[i] >= 0)
      {
        continue;
      }
      const int id = int(orbit_reps_.size());
      orbit_reps_.push_back(int(i));
      for (const auto &m : maps)
      {
        orbit_of_[m[i]] = id;
      }
    }
  }
}

}  // namespace qnmlab
