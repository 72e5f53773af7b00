// Copyright 2026 The qnmlab Authors
// SPDX-License-Identifier: Apache-2.0

#include "qnmlab/structures.hpp"

#include <algorithm>
#include <array>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "qnmlab/errors.hpp"

namespace qnmlab
{

LayeredStack1D::LayeredStack1D(std::vector<Layer> layers, double eps_left, double eps_right)
  : layers_(std::move(layers)), eps_left_(eps_left), eps_right_(eps_right)
{
  if (!(eps_left_ >= 1.0) || !(eps_right_ >= 1.0))
  {
    throw InvalidGeometry("cladding permittivities must be >= 1");
  }
  interfaces_.reserve(layers_.size() + 1);
  for (const auto &layer : layers_)
  {
    if (!(layer.thickness > 0.0))
    {
      throw InvalidGeometry("layer thickness must be positive");
    }
    if (!(layer.eps >= 1.0))
    {
      throw InvalidGeometry("layer permittivity must be >= 1");
    }
    interfaces_.push_back(length_);
    length_ += layer.thickness;
  }
  interfaces_.push_back(length_);
}

int LayeredStack1D::region_of(double x) const
{
  if (x < 0.0)
  {
    return -1;
  }
  const auto it = std::upper_bound(interfaces_.begin(), interfaces_.end(), x);
  return int(it - interfaces_.begin()) - 1;
}

double LayeredStack1D::eps_at(double x) const
{
  const int r = region_of(x);
  if (r < 0)
  {
    return eps_left_;
  }
  if (r >= int(layers_.size()))
  {
    return eps_right_;
  }
  return layers_[r].eps;
}

RodLattice2D::RodLattice2D(double lattice_constant, double rod_radius, double eps_rod,
                           double eps_bg, std::vector<Point2> rod_centers, int layers)
  : a_(lattice_constant), radius_(rod_radius), eps_rod_(eps_rod), eps_bg_(eps_bg),
    centers_(std::move(rod_centers)), layers_(layers)
{
  if (!(radius_ > 0.0) || !(a_ > 2.0 * radius_))
  {
    throw InvalidGeometry("rod lattice requires a > 2R > 0");
  }
  if (!(eps_bg_ >= 1.0) || !(eps_rod_ >= eps_bg_))
  {
    throw InvalidGeometry("rod lattice requires eps_rod >= eps_bg >= 1");
  }
  for (std::size_t i = 0; i < centers_.size(); ++i)
  {
    for (std::size_t j = i + 1; j < centers_.size(); ++j)
    {
      if (distance(centers_[i], centers_[j]) <= 2.0 * radius_)
      {
        throw InvalidGeometry("rods overlap");
      }
    }
  }
}

double RodLattice2D::circumradius() const
{
  double r = 0.0;
  for (const auto &c : centers_)
  {
    r = std::max(r, norm(c));
  }
  return r + radius_;
}

int RodLattice2D::rod_containing(Point2 p) const
{
  const double r2 = radius_ * radius_;
  for (std::size_t i = 0; i < centers_.size(); ++i)
  {
    const double dx = p.x - centers_[i].x, dy = p.y - centers_[i].y;
    if (dx * dx + dy * dy < r2)
    {
      return int(i);
    }
  }
  return -1;
}

RodLattice2D build_hexagonal_crystallite(int layers, double a, double rod_radius,
                                         double eps_rod, double eps_bg)
{
  if (layers < 1)
  {
    throw InvalidGeometry("crystallite needs at least one ring of rods");
  }
  if (!(rod_radius > 0.0) || !(a > 2.0 * rod_radius))
  {
    throw InvalidGeometry("crystallite requires a > 2R > 0");
  }
  std::array<Point2, 6> corner;
  for (int k = 0; k < 6; ++k)
  {
    const double t = k * std::numbers::pi / 3.0;
    corner[k] = {std::cos(t), std::sin(t)};
  }
  std::vector<Point2> centers;
  centers.reserve(3 * layers * (layers + 1));
  for (int ring = 1; ring <= layers; ++ring)
  {
    for (int side = 0; side < 6; ++side)
    {
      const Point2 from = corner[side];
      const Point2 to = corner[(side + 1) % 6];
      for (int step = 0; step < ring; ++step)
      {
        // Integer lattice combination keeps sites symmetric to rounding level.
        const double s = double(step);
        const double r = double(ring);
        centers.push_back({a * ((r - s) * from.x + s * to.x), a * ((r - s) * from.y + s * to.y)});
      }
    }
  }
  return RodLattice2D(a, rod_radius, eps_rod, eps_bg, std::move(centers), layers);
}

const LayeredStack1D &StructureSpec::stack() const
{
  if (!is_1d())
  {
    throw std::invalid_argument("structure '" + name + "' is not a layered stack");
  }
  return std::get<LayeredStack1D>(geometry);
}

const RodLattice2D &StructureSpec::lattice() const
{
  if (!is_2d())
  {
    throw std::invalid_argument("structure '" + name + "' is not a rod lattice");
  }
  return std::get<RodLattice2D>(geometry);
}

double epsilon_at(const StructureSpec &spec, double x) { return spec.stack().eps_at(x); }

double epsilon_at(const StructureSpec &spec, Point2 p) { return spec.lattice().eps_at(p); }

namespace
{

constexpr double reference_rod_radius = 0.15;
constexpr double reference_eps_rod = 11.4;

StructureSpec reference_crystallite(std::string name, int layers)
{
  return {std::move(name),
          build_hexagonal_crystallite(layers, 1.0, reference_rod_radius, reference_eps_rod, 1.0)};
}

StructureSpec slab(std::string name, double index)
{
  return {std::move(name), LayeredStack1D({{1.0, index * index}}, 1.0, 1.0)};
}

}  // namespace

std::vector<std::string> preset_names()
{
  return {"paper-2d-crystallite",    "paper-2d-crystallite-N1", "paper-2d-crystallite-N2",
          "paper-2d-crystallite-N3", "homogeneous-2d",          "slab-n2",
          "slab-n3p4",               "slab-n6"};
}

StructureSpec preset(std::string_view name)
{
  if (name == "paper-2d-crystallite" || name == "paper-2d-crystallite-N2")
  {
    return reference_crystallite(std::string(name), 2);
  }
  if (name == "paper-2d-crystallite-N1")
  {
    return reference_crystallite(std::string(name), 1);
  }
  if (name == "paper-2d-crystallite-N3")
  {
    return reference_crystallite(std::string(name), 3);
  }
  if (name == "homogeneous-2d")
  {
    return {std::string(name), build_hexagonal_crystallite(2, 1.0, reference_rod_radius, 1.0, 1.0)};
  }
  if (name == "slab-n2")
  {
    return slab(std::string(name), 2.0);
  }
  if (name == "slab-n3p4")
  {
    return slab(std::string(name), 3.4);
  }
  if (name == "slab-n6")
  {
    return slab(std::string(name), 6.0);
  }
  throw ConfigError("unknown preset '" + std::string(name) + "'");
}

namespace
{

using nlohmann::json;

template <typename T>
T required(const json &j, const char *key)
{
  if (!j.contains(key))
  {
    throw ConfigError(std::string("structure is missing required field '") + key + "'");
  }
  try
  {
    return j.at(key).get<T>();
  }
  catch (const json::exception &e)
  {
    throw ConfigError(std::string("field '") + key + "' has the wrong type: " + e.what());
  }
}

}  // namespace

StructureSpec structure_from_json(std::string_view text)
{
  json j;
  try
  {
    j = json::parse(text);
  }
  catch (const json::parse_error &e)
  {
    throw ConfigError(std::string("malformed structure JSON: ") + e.what());
  }
  if (!j.is_object())
  {
    throw ConfigError("structure JSON must be an object");
  }
  const auto type = required<std::string>(j, "type");
  std::string name = j.value("name", type);
  if (type == "rod_lattice")
  {
    return {std::move(name), build_hexagonal_crystallite(
                                 required<int>(j, "layers"), j.value("a", 1.0),
                                 required<double>(j, "rod_radius"), required<double>(j, "eps_rod"),
                                 j.value("eps_bg", 1.0))};
  }
  if (type == "layered_stack")
  {
    const auto &arr = j.contains("layers") ? j.at("layers") : json::array();
    if (!arr.is_array())
    {
      throw ConfigError("'layers' must be an array of {thickness, eps}");
    }
    std::vector<Layer> layers;
    for (const auto &l : arr)
    {
      layers.push_back({required<double>(l, "thickness"), required<double>(l, "eps")});
    }
    return {std::move(name), LayeredStack1D(std::move(layers), j.value("eps_left", 1.0),
                                            j.value("eps_right", 1.0))};
  }
  throw ConfigError("unknown structure type '" + type + "'");
}

std::string structure_to_json(const StructureSpec &spec)
{
  json j;
  if (spec.is_2d())
  {
    const auto &lat = spec.lattice();
    j = {{"type", "rod_lattice"},       {"name", spec.name},
         {"a", lat.lattice_constant()}, {"rod_radius", lat.rod_radius()},
         {"eps_rod", lat.eps_rod()},    {"eps_bg", lat.eps_bg()},
         {"layers", lat.layers()}};
  }
  else
  {
    const auto &st = spec.stack();
    json layers = json::array();
    for (const auto &l : st.layers())
    {
      layers.push_back({{"thickness", l.thickness}, {"eps", l.eps}});
    }
    j = {{"type", "layered_stack"},
         {"name", spec.name},
         {"eps_left", st.eps_left()},
         {"eps_right", st.eps_right()},
         {"layers", layers}};
  }
  return j.dump();
}

}  // namespace qnmlab
