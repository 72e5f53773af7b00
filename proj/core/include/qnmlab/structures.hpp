// Copyright 2026 The qnmlab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace qnmlab
{

struct Point2
{
  double x = 0.0;
  double y = 0.0;

  friend Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }
  friend bool operator==(Point2 a, Point2 b) = default;
};

inline double norm(Point2 p) { return std::hypot(p.x, p.y); }
inline double distance(Point2 a, Point2 b) { return norm(a - b); }

struct Layer
{
  double thickness;
  double eps;
};

// Lossless dielectric layers occupying [0, L] between two semi-infinite claddings.
class LayeredStack1D
{
public:
  LayeredStack1D(std::vector<Layer> layers, double eps_left, double eps_right);

  const std::vector<Layer> &layers() const { return layers_; }
  double eps_left() const { return eps_left_; }
  double eps_right() const { return eps_right_; }
  double length() const { return length_; }

  // Left edge of each layer, plus L as the final entry.
  const std::vector<double> &interfaces() const { return interfaces_; }

  // Index of the layer containing x, -1 for the left cladding, layers().size() for the
  // right one. Interfaces belong to the layer on their +x side.
  int region_of(double x) const;

  double eps_at(double x) const;

private:
  std::vector<Layer> layers_;
  double eps_left_, eps_right_;
  double length_ = 0.0;
  std::vector<double> interfaces_;
};

// Finite crystallite of identical circular rods in a uniform background.
class RodLattice2D
{
public:
  RodLattice2D(double lattice_constant, double rod_radius, double eps_rod, double eps_bg,
               std::vector<Point2> rod_centers, int layers);

  double lattice_constant() const { return a_; }
  double rod_radius() const { return radius_; }
  double eps_rod() const { return eps_rod_; }
  double eps_bg() const { return eps_bg_; }
  double delta_eps() const { return eps_rod_ - eps_bg_; }
  const std::vector<Point2> &rod_centers() const { return centers_; }
  int layers() const { return layers_; }

  // Radius of the smallest origin-centred circle containing every rod.
  double circumradius() const;

  // Index of the rod whose open disk contains p, or -1. Boundary points are outside.
  int rod_containing(Point2 p) const;

  double eps_at(Point2 p) const { return rod_containing(p) >= 0 ? eps_rod_ : eps_bg_; }

private:
  double a_, radius_, eps_rod_, eps_bg_;
  std::vector<Point2> centers_;
  int layers_;
};

// N complete hexagonal rings of a triangular lattice around an omitted central rod;
// 3N(N+1) rods ordered ring by ring, counter-clockwise from the +x axis.
RodLattice2D build_hexagonal_crystallite(int layers, double a, double rod_radius,
                                         double eps_rod, double eps_bg);

struct StructureSpec
{
  std::string name;
  std::variant<LayeredStack1D, RodLattice2D> geometry;

  bool is_1d() const { return std::holds_alternative<LayeredStack1D>(geometry); }
  bool is_2d() const { return std::holds_alternative<RodLattice2D>(geometry); }
  const LayeredStack1D &stack() const;
  const RodLattice2D &lattice() const;
};

double epsilon_at(const StructureSpec &spec, double x);
double epsilon_at(const StructureSpec &spec, Point2 p);

// Named presets: paper-2d-crystallite[-N1|-N2|-N3], homogeneous-2d, slab-n2, slab-n3p4,
// slab-n6. Throws ConfigError for unknown names.
StructureSpec preset(std::string_view name);
std::vector<std::string> preset_names();

// JSON structure schema ("rod_lattice" / "layered_stack"). Throws ConfigError on malformed
// input and InvalidGeometry on invalid values.
StructureSpec structure_from_json(std::string_view text);
std::string structure_to_json(const StructureSpec &spec);

}  // namespace qnmlab
