#pragma once

#include <vector>

#include "kcover/geometry.hpp"

namespace kcover {

// A positively oriented lattice basis. Construction flips `v` when det(u, v)
// is negative and rejects (near-)singular pairs.
class Basis {
 public:
  // Throws GeometryError("degenerate lattice") when |det| <= 1e-12 (absolute)
  // or <= 1e-12 * |u| * |v|.
  Basis(Vec2 u, Vec2 v);

  Vec2 u() const { return u_; }
  Vec2 v() const { return v_; }
  double det() const { return cross(u_, v_); }

  Point at(double s, double t) const { return s * u_ + t * v_; }
  // Coordinates (s, t) of p in this basis.
  Point fractional(Point p) const;

  friend bool operator==(const Basis&, const Basis&) = default;

 private:
  Vec2 u_;
  Vec2 v_;
};

// Lagrange-Gauss reduction: |u| <= |v|, |dot(u, v)| <= |u|^2 / 2, positive
// orientation, same lattice.
Basis reduce_basis(const Basis& b);

struct Rect {
  double xmin = 0.0;
  double ymin = 0.0;
  double xmax = 0.0;
  double ymax = 0.0;

  static Rect around(Point p) { return {p.x, p.y, p.x, p.y}; }
  double distance_to(Point p) const;
};

// Disk centers of a periodic configuration: every offset translated by every
// lattice vector. Offsets are wrapped into the half-open fundamental
// parallelogram {s u + t v : s, t in [0, 1)} at construction.
class PeriodicConfig {
 public:
  // Throws GeometryError on a non-positive radius, empty offsets, or two
  // offsets within 1e-9 of each other modulo the lattice.
  PeriodicConfig(Basis basis, std::vector<Point> offsets, double radius);

  const Basis& basis() const { return basis_; }
  // Reduced basis of the same lattice, used for enumeration bounds.
  const Basis& reduced() const { return reduced_; }
  const std::vector<Point>& offsets() const { return offsets_; }
  double radius() const { return radius_; }
  std::size_t size() const { return offsets_.size(); }

  PeriodicConfig with_radius(double radius) const;
  // Uniform scaling of basis, offsets and radius by lambda > 0.
  PeriodicConfig scaled(double lambda) const;
  // Rotation about the origin, optional reflection across the x-axis applied
  // first, then translation. Radius unchanged.
  PeriodicConfig transformed(double angle, Vec2 shift, bool reflect = false) const;

  friend bool operator==(const PeriodicConfig& a, const PeriodicConfig& b) {
    return a.basis_ == b.basis_ && a.offsets_ == b.offsets_ && a.radius_ == b.radius_;
  }

 private:
  Basis basis_;
  Basis reduced_;
  std::vector<Point> offsets_;
  double radius_;
};

// Smallest distance between p and any translate of q by the lattice.
double periodic_distance(const Basis& b, Point p, Point q);

// All centers whose closest-point distance to `rect` is at most `margin`,
// sorted by x then y.
std::vector<Point> enumerate_centers(const PeriodicConfig& c, const Rect& rect, double margin);

}  // namespace kcover
