#pragma once

#include <cmath>
#include <span>
#include <vector>

namespace kcover {

// Representation tolerance: coordinates closer than this are the same point.
inline constexpr double kReprTol = 1e-12;
// Default tolerance for geometric predicates.
inline constexpr double kGeomTol = 1e-9;

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Point operator-(Point a) { return {-a.x, -a.y}; }
  friend constexpr Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
  friend constexpr Point operator*(Point a, double s) { return {s * a.x, s * a.y}; }
  friend constexpr bool operator==(Point a, Point b) = default;
};

// Same type used for displacement vectors.
using Vec2 = Point;

constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
constexpr double norm2(Vec2 a) { return dot(a, a); }
inline double distance(Point a, Point b) { return norm(a - b); }

// Rotates a vector counter-clockwise by `angle` radians.
inline Vec2 rotated(Vec2 a, double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  return {c * a.x - s * a.y, s * a.x + c * a.y};
}

// Lexicographic (x, then y) ordering.
constexpr bool lex_less(Point a, Point b) {
  return a.x < b.x || (a.x == b.x && a.y < b.y);
}

class Circle {
 public:
  // Throws GeometryError unless radius > 0 and all values are finite.
  Circle(Point center, double radius);

  Point center() const { return center_; }
  double radius() const { return radius_; }

 private:
  Point center_;
  double radius_;
};

// Counter-clockwise, strictly convex polygon without repeated or collinear
// vertices.
class ConvexPolygon {
 public:
  // Normalizes the vertex list: drops repeated vertices (within kReprTol),
  // merges collinear runs and orients counter-clockwise. Throws GeometryError
  // if fewer than three vertices remain or the input is not convex.
  explicit ConvexPolygon(std::vector<Point> vertices);

  std::span<const Point> vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }

  bool contains(Point p, double tol = kGeomTol) const;

 private:
  std::vector<Point> vertices_;
};

// A closed half-plane {p : dot(normal, p) <= offset}.
struct HalfPlane {
  Vec2 normal;
  double offset;
};

// Points on both circles, sorted by x then y. A tangency yields exactly one
// point. Throws GeometryError("degenerate: coincident") for identical circles.
std::vector<Point> circle_circle_intersections(const Circle& c1, const Circle& c2);

// Circle through three points. Throws GeometryError("collinear") when the
// triangle area is below 1e-12 times its squared diameter.
Circle circumcircle(Point a, Point b, Point c);

// Shoelace area of a counter-clockwise polygon.
double polygon_area(const ConvexPolygon& polygon);
double polygon_area(std::span<const Point> ccw_vertices);

// Sutherland-Hodgman step for a convex vertex loop. Vertices with
// dot(normal, p) - offset <= eps are kept. May return fewer than three
// vertices when the half-plane cuts the polygon away.
std::vector<Point> clip_convex(std::span<const Point> vertices, const HalfPlane& h,
                               double eps = 0.0);

// Circumradius of the triangle formed by the pairwise second intersections of
// three equal circles of radius r through q, given their centers. Johnson's
// theorem says this equals r.
//
// Throws GeometryError("not concurrent") when a center is not at distance r
// from q (within 1e-9 relative to r), and GeometryError("degenerate tangency")
// when two of the circles touch only at q.
double johnson_check(Point q, std::span<const Point, 3> centers, double r);

}  // namespace kcover
