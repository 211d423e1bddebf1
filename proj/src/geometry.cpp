#include "kcover/geometry.hpp"

#include <algorithm>
#include <array>

#include "kcover/error.hpp"

namespace kcover {

namespace {

bool finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

// Sine of the turn angle below which three consecutive vertices are merged.
constexpr double kCollinearSin = 1e-10;

double signed_area2(std::span<const Point> v) {
  double s = 0.0;
  for (std::size_t i = 0, n = v.size(); i < n; ++i) s += cross(v[i], v[(i + 1) % n]);
  return s;
}

}  // namespace

Circle::Circle(Point center, double radius) : center_(center), radius_(radius) {
  if (!finite(center) || !std::isfinite(radius)) throw GeometryError("circle: non-finite value");
  if (!(radius > 0.0)) throw GeometryError("circle: radius must be positive");
}

ConvexPolygon::ConvexPolygon(std::vector<Point> vertices) {
  for (const Point& p : vertices)
    if (!finite(p)) throw GeometryError("polygon: non-finite vertex");

  std::vector<Point> v;
  v.reserve(vertices.size());
  for (const Point& p : vertices) {
    if (v.empty() || distance(v.back(), p) > kReprTol) v.push_back(p);
  }
  while (v.size() > 1 && distance(v.front(), v.back()) <= kReprTol) v.pop_back();
  if (v.size() < 3) throw GeometryError("polygon: fewer than 3 distinct vertices");
  if (signed_area2(v) < 0.0) std::reverse(v.begin(), v.end());

  // Merge collinear runs until stable.
  bool changed = true;
  while (changed && v.size() >= 3) {
    changed = false;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const std::size_t n = v.size();
      const Point a = v[(i + n - 1) % n], b = v[i], c = v[(i + 1) % n];
      const Vec2 e1 = b - a, e2 = c - b;
      const double turn = cross(e1, e2);
      if (std::abs(turn) <= kCollinearSin * norm(e1) * norm(e2) && dot(e1, e2) > 0.0) {
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  if (v.size() < 3) throw GeometryError("polygon: degenerate after merging collinear vertices");

  for (std::size_t i = 0, n = v.size(); i < n; ++i) {
    const Vec2 e1 = v[i] - v[(i + n - 1) % n], e2 = v[(i + 1) % n] - v[i];
    if (cross(e1, e2) <= 0.0) throw GeometryError("polygon: not strictly convex");
  }
  vertices_ = std::move(v);
}

bool ConvexPolygon::contains(Point p, double tol) const {
  for (std::size_t i = 0, n = vertices_.size(); i < n; ++i) {
    const Point a = vertices_[i], b = vertices_[(i + 1) % n];
    const Vec2 e = b - a;
    if (cross(e, p - a) < -tol * norm(e)) return false;
  }
  return true;
}

std::vector<Point> circle_circle_intersections(const Circle& c1, const Circle& c2) {
  const Vec2 delta = c2.center() - c1.center();
  const double d = norm(delta);
  const double r1 = c1.radius(), r2 = c2.radius();
  const double scale = std::max({r1, r2, d});
  if (d <= kReprTol * scale) {
    if (std::abs(r1 - r2) <= kReprTol * scale) throw GeometryError("degenerate: coincident");
    return {};
  }
  const double eps = kReprTol * scale;
  if (d > r1 + r2 + eps || d < std::abs(r1 - r2) - eps) return {};

  // Foot of the radical axis along the center line, measured from c1.
  const double a = (d * d + r1 * r1 - r2 * r2) / (2.0 * d);
  const Vec2 e = (1.0 / d) * delta;
  const Point foot = c1.center() + a * e;
  const double h2 = r1 * r1 - a * a;
  if (std::abs(d - (r1 + r2)) <= eps || std::abs(d - std::abs(r1 - r2)) <= eps ||
      h2 <= 0.0) {
    return {foot};
  }
  const double h = std::sqrt(h2);
  const Vec2 n{-e.y, e.x};
  std::vector<Point> out{foot + h * n, foot - h * n};
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

Circle circumcircle(Point a, Point b, Point c) {
  const Vec2 ab = b - a, ac = c - a;
  const double diam2 = std::max({norm2(ab), norm2(ac), norm2(c - b)});
  const double area2 = cross(ab, ac);  // twice the signed area
  if (std::abs(area2) * 0.5 < 1e-12 * diam2) throw GeometryError("collinear");
  // Offset of the circumcenter from a.
  const double b2 = norm2(ab), c2 = norm2(ac);
  const double inv = 1.0 / (2.0 * area2);
  const Vec2 off{(ac.y * b2 - ab.y * c2) * inv, (ab.x * c2 - ac.x * b2) * inv};
  return Circle(a + off, norm(off));
}

double polygon_area(std::span<const Point> ccw_vertices) {
  return 0.5 * signed_area2(ccw_vertices);
}

double polygon_area(const ConvexPolygon& polygon) { return polygon_area(polygon.vertices()); }

std::vector<Point> clip_convex(std::span<const Point> vertices, const HalfPlane& h,
                               double eps) {
  std::vector<Point> out;
  const std::size_t n = vertices.size();
  if (n == 0) return out;
  out.reserve(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    const Point p = vertices[i], q = vertices[(i + 1) % n];
    const double fp = dot(h.normal, p) - h.offset;
    const double fq = dot(h.normal, q) - h.offset;
    const bool in_p = fp <= eps, in_q = fq <= eps;
    if (in_p) out.push_back(p);
    if (in_p != in_q) {
      const double t = fp / (fp - fq);
      out.push_back(p + t * (q - p));
    }
  }
  return out;
}

double johnson_check(Point q, std::span<const Point, 3> centers, double r) {
  if (!(r > 0.0)) throw GeometryError("johnson_check: radius must be positive");
  const double tol = kGeomTol * std::max(1.0, r);
  for (const Point& c : centers) {
    if (std::abs(distance(c, q) - r) > tol) throw GeometryError("not concurrent");
  }
  std::array<Point, 3> outer{};
  for (int i = 0; i < 3; ++i) {
    const Circle a(centers[i], r), b(centers[(i + 1) % 3], r);
    const auto pts = circle_circle_intersections(a, b);
    // Of the intersections, keep the one away from q.
    const Point* best = nullptr;
    for (const Point& p : pts) {
      if (distance(p, q) > tol && (!best || distance(p, q) > distance(*best, q))) best = &p;
    }
    if (!best) throw GeometryError("degenerate tangency");
    outer[i] = *best;
  }
  return circumcircle(outer[0], outer[1], outer[2]).radius();
}

}  // namespace kcover
