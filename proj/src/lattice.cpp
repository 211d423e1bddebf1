#include "kcover/lattice.hpp"

#include <algorithm>
#include <limits>

#include "kcover/error.hpp"

namespace kcover {

namespace {

constexpr double kDetTol = 1e-12;
// Offsets closer than this modulo the lattice are coincident circles.
constexpr double kCoincidentTol = 1e-9;
// Slack for wrapping fractional coordinates that land a rounding error away
// from an integer.
constexpr double kWrapSlack = 1e-12;

Point wrap_into_domain(const Basis& b, Point p) {
  const Point st = b.fractional(p);
  const double ns = std::floor(st.x + kWrapSlack);
  const double nt = std::floor(st.y + kWrapSlack);
  if (ns == 0.0 && nt == 0.0) return p;
  return p - ns * b.u() - nt * b.v();
}

}  // namespace

Basis::Basis(Vec2 u, Vec2 v) : u_(u), v_(v) {
  if (!std::isfinite(u.x) || !std::isfinite(u.y) || !std::isfinite(v.x) || !std::isfinite(v.y))
    throw GeometryError("degenerate lattice");
  double d = cross(u_, v_);
  if (d < 0.0) {
    v_ = -v_;
    d = -d;
  }
  if (d <= kDetTol || d <= kDetTol * norm(u_) * norm(v_)) throw GeometryError("degenerate lattice");
}

Point Basis::fractional(Point p) const {
  const double d = det();
  return {cross(p, v_) / d, cross(u_, p) / d};
}

Basis reduce_basis(const Basis& b) {
  Vec2 u = b.u(), v = b.v();
  if (norm2(u) > norm2(v)) std::swap(u, v);
  for (int iter = 0; iter < 1000; ++iter) {
    const double m = std::round(dot(u, v) / norm2(u));
    v = v - m * u;
    if (norm2(v) < norm2(u)) {
      std::swap(u, v);
    } else {
      break;
    }
  }
  // Basis() restores positive orientation by negating v, which keeps both
  // reduction conditions.
  return Basis(u, v);
}

double Rect::distance_to(Point p) const {
  const double dx = std::max({xmin - p.x, 0.0, p.x - xmax});
  const double dy = std::max({ymin - p.y, 0.0, p.y - ymax});
  return std::hypot(dx, dy);
}

double periodic_distance(const Basis& b, Point p, Point q) {
  const Basis r = reduce_basis(b);
  const Vec2 d = q - p;
  const Point st = r.fractional(d);
  const double s0 = std::round(st.x), t0 = std::round(st.y);
  double best = std::numeric_limits<double>::infinity();
  for (int i = -2; i <= 2; ++i) {
    for (int j = -2; j <= 2; ++j) {
      best = std::min(best, norm(d - r.at(s0 + i, t0 + j)));
    }
  }
  return best;
}

PeriodicConfig::PeriodicConfig(Basis basis, std::vector<Point> offsets, double radius)
    : basis_(basis), reduced_(reduce_basis(basis)), radius_(radius) {
  if (!std::isfinite(radius) || !(radius > 0.0))
    throw GeometryError("config: radius must be positive");
  if (offsets.empty()) throw GeometryError("config: at least one offset required");
  offsets_.reserve(offsets.size());
  for (const Point& p : offsets) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw GeometryError("config: non-finite offset");
    offsets_.push_back(wrap_into_domain(basis_, p));
  }
  for (std::size_t i = 0; i < offsets_.size(); ++i) {
    for (std::size_t j = i + 1; j < offsets_.size(); ++j) {
      if (periodic_distance(reduced_, offsets_[i], offsets_[j]) <= kCoincidentTol)
        throw GeometryError("config: coincident circles (offsets equal modulo the lattice)");
    }
  }
}

PeriodicConfig PeriodicConfig::with_radius(double radius) const {
  return PeriodicConfig(basis_, offsets_, radius);
}

PeriodicConfig PeriodicConfig::scaled(double lambda) const {
  if (!(lambda > 0.0)) throw DomainError("scale factor must be positive");
  std::vector<Point> off;
  off.reserve(offsets_.size());
  for (const Point& p : offsets_) off.push_back(lambda * p);
  return PeriodicConfig(Basis(lambda * basis_.u(), lambda * basis_.v()), std::move(off),
                        lambda * radius_);
}

PeriodicConfig PeriodicConfig::transformed(double angle, Vec2 shift, bool reflect) const {
  auto linear = [&](Vec2 a) {
    if (reflect) a.y = -a.y;
    return rotated(a, angle);
  };
  std::vector<Point> off;
  off.reserve(offsets_.size());
  for (const Point& p : offsets_) off.push_back(linear(p) + shift);
  return PeriodicConfig(Basis(linear(basis_.u()), linear(basis_.v())), std::move(off), radius_);
}

std::vector<Point> enumerate_centers(const PeriodicConfig& c, const Rect& rect, double margin) {
  const Basis& b = c.reduced();
  const Rect grown{rect.xmin - margin, rect.ymin - margin, rect.xmax + margin, rect.ymax + margin};
  const Point corners[4] = {{grown.xmin, grown.ymin}, {grown.xmax, grown.ymin},
                            {grown.xmin, grown.ymax}, {grown.xmax, grown.ymax}};
  // Comparison slack so points at exactly `margin` survive rounding.
  const double slack = kReprTol * std::max({1.0, margin, norm(b.u()), norm(b.v())});

  std::vector<Point> out;
  for (const Point& o : c.offsets()) {
    double smin = std::numeric_limits<double>::infinity(), smax = -smin;
    double tmin = smin, tmax = -smin;
    for (const Point& corner : corners) {
      const Point st = b.fractional(corner - o);
      smin = std::min(smin, st.x);
      smax = std::max(smax, st.x);
      tmin = std::min(tmin, st.y);
      tmax = std::max(tmax, st.y);
    }
    const auto i0 = static_cast<long>(std::floor(smin)) - 1, i1 = static_cast<long>(std::ceil(smax)) + 1;
    const auto j0 = static_cast<long>(std::floor(tmin)) - 1, j1 = static_cast<long>(std::ceil(tmax)) + 1;
    for (long i = i0; i <= i1; ++i) {
      for (long j = j0; j <= j1; ++j) {
        const Point p = o + b.at(static_cast<double>(i), static_cast<double>(j));
        if (rect.distance_to(p) <= margin + slack) out.push_back(p);
      }
    }
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

}  // namespace kcover
