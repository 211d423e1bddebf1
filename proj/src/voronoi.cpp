#include "kcover/voronoi.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "kcover/error.hpp"

namespace kcover {

namespace {

std::vector<CongruenceSignature::Entry> quantized_sequence(std::span<const Point> v, double tol) {
  const std::size_t n = v.size();
  std::vector<CongruenceSignature::Entry> seq(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 e_in = v[i] - v[(i + n - 1) % n];
    const Vec2 e_out = v[(i + 1) % n] - v[i];
    const double interior = std::numbers::pi - std::atan2(cross(e_in, e_out), dot(e_in, e_out));
    seq[i] = {std::llround(norm(e_out) / tol), std::llround(interior / tol)};
  }
  return seq;
}

void keep_min_rotation(const std::vector<CongruenceSignature::Entry>& seq,
                       std::vector<CongruenceSignature::Entry>& best) {
  const std::size_t n = seq.size();
  std::vector<CongruenceSignature::Entry> rot(n);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t i = 0; i < n; ++i) rot[i] = seq[(s + i) % n];
    if (best.empty() || rot < best) best = rot;
  }
}

}  // namespace

std::vector<std::pair<double, double>> CongruenceSignature::values() const {
  std::vector<std::pair<double, double>> out;
  out.reserve(entries_.size());
  for (const auto& [len, ang] : entries_)
    out.emplace_back(static_cast<double>(len) * tol_, static_cast<double>(ang) * tol_);
  return out;
}

VoronoiCell voronoi_cell(const PeriodicConfig& c, std::size_t offset_index) {
  if (offset_index >= c.size()) throw DomainError("voronoi_cell: offset index out of range");
  const Point site = c.offsets()[offset_index];
  const Basis& b = c.reduced();
  const double scale = std::max(norm(b.u()), norm(b.v()));
  const double half = 4.0 * scale;

  std::vector<Point> centers = enumerate_centers(c, Rect::around(site), 8.0 * scale);
  std::sort(centers.begin(), centers.end(), [&](Point p, Point q) {
    const double dp = norm2(p - site), dq = norm2(q - site);
    return dp < dq || (dp == dq && lex_less(p, q));
  });

  std::vector<Point> cell{site + Vec2{-half, -half}, site + Vec2{half, -half},
                          site + Vec2{half, half}, site + Vec2{-half, half}};
  const double eps = kReprTol * scale;
  double reach = 2.0 * std::sqrt(2.0) * half;  // upper bound on 2 * max vertex distance
  for (const Point& q : centers) {
    const double dq = distance(q, site);
    if (dq <= kGeomTol * scale) continue;  // the site itself
    if (dq > reach) break;                // bisector cannot cut the current cell
    const Vec2 n = q - site;
    const HalfPlane h{n, 0.5 * (norm2(q) - norm2(site))};
    cell = clip_convex(cell, h, eps);
    if (cell.size() < 3) throw GeometryError("voronoi_cell: empty cell");
    double far = 0.0;
    for (const Point& p : cell) far = std::max(far, distance(p, site));
    reach = 2.0 * far + eps;
  }

  for (const Point& p : cell) {
    if (std::max(std::abs(p.x - site.x), std::abs(p.y - site.y)) >= half * (1.0 - 1e-9))
      throw GeometryError("unbounded cell");
  }
  return VoronoiCell{site, ConvexPolygon(std::move(cell))};
}

std::vector<VoronoiCell> voronoi_cells(const PeriodicConfig& c) {
  std::vector<VoronoiCell> cells;
  cells.reserve(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) cells.push_back(voronoi_cell(c, i));
  return cells;
}

CongruenceSignature congruence_signature(const VoronoiCell& cell, double tol) {
  if (!(tol > 0.0)) throw DomainError("congruence_signature: tolerance must be positive");
  const auto verts = cell.polygon.vertices();
  // Reflection across the y-axis; reversing keeps counter-clockwise order.
  std::vector<Point> mirrored;
  mirrored.reserve(verts.size());
  for (auto it = verts.rbegin(); it != verts.rend(); ++it) mirrored.push_back({-it->x, it->y});
  std::vector<CongruenceSignature::Entry> best;
  keep_min_rotation(quantized_sequence(verts, tol), best);
  keep_min_rotation(quantized_sequence(mirrored, tol), best);
  return CongruenceSignature(std::move(best), tol);
}

CongruenceReport all_cells_congruent(const PeriodicConfig& c, double tol) {
  CongruenceReport report;
  for (std::size_t i = 0; i < c.size(); ++i) {
    CongruenceSignature sig = congruence_signature(voronoi_cell(c, i), tol);
    const auto it = std::find(report.classes.begin(), report.classes.end(), sig);
    if (it == report.classes.end()) {
      report.class_of.push_back(report.classes.size());
      report.classes.push_back(std::move(sig));
    } else {
      report.class_of.push_back(static_cast<std::size_t>(it - report.classes.begin()));
    }
  }
  report.congruent = report.classes.size() == 1;
  return report;
}

}  // namespace kcover
