#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "kcover/geometry.hpp"
#include "kcover/lattice.hpp"

namespace kcover {

inline constexpr double kCongruenceTol = 1e-6;

struct VoronoiCell {
  Point site;
  ConvexPolygon polygon;
};

// Canonical form of a polygon's cyclic (edge length, interior angle) sequence:
// values quantized to multiples of the tolerance, then the lexicographically
// smallest representative over all rotations of the sequence and of its
// mirror image.
class CongruenceSignature {
 public:
  using Entry = std::pair<std::int64_t, std::int64_t>;

  CongruenceSignature(std::vector<Entry> entries, double tol)
      : entries_(std::move(entries)), tol_(tol) {}

  const std::vector<Entry>& entries() const { return entries_; }
  double tolerance() const { return tol_; }
  // Dequantized (edge length, angle) pairs.
  std::vector<std::pair<double, double>> values() const;

  friend bool operator==(const CongruenceSignature& a, const CongruenceSignature& b) {
    return a.entries_ == b.entries_;
  }
  friend bool operator<(const CongruenceSignature& a, const CongruenceSignature& b) {
    return a.entries_ < b.entries_;
  }

 private:
  std::vector<Entry> entries_;
  double tol_;
};

// Voronoi cell of offsets()[offset_index]: the intersection of the
// perpendicular-bisector half-planes against every center within
// 8 * max(|u|, |v|) of the site (reduced basis), clipped from a bounding square
// of half-width 4 * max(|u|, |v|). Throws GeometryError("unbounded cell") when
// the result touches that square.
VoronoiCell voronoi_cell(const PeriodicConfig& c, std::size_t offset_index);

std::vector<VoronoiCell> voronoi_cells(const PeriodicConfig& c);

CongruenceSignature congruence_signature(const VoronoiCell& cell, double tol = kCongruenceTol);

struct CongruenceReport {
  bool congruent = false;
  // Distinct signatures in order of first appearance.
  std::vector<CongruenceSignature> classes;
  // For each offset, its index into `classes`.
  std::vector<std::size_t> class_of;
};

CongruenceReport all_cells_congruent(const PeriodicConfig& c, double tol = kCongruenceTol);

}  // namespace kcover
