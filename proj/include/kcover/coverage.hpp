#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "kcover/geometry.hpp"
#include "kcover/lattice.hpp"

namespace kcover {

inline constexpr double kCoverageTol = 1e-6;
inline constexpr std::int64_t kDefaultBoxCap = 10'000'000;

// Distance from p to its k-th nearest center (k >= 1, ties counted with
// multiplicity). p is k-covered by closed disks iff this is <= radius.
// Enumerates centers in growing disks around p until k are found.
double kth_nearest_distance(Point p, const PeriodicConfig& c, int k);

// Precomputed evaluator of the same function for repeated queries. Queries are
// wrapped into the fundamental parallelogram of the reduced basis and compared
// against a fixed candidate list that provably contains the k nearest centers
// of every point there.
class KthDistanceField {
 public:
  KthDistanceField(const PeriodicConfig& c, int k);

  double operator()(Point p) const;
  int k() const { return k_; }
  const Basis& basis() const { return basis_; }
  std::size_t candidate_count() const { return candidates_.size(); }

 private:
  Basis basis_;
  std::vector<Point> candidates_;
  int k_;
};

struct CoveringRadius {
  double low = 0.0;   // max of d_k over the evaluated box centers
  double high = 0.0;  // certified upper bound on max of d_k over the plane
  Point witness;      // argmax of `low`
  std::int64_t boxes = 0;
  bool capped = false;  // box budget ran out before high - low <= tol
};

// Certified bounds on the order-k covering radius, the maximum of d_k over the
// plane. Best-first branch-and-bound over square boxes covering the reduced
// fundamental parallelogram; a box with center m and half-diagonal h has d_k
// within [d_k(m), d_k(m) + h] since d_k is 1-Lipschitz.
CoveringRadius covering_radius(const PeriodicConfig& c, int k, double tol = kCoverageTol,
                               std::int64_t max_boxes = kDefaultBoxCap);

enum class CoverageStatus { certified_covered, certified_uncovered, tight, undecided };

std::string_view to_string(CoverageStatus s);
std::optional<CoverageStatus> coverage_status_from_string(std::string_view s);

struct CoverageCertificate {
  int k = 1;
  CoverageStatus status = CoverageStatus::undecided;
  std::optional<Point> witness;
  double radius_low = 0.0;
  double radius_high = 0.0;
};

// Decides k-coverage of the plane by the configuration's closed disks.
//   radius_high <= r                        -> certified_covered
//   |radius_low - r|, |radius_high - r| <= tol -> tight
//   radius_low > r                          -> certified_uncovered
//   otherwise (box cap hit)                 -> undecided
CoverageCertificate verify_k_coverage(const PeriodicConfig& c, int k, double tol = kCoverageTol,
                                      std::int64_t max_boxes = kDefaultBoxCap);

}  // namespace kcover
