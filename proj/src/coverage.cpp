#include "kcover/coverage.hpp"

#include <algorithm>
#include <array>
#include <numbers>
#include <queue>

#include "kcover/error.hpp"

namespace kcover {

namespace {

void check_k(int k) {
  if (k < 1) throw DomainError("k must be a positive integer");
}

struct Box {
  Point center;
  double half_side;
  double value;  // d_k(center)
  double upper;  // value + half diagonal
};

struct BoxOrder {
  bool operator()(const Box& a, const Box& b) const {
    if (a.upper != b.upper) return a.upper < b.upper;
    return lex_less(b.center, a.center);
  }
};

}  // namespace

double kth_nearest_distance(Point p, const PeriodicConfig& c, int k) {
  check_k(k);
  const double area_per_center = c.basis().det() / static_cast<double>(c.size());
  double reach = std::sqrt(static_cast<double>(k) * area_per_center / std::numbers::pi) +
                 norm(c.reduced().u()) + norm(c.reduced().v());
  for (;;) {
    const std::vector<Point> centers = enumerate_centers(c, Rect::around(p), reach);
    if (centers.size() >= static_cast<std::size_t>(k)) {
      std::vector<double> d;
      d.reserve(centers.size());
      for (const Point& q : centers) d.push_back(distance(p, q));
      std::nth_element(d.begin(), d.begin() + (k - 1), d.end());
      return d[static_cast<std::size_t>(k - 1)];
    }
    reach *= 2.0;
  }
}

KthDistanceField::KthDistanceField(const PeriodicConfig& c, int k) : basis_(c.reduced()), k_(k) {
  check_k(k);
  const Point mid = 0.5 * (basis_.u() + basis_.v());
  const double half_diag = 0.5 * std::max(norm(basis_.u() + basis_.v()), norm(basis_.u() - basis_.v()));
  // For p in the parallelogram, d_k(p) <= d_k(mid) + |p - mid|, so the k
  // nearest centers of p lie within d_k(mid) + 2 * half_diag of mid.
  const double bound = kth_nearest_distance(mid, c, k);
  const double reach = (bound + 2.0 * half_diag) * (1.0 + 1e-9) + kReprTol;
  candidates_ = enumerate_centers(c, Rect::around(mid), reach);
}

double KthDistanceField::operator()(Point p) const {
  const Point st = basis_.fractional(p);
  const Point q = p - std::floor(st.x) * basis_.u() - std::floor(st.y) * basis_.v();

  constexpr int kInline = 32;
  if (k_ <= kInline) {
    // Sorted k smallest squared distances.
    std::array<double, kInline> best;
    int filled = 0;
    for (const Point& c : candidates_) {
      const double d2 = norm2(c - q);
      if (filled == k_ && d2 >= best[static_cast<std::size_t>(k_ - 1)]) continue;
      int i = filled < k_ ? filled++ : k_ - 1;
      while (i > 0 && best[static_cast<std::size_t>(i - 1)] > d2) {
        best[static_cast<std::size_t>(i)] = best[static_cast<std::size_t>(i - 1)];
        --i;
      }
      best[static_cast<std::size_t>(i)] = d2;
    }
    return std::sqrt(best[static_cast<std::size_t>(k_ - 1)]);
  }
  std::vector<double> d2;
  d2.reserve(candidates_.size());
  for (const Point& c : candidates_) d2.push_back(norm2(c - q));
  std::nth_element(d2.begin(), d2.begin() + (k_ - 1), d2.end());
  return std::sqrt(d2[static_cast<std::size_t>(k_ - 1)]);
}

CoveringRadius covering_radius(const PeriodicConfig& c, int k, double tol, std::int64_t max_boxes) {
  check_k(k);
  if (!(tol > 0.0)) throw DomainError("covering_radius: tolerance must be positive");
  const KthDistanceField field(c, k);
  const Basis& b = field.basis();

  const Point corners[4] = {{0.0, 0.0}, b.u(), b.v(), b.u() + b.v()};
  double xmin = corners[0].x, xmax = xmin, ymin = corners[0].y, ymax = ymin;
  for (const Point& p : corners) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  const double width = xmax - xmin, height = ymax - ymin;
  const double side = 0.5 * std::min(width, height);
  const auto nx = static_cast<int>(std::ceil(width / side));
  const auto ny = static_cast<int>(std::ceil(height / side));

  CoveringRadius out;
  out.low = -1.0;
  std::priority_queue<Box, std::vector<Box>, BoxOrder> queue;
  auto push = [&](Point m, double half_side) {
    const double v = field(m);
    ++out.boxes;
    if (v > out.low || (v == out.low && lex_less(m, out.witness))) {
      out.low = v;
      out.witness = m;
    }
    const double ub = v + half_side * std::numbers::sqrt2;
    // A box that cannot beat the incumbent never decides the maximum.
    if (ub > out.low) queue.push(Box{m, half_side, v, ub});
  };

  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j)
      push({xmin + (i + 0.5) * side, ymin + (j + 0.5) * side}, 0.5 * side);

  while (!queue.empty()) {
    const Box top = queue.top();
    if (top.upper - out.low <= tol) break;
    if (out.boxes >= max_boxes) {
      out.capped = true;
      break;
    }
    queue.pop();
    const double h = 0.5 * top.half_side;
    for (const double dx : {-h, h})
      for (const double dy : {-h, h}) push(top.center + Vec2{dx, dy}, h);
  }
  out.high = queue.empty() ? out.low : std::max(out.low, queue.top().upper);
  return out;
}

std::string_view to_string(CoverageStatus s) {
  switch (s) {
    case CoverageStatus::certified_covered: return "certified_covered";
    case CoverageStatus::certified_uncovered: return "certified_uncovered";
    case CoverageStatus::tight: return "tight";
    case CoverageStatus::undecided: return "undecided";
  }
  return "undecided";
}

std::optional<CoverageStatus> coverage_status_from_string(std::string_view s) {
  for (const auto st : {CoverageStatus::certified_covered, CoverageStatus::certified_uncovered,
                        CoverageStatus::tight, CoverageStatus::undecided}) {
    if (to_string(st) == s) return st;
  }
  return std::nullopt;
}

CoverageCertificate verify_k_coverage(const PeriodicConfig& c, int k, double tol,
                                      std::int64_t max_boxes) {
  const CoveringRadius cr = covering_radius(c, k, tol, max_boxes);
  const double r = c.radius();
  CoverageCertificate cert;
  cert.k = k;
  cert.witness = cr.witness;
  cert.radius_low = cr.low;
  cert.radius_high = cr.high;
  if (cr.high <= r) {
    cert.status = CoverageStatus::certified_covered;
  } else if (std::abs(cr.low - r) <= tol && std::abs(cr.high - r) <= tol) {
    cert.status = CoverageStatus::tight;
  } else if (cr.low > r) {
    cert.status = CoverageStatus::certified_uncovered;
  } else {
    cert.status = CoverageStatus::undecided;
  }
  return cert;
}

}  // namespace kcover
