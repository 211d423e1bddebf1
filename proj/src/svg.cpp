#include "kcover/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <string>

#include "kcover/voronoi.hpp"

namespace kcover {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v == 0.0 ? 0.0 : v);  // no "-0.000000"
  return buf;
}

std::string polygon_points(std::span<const Point> pts) {
  std::string s;
  for (const Point& p : pts) {
    if (!s.empty()) s += ' ';
    s += num(p.x) + ',' + num(p.y);
  }
  return s;
}

}  // namespace

std::string render_svg(const PeriodicConfig& c) {
  const Basis& b = c.basis();
  const double r = c.radius();
  const std::vector<VoronoiCell> cells = voronoi_cells(c);

  std::vector<Vec2> shifts;
  for (int i = -1; i <= 1; ++i)
    for (int j = -1; j <= 1; ++j) shifts.push_back(b.at(i, j));

  double xmin = std::numeric_limits<double>::infinity(), ymin = xmin;
  double xmax = -xmin, ymax = -xmin;
  for (const Vec2& s : shifts) {
    for (const Point& o : c.offsets()) {
      const Point p = o + s;
      xmin = std::min(xmin, p.x - r);
      xmax = std::max(xmax, p.x + r);
      ymin = std::min(ymin, p.y - r);
      ymax = std::max(ymax, p.y + r);
    }
  }
  const double pad = 0.05 * std::max(xmax - xmin, ymax - ymin);
  xmin -= pad, ymin -= pad, xmax += pad, ymax += pad;
  const double stroke = 0.004 * std::max(xmax - xmin, ymax - ymin);

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + num(xmin) + ' ' + num(-ymax) + ' ' +
         num(xmax - xmin) + ' ' + num(ymax - ymin) + "\" width=\"800\" height=\"" +
         num(800.0 * (ymax - ymin) / (xmax - xmin)) + "\">\n";
  out += "<g transform=\"scale(1,-1)\">\n";

  out += "<g id=\"disks\" fill=\"#1f77b4\" fill-opacity=\"0.3\" stroke=\"none\">\n";
  for (const Vec2& s : shifts)
    for (const Point& o : c.offsets()) {
      const Point p = o + s;
      out += "<circle cx=\"" + num(p.x) + "\" cy=\"" + num(p.y) + "\" r=\"" + num(r) + "\"/>\n";
    }
  out += "</g>\n";

  out += "<g id=\"voronoi\" fill=\"none\" stroke=\"#333333\" stroke-width=\"" + num(stroke) + "\">\n";
  for (const Vec2& s : shifts)
    for (const VoronoiCell& cell : cells) {
      std::vector<Point> pts;
      for (const Point& p : cell.polygon.vertices()) pts.push_back(p + s);
      out += "<polygon points=\"" + polygon_points(pts) + "\"/>\n";
    }
  out += "</g>\n";

  const Point domain[4] = {{0.0, 0.0}, b.u(), b.u() + b.v(), b.v()};
  out += "<polygon id=\"domain\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"" + num(2.0 * stroke) +
         "\" points=\"" + polygon_points(domain) + "\"/>\n";

  out += "<g id=\"centers\" fill=\"#000000\">\n";
  for (const Vec2& s : shifts)
    for (const Point& o : c.offsets()) {
      const Point p = o + s;
      out += "<circle cx=\"" + num(p.x) + "\" cy=\"" + num(p.y) + "\" r=\"" + num(2.0 * stroke) + "\"/>\n";
    }
  out += "</g>\n</g>\n</svg>\n";
  return out;
}

}  // namespace kcover
