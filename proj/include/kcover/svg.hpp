#pragma once

#include <string>

#include "kcover/lattice.hpp"

namespace kcover {

// SVG of a 3x3 block of fundamental domains: disks at 30% opacity, centers,
// stroked Voronoi cells and the central fundamental parallelogram. Output is
// a deterministic function of the configuration.
std::string render_svg(const PeriodicConfig& c);

}  // namespace kcover
