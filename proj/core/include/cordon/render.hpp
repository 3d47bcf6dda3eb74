#pragma once

#include <iosfwd>
#include <vector>

#include "cordon/grid.hpp"

namespace cordon {

struct SvgStyle {
  int cell_px = 12;
  const char* free_fill = "#ffffff";
  const char* obstacle_fill = "#3b3b3b";
  const char* target_fill = "#d62728";
  const char* robot_fill = "#1f77b4";
  bool legend = true;
};

// Obstacles, targets, and robots drawn as <rect class="..."> elements, plus a legend.
// Robots must lie inside the grid (ContractViolation otherwise).
void render_svg(std::ostream& os, const OccupancyGrid& grid, const std::vector<Coord>& robots,
                const SvgStyle& style = {});

}  // namespace cordon
