#include "cordon/render.hpp"

#include <algorithm>
#include <ostream>

#include "cordon/errors.hpp"

namespace cordon {

void render_svg(std::ostream& os, const OccupancyGrid& grid, const std::vector<Coord>& robots, const SvgStyle& style) {
  for (const Coord& c : robots) {
    if (!grid.in_bounds(c)) throw ContractViolation("render_svg: robot outside the grid");
  }
  const int px = style.cell_px;
  const int map_w = grid.width() * px;
  const int map_h = grid.height() * px;
  const int legend_h = style.legend ? 3 * px : 0;
  const int total_w = style.legend ? std::max(map_w, 22 * px) : map_w;

  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << total_w << "\" height=\"" << map_h + legend_h
     << "\" viewBox=\"0 0 " << total_w << ' ' << map_h + legend_h << "\">\n";
  os << "<style>.free{fill:" << style.free_fill << "}.obstacle{fill:" << style.obstacle_fill
     << "}.target{fill:" << style.target_fill << "}.robot{fill:" << style.robot_fill << "}</style>\n";
  os << "<rect class=\"free\" x=\"0\" y=\"0\" width=\"" << map_w << "\" height=\"" << map_h
     << "\" stroke=\"#999999\"/>\n";

  auto cell = [&](Coord c, const char* cls) {
    os << "<rect class=\"" << cls << "\" x=\"" << c.col * px << "\" y=\"" << c.row * px << "\" width=\"" << px
       << "\" height=\"" << px << "\"/>\n";
  };
  os << "<g id=\"obstacles\">\n";
  for (std::size_t i = 0; i < grid.cell_count(); ++i) {
    if (grid[i].is_obstacle()) cell(grid.coord(i), "obstacle");
  }
  os << "</g>\n<g id=\"targets\">\n";
  for (std::size_t i = 0; i < grid.cell_count(); ++i) {
    if (grid[i].is_target()) cell(grid.coord(i), "target");
  }
  os << "</g>\n<g id=\"robots\">\n";
  for (const Coord& c : robots) cell(c, "robot");
  os << "</g>\n";

  if (style.legend) {
    const int y = map_h + px;
    os << "<g id=\"legend\" font-family=\"sans-serif\" font-size=\"" << px << "\">\n";
    int x = px / 2;
    for (const auto& [cls, label] : {std::pair{"obstacle", "obstacle"}, std::pair{"target", "target"},
                                      std::pair{"robot", "robot"}}) {
      os << "<rect class=\"" << cls << "\" x=\"" << x << "\" y=\"" << y << "\" width=\"" << px << "\" height=\"" << px
         << "\"/>";
      os << "<text x=\"" << x + px + px / 3 << "\" y=\"" << y + px - 2 << "\">" << label << "</text>\n";
      x += 7 * px;
    }
    os << "</g>\n";
  }
  os << "</svg>\n";
}

}  // namespace cordon
