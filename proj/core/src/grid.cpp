#include "cordon/grid.hpp"

#include <algorithm>
#include <string>

#include "cordon/errors.hpp"

namespace cordon {

OccupancyGrid::OccupancyGrid(int width, int height) : width_(width), height_(height) {
  if (width < kMinSide || height < kMinSide) {
    throw InvalidSpec("grid must be at least 3x3, got " + std::to_string(width) + "x" + std::to_string(height));
  }
  cells_.assign(static_cast<std::size_t>(width) * height, CellState::free());
}

CellState OccupancyGrid::at(Coord c) const {
  if (!in_bounds(c)) throw ContractViolation("cell out of bounds");
  return cells_[index(c)];
}

void OccupancyGrid::set(Coord c, CellState s) {
  if (!in_bounds(c)) throw ContractViolation("cell out of bounds");
  cells_[index(c)] = s;
}

int OccupancyGrid::target_count() const {
  int m = 0;
  for (const auto s : cells_) {
    if (s.is_target()) m = std::max(m, s.target_id() + 1);
  }
  return m;
}

std::vector<Coord> OccupancyGrid::target_cells(int id) const {
  std::vector<Coord> out;
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (cells_[i].is_target() && cells_[i].target_id() == id) out.push_back(coord(i));
  }
  return out;
}

std::vector<Coord> OccupancyGrid::all_target_cells() const {
  std::vector<Coord> out;
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (cells_[i].is_target()) out.push_back(coord(i));
  }
  return out;
}

std::size_t OccupancyGrid::count_free() const {
  return static_cast<std::size_t>(std::count_if(cells_.begin(), cells_.end(), [](CellState s) { return s.is_free(); }));
}

std::size_t OccupancyGrid::count_obstacles() const {
  return static_cast<std::size_t>(
      std::count_if(cells_.begin(), cells_.end(), [](CellState s) { return s.is_obstacle(); }));
}

void OccupancyGrid::validate() const {
  const int m = target_count();
  std::vector<bool> seen(static_cast<std::size_t>(m), false);
  for (const auto s : cells_) {
    if (s.is_target()) seen[static_cast<std::size_t>(s.target_id())] = true;
  }
  for (int id = 0; id < m; ++id) {
    if (!seen[static_cast<std::size_t>(id)]) {
      throw InvalidSpec("target ids are not contiguous: id " + std::to_string(id) + " missing");
    }
  }
}

Neighbors neighbors(const OccupancyGrid& grid, Coord c) {
  if (!grid.in_bounds(c)) throw ContractViolation("neighbors: cell out of bounds");
  Neighbors out;
  if (c.row > 0) out.push({c.row - 1, c.col});
  if (c.col > 0) out.push({c.row, c.col - 1});
  if (c.col + 1 < grid.width()) out.push({c.row, c.col + 1});
  if (c.row + 1 < grid.height()) out.push({c.row + 1, c.col});
  return out;
}

}  // namespace cordon
