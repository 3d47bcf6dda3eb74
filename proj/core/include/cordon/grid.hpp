#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace cordon {

struct Coord {
  int row = 0;
  int col = 0;
  auto operator<=>(const Coord&) const = default;
};

// Free, Obstacle, or Target(id). Packed into one int32 so grids stay dense.
class CellState {
 public:
  constexpr CellState() = default;

  static constexpr CellState free() { return CellState(kFree); }
  static constexpr CellState obstacle() { return CellState(kObstacle); }
  static constexpr CellState target(int id) { return CellState(id); }

  constexpr bool is_free() const { return raw_ == kFree; }
  constexpr bool is_obstacle() const { return raw_ == kObstacle; }
  constexpr bool is_target() const { return raw_ >= 0; }
  // Only meaningful when is_target().
  constexpr int target_id() const { return raw_; }

  constexpr bool operator==(const CellState&) const = default;

 private:
  static constexpr std::int32_t kFree = -1;
  static constexpr std::int32_t kObstacle = -2;
  constexpr explicit CellState(std::int32_t raw) : raw_(raw) {}
  std::int32_t raw_ = kFree;
};

// Up to four 4-connected neighbours, without allocation.
class Neighbors {
 public:
  void push(Coord c) { items_[count_++] = c; }
  std::size_t size() const { return count_; }
  const Coord* begin() const { return items_.data(); }
  const Coord* end() const { return items_.data() + count_; }
  const Coord& operator[](std::size_t i) const { return items_[i]; }

 private:
  std::array<Coord, 4> items_{};
  std::size_t count_ = 0;
};

// Row-major occupancy grid. The border region is the set of Free cells on the outermost ring.
class OccupancyGrid {
 public:
  static constexpr int kMinSide = 3;

  // All-Free grid. Throws InvalidSpec when either side is below kMinSide.
  OccupancyGrid(int width, int height);

  int width() const { return width_; }
  int height() const { return height_; }
  std::size_t cell_count() const { return cells_.size(); }

  bool in_bounds(Coord c) const { return c.row >= 0 && c.row < height_ && c.col >= 0 && c.col < width_; }
  bool on_border(Coord c) const {
    return c.row == 0 || c.col == 0 || c.row == height_ - 1 || c.col == width_ - 1;
  }

  std::size_t index(Coord c) const { return static_cast<std::size_t>(c.row) * width_ + c.col; }
  Coord coord(std::size_t index) const {
    return {static_cast<int>(index / width_), static_cast<int>(index % width_)};
  }

  // Bounds-checked; out-of-range coordinates throw ContractViolation.
  CellState at(Coord c) const;
  void set(Coord c, CellState s);

  CellState operator[](std::size_t index) const { return cells_[index]; }

  // m: one past the largest target id present (0 when there are none).
  int target_count() const;
  std::vector<Coord> target_cells(int id) const;
  // All target cells, ascending by index.
  std::vector<Coord> all_target_cells() const;

  std::size_t count_free() const;
  std::size_t count_obstacles() const;

  // Throws InvalidSpec unless every id in 0..m-1 appears at least once.
  void validate() const;

  bool operator==(const OccupancyGrid&) const = default;

 private:
  int width_;
  int height_;
  std::vector<CellState> cells_;
};

// 4-connected in-bounds neighbours of `c`, any state. Out-of-bounds `c` throws ContractViolation.
Neighbors neighbors(const OccupancyGrid& grid, Coord c);

}  // namespace cordon
