#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "cordon/grid.hpp"
#include "cordon/rng.hpp"

namespace cordon {

enum class EnvironmentKind { Open, Closed };

std::string_view to_string(EnvironmentKind kind);
// Throws InvalidSpec for anything but "open" / "closed".
EnvironmentKind parse_environment_kind(std::string_view text);

struct GenSpec {
  EnvironmentKind kind = EnvironmentKind::Open;
  int width = 100;
  int height = 100;
  // Open: number of rectangles stamped. Closed: number of street intersections blocked.
  int obstacles = 0;
  // Target count is drawn uniformly from [targets_min, targets_max].
  int targets_min = 1;
  int targets_max = 1;
  // Closed layout: side of each square building block.
  int block_size = 3;
  // Open layout: rectangle side lengths are uniform in [rect_min, rect_max].
  int rect_min = 2;
  int rect_max = 10;
  std::uint64_t seed = 0;

  // Throws InvalidSpec when any field is out of range.
  void validate() const;
};

// Empty grid with `spec.obstacles` axis-aligned rectangles stamped at uniform positions.
// Rectangles always fit inside the grid and may overlap. No targets.
OccupancyGrid generate_open(const GenSpec& spec);
OccupancyGrid generate_open(const GenSpec& spec, Rng& rng);

// Street lattice: square blocks of side block_size between 1-cell streets, with streets
// along all four edges. `spec.obstacles` distinct street crossings are blocked, or all of
// them when the request exceeds the crossing count. No targets.
OccupancyGrid generate_closed(const GenSpec& spec);
OccupancyGrid generate_closed(const GenSpec& spec, Rng& rng);

// Row (or column) indices carrying a street for a side of `extent` cells: every multiple of
// block_size + 1, plus the last index so the far edge is always a street.
std::vector<int> street_lines(int extent, int block_size);
std::size_t closed_intersection_count(const GenSpec& spec);
bool closed_is_saturated(const GenSpec& spec);

// Marks `count` distinct interior Free cells, chosen uniformly without replacement, as
// Target(0..count-1) in draw order. Throws GenerationFailed if too few interior Free cells
// exist and ContractViolation if the grid already carries targets.
OccupancyGrid place_targets(OccupancyGrid grid, int count, Rng& rng);

struct Environment {
  OccupancyGrid grid;
  // Closed only: more crossings were requested than exist.
  bool saturated = false;
};

// Full pipeline on one stream seeded with spec.seed: obstacles, then the target count, then
// the target cells.
Environment generate_environment(const GenSpec& spec);

}  // namespace cordon
