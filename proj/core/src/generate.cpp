#include "cordon/generate.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "cordon/errors.hpp"

namespace cordon {

std::string_view to_string(EnvironmentKind kind) {
  return kind == EnvironmentKind::Open ? "open" : "closed";
}

EnvironmentKind parse_environment_kind(std::string_view text) {
  if (text == "open") return EnvironmentKind::Open;
  if (text == "closed") return EnvironmentKind::Closed;
  throw InvalidSpec("unknown environment kind '" + std::string(text) + "' (expected open|closed)");
}

void GenSpec::validate() const {
  if (width < OccupancyGrid::kMinSide || height < OccupancyGrid::kMinSide) {
    throw InvalidSpec("environment must be at least 3x3");
  }
  if (obstacles < 0) throw InvalidSpec("obstacle count must be >= 0");
  if (targets_min < 1 || targets_max < targets_min) throw InvalidSpec("target count range must satisfy 1 <= min <= max");
  if (block_size < 1) throw InvalidSpec("block size must be >= 1");
  if (rect_min < 1 || rect_max < rect_min) throw InvalidSpec("rectangle sides must satisfy 1 <= min <= max");
}

OccupancyGrid generate_open(const GenSpec& spec) {
  Rng rng(spec.seed);
  return generate_open(spec, rng);
}

OccupancyGrid generate_open(const GenSpec& spec, Rng& rng) {
  spec.validate();
  if (spec.kind != EnvironmentKind::Open) throw ContractViolation("generate_open called with a closed spec");
  OccupancyGrid grid(spec.width, spec.height);
  for (int i = 0; i < spec.obstacles; ++i) {
    const int w = static_cast<int>(rng.uniform(std::min(spec.rect_min, spec.width), std::min(spec.rect_max, spec.width)));
    const int h = static_cast<int>(rng.uniform(std::min(spec.rect_min, spec.height), std::min(spec.rect_max, spec.height)));
    const int col0 = static_cast<int>(rng.uniform(0, spec.width - w));
    const int row0 = static_cast<int>(rng.uniform(0, spec.height - h));
    for (int r = row0; r < row0 + h; ++r) {
      for (int c = col0; c < col0 + w; ++c) grid.set({r, c}, CellState::obstacle());
    }
  }
  return grid;
}

std::vector<int> street_lines(int extent, int block_size) {
  std::vector<int> lines;
  for (int p = 0; p < extent; p += block_size + 1) lines.push_back(p);
  if (lines.back() != extent - 1) lines.push_back(extent - 1);
  return lines;
}

std::size_t closed_intersection_count(const GenSpec& spec) {
  return street_lines(spec.height, spec.block_size).size() * street_lines(spec.width, spec.block_size).size();
}

bool closed_is_saturated(const GenSpec& spec) {
  return static_cast<std::size_t>(spec.obstacles) > closed_intersection_count(spec);
}

OccupancyGrid generate_closed(const GenSpec& spec) {
  Rng rng(spec.seed);
  return generate_closed(spec, rng);
}

OccupancyGrid generate_closed(const GenSpec& spec, Rng& rng) {
  spec.validate();
  if (spec.kind != EnvironmentKind::Closed) throw ContractViolation("generate_closed called with an open spec");
  OccupancyGrid grid(spec.width, spec.height);
  const auto rows = street_lines(spec.height, spec.block_size);
  const auto cols = street_lines(spec.width, spec.block_size);
  std::vector<bool> street_row(static_cast<std::size_t>(spec.height), false);
  std::vector<bool> street_col(static_cast<std::size_t>(spec.width), false);
  for (int r : rows) street_row[static_cast<std::size_t>(r)] = true;
  for (int c : cols) street_col[static_cast<std::size_t>(c)] = true;
  for (int r = 0; r < spec.height; ++r) {
    for (int c = 0; c < spec.width; ++c) {
      if (!street_row[static_cast<std::size_t>(r)] && !street_col[static_cast<std::size_t>(c)]) {
        grid.set({r, c}, CellState::obstacle());
      }
    }
  }

  // Partial Fisher-Yates over crossings in row-major order.
  std::vector<Coord> crossings;
  crossings.reserve(rows.size() * cols.size());
  for (int r : rows) {
    for (int c : cols) crossings.push_back({r, c});
  }
  const std::size_t blocked = std::min(crossings.size(), static_cast<std::size_t>(spec.obstacles));
  for (std::size_t i = 0; i < blocked; ++i) {
    const std::size_t j = i + rng.below(crossings.size() - i);
    std::swap(crossings[i], crossings[j]);
    grid.set(crossings[i], CellState::obstacle());
  }
  return grid;
}

OccupancyGrid place_targets(OccupancyGrid grid, int count, Rng& rng) {
  if (count < 1) throw InvalidSpec("target count must be >= 1");
  if (grid.target_count() > 0) throw ContractViolation("place_targets: grid already has targets");
  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < grid.cell_count(); ++i) {
    if (grid[i].is_free() && !grid.on_border(grid.coord(i))) candidates.push_back(i);
  }
  if (candidates.size() < static_cast<std::size_t>(count)) {
    throw GenerationFailed("only " + std::to_string(candidates.size()) + " interior free cells for " +
                           std::to_string(count) + " targets");
  }
  for (int id = 0; id < count; ++id) {
    const auto i = static_cast<std::size_t>(id);
    const std::size_t j = i + rng.below(candidates.size() - i);
    std::swap(candidates[i], candidates[j]);
    grid.set(grid.coord(candidates[i]), CellState::target(id));
  }
  return grid;
}

Environment generate_environment(const GenSpec& spec) {
  spec.validate();
  Rng rng(spec.seed);
  OccupancyGrid base = spec.kind == EnvironmentKind::Open ? generate_open(spec, rng) : generate_closed(spec, rng);
  const bool saturated = spec.kind == EnvironmentKind::Closed && closed_is_saturated(spec);
  const int count = static_cast<int>(rng.uniform(spec.targets_min, spec.targets_max));
  return {place_targets(std::move(base), count, rng), saturated};
}

}  // namespace cordon
