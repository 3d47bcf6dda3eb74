#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cordon/grid.hpp"

namespace cordon {

// Map text format:
//
//   cordon-map v1 <width> <height> <m>
//   <height rows of <width> characters>
//
// '.' Free, '#' Obstacle, 'A'-'Z' targets 0-25, 'a'-'z' targets 26-51. Targets with id >= 52
// are written as '*' and listed in a companion index ("targetId,row,col" lines after a header
// line of the same text), stored next to the map as <map>.idx.
//
// A placement is a map followed by one "R <row> <col>" line per robot.

inline constexpr int kLetterTargets = 52;
inline constexpr const char* kMapMagic = "cordon-map";
inline constexpr const char* kMapVersion = "v1";

char target_glyph(int id);

void write_map(std::ostream& os, const OccupancyGrid& grid);
// Writes nothing when every id is < 52.
void write_target_index(std::ostream& os, const OccupancyGrid& grid);
bool needs_target_index(const OccupancyGrid& grid);

OccupancyGrid read_map(std::istream& is, std::istream* index = nullptr);

std::string map_to_string(const OccupancyGrid& grid);
OccupancyGrid map_from_string(const std::string& text);

struct PlacementFile {
  // Absent when the file holds only R lines.
  std::optional<OccupancyGrid> map;
  std::vector<Coord> robots;
};

void write_placement(std::ostream& os, const OccupancyGrid& grid, const std::vector<Coord>& robots);
PlacementFile read_placement(std::istream& is, std::istream* index = nullptr);

// Filesystem helpers. load_* pick up <path>.idx when present; save_map writes it when needed.
// Unreadable or unwritable files throw IoError.
std::filesystem::path target_index_path(const std::filesystem::path& map_path);
OccupancyGrid load_map(const std::filesystem::path& path);
void save_map(const std::filesystem::path& path, const OccupancyGrid& grid);
PlacementFile load_placement(const std::filesystem::path& path);
void save_placement(const std::filesystem::path& path, const OccupancyGrid& grid, const std::vector<Coord>& robots);

}  // namespace cordon
