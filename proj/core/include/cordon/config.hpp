#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cordon/generate.hpp"

namespace cordon {

enum class SweepVariable { None, Obstacles, Targets, Size };
std::string_view to_string(SweepVariable v);

// What to do with an environment where some target touches the border through uncuttable
// cells. Exclude sets such targets aside (counted in the record) and solves for the rest;
// Reseed discards the environment like a failed generation; Record keeps it as an
// infeasible trial.
enum class InfeasiblePolicy { Exclude, Reseed, Record };

struct SweepRange {
  int from = 0;
  int to = 0;
  int step = 1;
  // from, from + step, ... while <= to.
  std::vector<int> points() const;
};

// One sweep. Text form is a flat "key = value" list under an [experiment] header:
//
//   [experiment]
//   name = exp2-desk
//   experiment = 2
//   kind = open
//   sweep = obstacles
//   from = 4
//   to = 85
//   step = 9
//   trials = 50
//   size = 60
//   targets = 15-20
//   seed = 2
//
// Other keys: width, height, obstacles, block_size, rect_min, rect_max, infeasible
// (exclude|reseed|record), verify (true|false), max_attempts, map (path, relative to the config
// file; fixes the environment and disables generation). '#' starts a comment.
struct ExperimentConfig {
  std::string name = "experiment";
  std::string experiment = "custom";
  std::optional<std::filesystem::path> map;
  EnvironmentKind kind = EnvironmentKind::Open;
  SweepVariable sweep = SweepVariable::None;
  SweepRange range;
  int trials = 1;
  int width = 100;
  int height = 100;
  int targets_min = 15;
  int targets_max = 20;
  int obstacles = 0;
  int block_size = 3;
  int rect_min = 2;
  int rect_max = 10;
  std::uint64_t seed = 1;
  InfeasiblePolicy infeasible = InfeasiblePolicy::Exclude;
  bool verify = true;
  int max_attempts = 1000;

  // Sweep point values; a single 0 when nothing is swept.
  std::vector<int> points() const;
  // Generator parameters at one sweep point (seed left 0).
  GenSpec spec_at(int point_value) const;
  // Throws InvalidSpec.
  void validate() const;
};

// Throws ParseError carrying the 1-based line of the offending entry.
ExperimentConfig parse_config(std::istream& is, const std::filesystem::path& base_dir = {});
// Throws IoError when the file cannot be read.
ExperimentConfig load_config(const std::filesystem::path& path);

}  // namespace cordon
