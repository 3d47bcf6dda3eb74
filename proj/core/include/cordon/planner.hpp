#pragma once

#include <chrono>
#include <string_view>
#include <vector>

#include "cordon/grid.hpp"

namespace cordon {

enum class Approach { Individual, Holistic };
std::string_view to_string(Approach a);

using Duration = std::chrono::nanoseconds;

// Where robots stand. `robots` is a sorted set of Free interior cells.
struct Placement {
  Approach approach = Approach::Holistic;
  std::vector<Coord> robots;
  bool feasible = true;
  // Individual only, indexed by target id.
  std::vector<bool> per_target_feasible;
  Duration solve_time{0};
  // Individual only, indexed by target id.
  std::vector<Duration> per_target_times;
  // Targets the placement actually protects (skipped ones are left out).
  int targets_solved = 0;

  std::size_t robot_count() const { return robots.size(); }
};

// One minimum vertex cut per target, robots = union of the cuts. Each per-target solve
// builds its own network, as a parallel worker would. An infeasible target makes the whole
// placement infeasible; robots from the feasible targets are still reported.
//
// Targets listed in `skip` are not solved for (their cells stay in the map as uncuttable
// cells); used to set aside targets that can never be protected.
Placement solve_individual(const OccupancyGrid& grid, const std::vector<int>& skip = {});

// Single minimum vertex cut against a sink merging every target not in `skip`.
// Infeasible -> no robots. Skipping every target gives an empty, feasible placement.
Placement solve_holistic(const OccupancyGrid& grid, const std::vector<int>& skip = {});

struct ParallelEstimate {
  // total / m, the perfectly balanced estimate.
  Duration per_target_share{0};
  // Slowest single target: a lower bound for m workers.
  Duration slowest_target{0};
};

// Divides by targets_solved. Throws ContractViolation for a holistic placement or when
// nothing was solved.
ParallelEstimate parallel_individual_time_estimate(const Placement& individual);

// Targets that touch the border through border and target cells only. No placement of
// robots on free interior cells can protect them.
std::vector<int> exposed_targets(const OccupancyGrid& grid);

}  // namespace cordon
