#pragma once

#include <optional>
#include <vector>

#include "cordon/grid.hpp"

// Search-based checkers kept independent of the flow code: nothing in here touches
// flownet or maxflow, and traversal is written out locally.
namespace cordon::oracle {

// True iff a 4-connected search over Free and Target cells, minus the robots, started from
// every Free border cell reaches no Target cell. Robots must be in-bounds Free interior
// cells; anything else throws ContractViolation. Targets in `ignored` may be reached (they
// are still walked through).
bool verify_separation(const OccupancyGrid& grid, const std::vector<Coord>& robots,
                       const std::vector<int>& ignored = {});

// Shortest border-to-target path that avoids the robots, border cell first; nullopt when
// separated. Same contract as verify_separation.
std::optional<std::vector<Coord>> find_leak(const OccupancyGrid& grid, const std::vector<Coord>& robots,
                                            const std::vector<int>& ignored = {});

// Smallest k <= k_max such that some k-subset of Free interior cells separates, by
// exhaustive enumeration of subsets in lexicographic order. Cells outside every component
// that joins the border to a target cannot matter and are skipped. nullopt if none <= k_max.
std::optional<int> brute_force_min_cut(const OccupancyGrid& grid, int k_max);

}  // namespace cordon::oracle
