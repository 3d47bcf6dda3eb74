#include "cordon/planner.hpp"

#include <algorithm>

#include "cordon/errors.hpp"
#include "cordon/maxflow.hpp"

namespace cordon {
namespace {

using Clock = std::chrono::steady_clock;

Duration since(Clock::time_point start) { return std::chrono::duration_cast<Duration>(Clock::now() - start); }

void require_targets(const OccupancyGrid& grid) {
  grid.validate();
  if (grid.target_count() == 0) throw ContractViolation("planner: grid has no targets");
}

std::vector<bool> included(const OccupancyGrid& grid, const std::vector<int>& skip) {
  std::vector<bool> inc(static_cast<std::size_t>(grid.target_count()), true);
  for (const int id : skip) {
    if (id < 0 || id >= grid.target_count()) throw ContractViolation("planner: skipped target id out of range");
    inc[static_cast<std::size_t>(id)] = false;
  }
  return inc;
}

}  // namespace

std::string_view to_string(Approach a) { return a == Approach::Individual ? "individual" : "holistic"; }

Placement solve_individual(const OccupancyGrid& grid, const std::vector<int>& skip) {
  require_targets(grid);
  const int m = grid.target_count();
  const std::vector<bool> inc = included(grid, skip);
  Placement p;
  p.approach = Approach::Individual;
  p.per_target_feasible.assign(static_cast<std::size_t>(m), false);
  p.per_target_times.assign(static_cast<std::size_t>(m), Duration{0});

  const auto start = Clock::now();
  for (int id = 0; id < m; ++id) {
    if (!inc[static_cast<std::size_t>(id)]) continue;
    ++p.targets_solved;
    const auto t0 = Clock::now();
    CutResult cut = min_vertex_cut(grid, TargetSelection::single(id));
    p.per_target_times[static_cast<std::size_t>(id)] = since(t0);
    p.per_target_feasible[static_cast<std::size_t>(id)] = cut.feasible;
    if (cut.feasible) {
      p.robots.insert(p.robots.end(), cut.cells.begin(), cut.cells.end());
    } else {
      p.feasible = false;
    }
  }
  std::sort(p.robots.begin(), p.robots.end());
  p.robots.erase(std::unique(p.robots.begin(), p.robots.end()), p.robots.end());
  p.solve_time = since(start);
  return p;
}

Placement solve_holistic(const OccupancyGrid& grid, const std::vector<int>& skip) {
  require_targets(grid);
  const std::vector<bool> inc = included(grid, skip);
  Placement p;
  p.approach = Approach::Holistic;
  p.targets_solved = static_cast<int>(std::count(inc.begin(), inc.end(), true));
  if (p.targets_solved == 0) return p;
  const auto start = Clock::now();
  CutResult cut;
  if (skip.empty()) {
    cut = min_vertex_cut(grid, TargetSelection::all());
  } else {
    const FlowNetwork net = attach_merged_sink(build_base_network(grid), grid, inc);
    cut = extract_min_cut(net, max_flow(net));
  }
  p.feasible = cut.feasible;
  if (cut.feasible) p.robots = std::move(cut.cells);
  p.solve_time = since(start);
  return p;
}

ParallelEstimate parallel_individual_time_estimate(const Placement& individual) {
  if (individual.approach != Approach::Individual) {
    throw ContractViolation("parallel estimate needs an individual placement");
  }
  const auto m = static_cast<Duration::rep>(individual.targets_solved);
  if (m == 0) throw ContractViolation("parallel estimate needs at least one solved target");
  ParallelEstimate e;
  e.per_target_share = Duration{individual.solve_time.count() / m};
  e.slowest_target = *std::max_element(individual.per_target_times.begin(), individual.per_target_times.end());
  return e;
}

std::vector<int> exposed_targets(const OccupancyGrid& grid) {
  // Flood from free border cells through cells with no cuttable capacity.
  std::vector<bool> seen(grid.cell_count(), false);
  std::vector<std::size_t> queue;
  for (std::size_t i = 0; i < grid.cell_count(); ++i) {
    if (grid[i].is_free() && grid.on_border(grid.coord(i))) {
      seen[i] = true;
      queue.push_back(i);
    }
  }
  std::vector<bool> exposed(static_cast<std::size_t>(grid.target_count()), false);
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const std::size_t i = queue[qi];
    if (grid[i].is_target()) exposed[static_cast<std::size_t>(grid[i].target_id())] = true;
    for (const Coord nb : neighbors(grid, grid.coord(i))) {
      const std::size_t j = grid.index(nb);
      if (seen[j]) continue;
      const bool uncuttable = grid[j].is_target() || (grid[j].is_free() && grid.on_border(nb));
      if (!uncuttable) continue;
      seen[j] = true;
      queue.push_back(j);
    }
  }
  std::vector<int> out;
  for (std::size_t id = 0; id < exposed.size(); ++id) {
    if (exposed[id]) out.push_back(static_cast<int>(id));
  }
  return out;
}

}  // namespace cordon
