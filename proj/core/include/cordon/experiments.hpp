#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cordon/config.hpp"
#include "cordon/planner.hpp"

namespace cordon {

// One environment solved both ways. Times are wall clock and cover network construction
// plus solve, not environment generation.
struct TrialRecord {
  int point_index = 0;
  int point_value = 0;
  int trial = 0;
  std::uint64_t seed = 0;
  // 1 + number of discarded environments before this one.
  int attempts = 1;
  int width = 0;
  int height = 0;
  int obstacles = 0;
  int m = 0;
  // Targets set aside as unprotectable (exclude policy); both approaches skip them.
  int excluded = 0;
  bool saturated = false;
  int robots_individual = 0;
  int robots_holistic = 0;
  bool feasible_individual = false;
  bool feasible_holistic = false;
  // Both placements separate (only when checking was enabled).
  bool oracle_verified = false;
  Duration time_individual_total{0};
  Duration time_individual_parallel{0};
  Duration time_individual_max{0};
  Duration time_holistic{0};

  bool feasible() const { return feasible_individual && feasible_holistic; }
  // Individual minus holistic robot count; only meaningful when feasible().
  int savings() const { return robots_individual - robots_holistic; }
};

struct RunOptions {
  int jobs = 1;
  // Receives discard notices and warnings. Called under a lock.
  std::function<void(const std::string&)> log;
};

struct RunResult {
  std::vector<TrialRecord> records;  // ordered by (point, trial)
  std::uint64_t discarded = 0;
  std::uint64_t dominance_violations = 0;
  std::uint64_t oracle_failures = 0;
};

// Every sweep point x trial: derive the seed, generate and populate the environment
// (re-seeding discarded ones), solve individually and holistically, and oracle-check when
// cfg.verify is set. Results do not depend on opts.jobs apart from the time fields.
RunResult run_experiment(const ExperimentConfig& cfg, const RunOptions& opts = {});

// Stable column order; the four time columns are always last.
extern const std::vector<std::string> kTrialColumns;
void write_trials_csv(std::ostream& os, const ExperimentConfig& cfg, const std::vector<TrialRecord>& records);
// Same rows without the time columns: what must match byte-for-byte between runs.
std::string deterministic_csv(const ExperimentConfig& cfg, const std::vector<TrialRecord>& records);

}  // namespace cordon
