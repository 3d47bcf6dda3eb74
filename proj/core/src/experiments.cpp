#include "cordon/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "cordon/errors.hpp"
#include "cordon/maxflow.hpp"
#include "cordon/map_io.hpp"
#include "cordon/oracle.hpp"
#include "cordon/rng.hpp"

namespace cordon {
namespace {

struct Shared {
  const ExperimentConfig& cfg;
  const std::vector<int>& points;
  std::optional<OccupancyGrid> fixed_map;
  std::mutex log_mu;
  const RunOptions& opts;
  std::atomic<std::uint64_t> discarded{0};
  std::atomic<std::uint64_t> dominance{0};
  std::atomic<std::uint64_t> oracle{0};

  void log(const std::string& msg) {
    if (!opts.log) return;
    std::lock_guard<std::mutex> lock(log_mu);
    opts.log(msg);
  }
};

TrialRecord run_trial(Shared& sh, std::size_t index) {
  const ExperimentConfig& cfg = sh.cfg;
  const auto trials = static_cast<std::size_t>(cfg.trials);
  TrialRecord rec;
  rec.point_index = static_cast<int>(index / trials);
  rec.trial = static_cast<int>(index % trials);
  rec.point_value = sh.points[static_cast<std::size_t>(rec.point_index)];

  std::optional<OccupancyGrid> grid;
  if (sh.fixed_map) {
    grid = *sh.fixed_map;
    rec.seed = cfg.seed;
  } else {
    GenSpec spec = cfg.spec_at(rec.point_value);
    rec.obstacles = spec.obstacles;
    for (int attempt = 0; !grid; ++attempt) {
      if (attempt >= cfg.max_attempts) {
        throw GenerationFailed("point " + std::to_string(rec.point_value) + " trial " + std::to_string(rec.trial) +
                               ": no usable environment after " + std::to_string(attempt) + " attempts");
      }
      spec.seed = derive_seed(cfg.seed, index, static_cast<std::uint64_t>(attempt));
      rec.seed = spec.seed;
      rec.attempts = attempt + 1;
      std::string reason;
      try {
        Environment env = generate_environment(spec);
        if (cfg.infeasible == InfeasiblePolicy::Reseed && !exposed_targets(env.grid).empty()) {
          reason = "target exposed to the border";
        } else {
          rec.saturated = env.saturated;
          grid = std::move(env.grid);
        }
      } catch (const GenerationFailed& e) {
        reason = e.what();
      }
      if (!grid) {
        sh.discarded.fetch_add(1, std::memory_order_relaxed);
        sh.log("discarded point=" + std::to_string(rec.point_value) + " trial=" + std::to_string(rec.trial) +
               " seed=" + std::to_string(spec.seed) + ": " + reason);
      }
    }
  }
  rec.width = grid->width();
  rec.height = grid->height();
  rec.m = grid->target_count();

  std::vector<int> skip;
  if (cfg.infeasible == InfeasiblePolicy::Exclude) skip = exposed_targets(*grid);
  rec.excluded = static_cast<int>(skip.size());
  if (rec.excluded == rec.m) {
    sh.log("point=" + std::to_string(rec.point_value) + " trial=" + std::to_string(rec.trial) +
           ": every target is exposed; nothing to solve");
  }

  const Placement ind = solve_individual(*grid, skip);
  const Placement hol = solve_holistic(*grid, skip);
  rec.robots_individual = static_cast<int>(ind.robot_count());
  rec.robots_holistic = static_cast<int>(hol.robot_count());
  rec.feasible_individual = ind.feasible;
  rec.feasible_holistic = hol.feasible;
  rec.time_individual_total = ind.solve_time;
  if (ind.targets_solved > 0) {
    const ParallelEstimate est = parallel_individual_time_estimate(ind);
    rec.time_individual_parallel = est.per_target_share;
    rec.time_individual_max = est.slowest_target;
  }
  rec.time_holistic = hol.solve_time;

  if (rec.feasible() && rec.savings() < 0) {
    sh.dominance.fetch_add(1, std::memory_order_relaxed);
    sh.log("dominance violated at point=" + std::to_string(rec.point_value) + " trial=" + std::to_string(rec.trial));
  }
  if (cfg.verify) {
    bool ok = true;
    if (ind.feasible) ok = ok && oracle::verify_separation(*grid, ind.robots, skip);
    if (hol.feasible) ok = ok && oracle::verify_separation(*grid, hol.robots, skip);
    rec.oracle_verified = ok;
    if (!ok) {
      sh.oracle.fetch_add(1, std::memory_order_relaxed);
      sh.log("oracle rejected a placement at point=" + std::to_string(rec.point_value) +
             " trial=" + std::to_string(rec.trial));
    }
  }
  return rec;
}

std::string micros(Duration d) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", static_cast<double>(d.count()) / 1000.0);
  return buf;
}

void write_row(std::ostream& os, const ExperimentConfig& cfg, const TrialRecord& r, bool with_times) {
  os << cfg.experiment << ',' << r.point_index << ',' << r.point_value << ',' << r.trial << ',' << r.seed << ','
     << r.attempts << ',' << (cfg.map ? "map" : to_string(cfg.kind)) << ',' << r.width << ',' << r.height << ','
     << r.obstacles << ',' << r.m << ',' << r.excluded << ',' << int(r.saturated) << ',' << r.robots_individual << ',' << r.robots_holistic
     << ',';
  if (r.feasible()) os << r.savings();
  os << ',' << int(r.feasible_individual) << ',' << int(r.feasible_holistic) << ',' << int(r.oracle_verified) << ','
     << kMaxFlowVariant;
  if (with_times) {
    os << ',' << micros(r.time_individual_total) << ',' << micros(r.time_individual_parallel) << ','
       << micros(r.time_individual_max) << ',' << micros(r.time_holistic);
  }
  os << '\n';
}

void write_header(std::ostream& os, bool with_times) {
  const std::size_t n = with_times ? kTrialColumns.size() : kTrialColumns.size() - 4;
  for (std::size_t i = 0; i < n; ++i) os << (i ? "," : "") << kTrialColumns[i];
  os << '\n';
}

}  // namespace

const std::vector<std::string> kTrialColumns = {
    "experiment", "point",      "point_value",        "trial",          "seed",
    "attempts",   "kind",       "width",              "height",         "obstacles",
    "m",          "excluded",   "saturated",  "robots_individual",  "robots_holistic", "savings",
    "feasible_individual",      "feasible_holistic",  "oracle_verified", "maxflow_variant",
    "time_individual_total_us", "time_individual_parallel_us", "time_individual_max_us", "time_holistic_us"};

RunResult run_experiment(const ExperimentConfig& cfg, const RunOptions& opts) {
  cfg.validate();
  const std::vector<int> points = cfg.points();
  Shared sh{cfg, points, std::nullopt, {}, opts};
  if (cfg.map) sh.fixed_map = load_map(*cfg.map);

  const std::size_t total = points.size() * static_cast<std::size_t>(cfg.trials);
  RunResult result;
  result.records.resize(total);

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < total;) {
      try {
        result.records[i] = run_trial(sh, i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mu);
        if (!failure) failure = std::current_exception();
        next.store(total);
      }
    }
  };
  const int jobs = std::max(1, opts.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  result.discarded = sh.discarded.load();
  result.dominance_violations = sh.dominance.load();
  result.oracle_failures = sh.oracle.load();
  return result;
}

void write_trials_csv(std::ostream& os, const ExperimentConfig& cfg, const std::vector<TrialRecord>& records) {
  write_header(os, true);
  for (const auto& r : records) write_row(os, cfg, r, true);
}

std::string deterministic_csv(const ExperimentConfig& cfg, const std::vector<TrialRecord>& records) {
  std::ostringstream os;
  write_header(os, false);
  for (const auto& r : records) write_row(os, cfg, r, false);
  return os.str();
}

}  // namespace cordon
