#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "cordon/config.hpp"
#include "cordon/experiments.hpp"

namespace cordon {

// Nearest-rank percentile of sorted data: element ceil(percent * n / 100), 1-based, clamped
// to [1, n]. Integer arithmetic keeps it identical across platforms.
double nearest_rank(const std::vector<double>& sorted, int percent);

struct Quantiles {
  std::size_t n = 0;
  double p5 = 0, p25 = 0, p50 = 0, p75 = 0, p95 = 0;
  double mean = 0;
};
Quantiles quantiles(std::vector<double> values);

struct PointSummary {
  int point_index = 0;
  int point_value = 0;
  std::size_t trials = 0;
  // Statistics below cover feasible trials only.
  std::size_t feasible = 0;
  Quantiles savings;
  Quantiles robots_individual;
  Quantiles robots_holistic;
  Quantiles time_individual_total_us;
  Quantiles time_individual_parallel_us;
  Quantiles time_holistic_us;
  // Per-trial holistic time / parallel-individual estimate.
  Quantiles time_ratio;
};

struct SweepSummary {
  std::string experiment;
  SweepVariable sweep = SweepVariable::None;
  std::vector<PointSummary> points;
};

// Points without a feasible trial are dropped and reported through `warn`.
SweepSummary summarize(const ExperimentConfig& cfg, const std::vector<TrialRecord>& records,
                       const std::function<void(const std::string&)>& warn = {});

void write_summary_csv(std::ostream& os, const SweepSummary& summary);

enum class Finding { Holds, Fails, Inconclusive };
std::string_view to_string(Finding f);

// Average ranks for ties; NaN when fewer than two values or zero variance.
double spearman(const std::vector<double>& x, const std::vector<double>& y);

struct TrendReport {
  // Obstacle sweeps: the largest median savings is attained at an interior point and
  // beats both endpoints.
  Finding interior_peak = Finding::Inconclusive;
  // Size sweeps: median savings at the smallest size exceeds that at the largest.
  Finding size_decline = Finding::Inconclusive;
  // Obstacle sweeps: Spearman correlation between obstacle count and median time ratio < 0.
  Finding timing_crossover = Finding::Inconclusive;
  double timing_spearman = 0;
  // Target sweeps: mean savings at the last point >= 2x the first point with m > 1.
  Finding target_growth = Finding::Inconclusive;
  // Target sweeps: mean savings at the last point > at the first point.
  Finding target_increase = Finding::Inconclusive;
};

// Fewer than 3 points -> everything Inconclusive.
TrendReport trend_checks(const SweepSummary& summary);
void write_trend_report(std::ostream& os, const SweepSummary& summary, const TrendReport& report);

}  // namespace cordon
