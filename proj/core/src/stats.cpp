#include "cordon/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <ostream>

#include "cordon/errors.hpp"

namespace cordon {

double nearest_rank(const std::vector<double>& sorted, int percent) {
  if (sorted.empty()) throw ContractViolation("nearest_rank: no data");
  const auto n = static_cast<long long>(sorted.size());
  long long rank = (static_cast<long long>(percent) * n + 99) / 100;
  rank = std::clamp(rank, 1LL, n);
  return sorted[static_cast<std::size_t>(rank - 1)];
}

Quantiles quantiles(std::vector<double> values) {
  Quantiles q;
  q.n = values.size();
  if (values.empty()) return q;
  std::sort(values.begin(), values.end());
  q.p5 = nearest_rank(values, 5);
  q.p25 = nearest_rank(values, 25);
  q.p50 = nearest_rank(values, 50);
  q.p75 = nearest_rank(values, 75);
  q.p95 = nearest_rank(values, 95);
  q.mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
  return q;
}

SweepSummary summarize(const ExperimentConfig& cfg, const std::vector<TrialRecord>& records,
                       const std::function<void(const std::string&)>& warn) {
  SweepSummary out;
  out.experiment = cfg.experiment;
  out.sweep = cfg.sweep;
  const std::vector<int> points = cfg.points();
  std::vector<std::vector<const TrialRecord*>> by_point(points.size());
  for (const auto& r : records) {
    if (r.point_index < 0 || static_cast<std::size_t>(r.point_index) >= points.size()) {
      throw ContractViolation("summarize: record outside the sweep");
    }
    by_point[static_cast<std::size_t>(r.point_index)].push_back(&r);
  }
  auto us = [](Duration d) { return static_cast<double>(d.count()) / 1000.0; };
  for (std::size_t p = 0; p < points.size(); ++p) {
    PointSummary s;
    s.point_index = static_cast<int>(p);
    s.point_value = points[p];
    s.trials = by_point[p].size();
    std::vector<double> sav, ri, rh, ti, tp, th, ratio;
    for (const TrialRecord* r : by_point[p]) {
      if (!r->feasible()) continue;
      ++s.feasible;
      sav.push_back(r->savings());
      ri.push_back(r->robots_individual);
      rh.push_back(r->robots_holistic);
      ti.push_back(us(r->time_individual_total));
      tp.push_back(us(r->time_individual_parallel));
      th.push_back(us(r->time_holistic));
      if (r->time_individual_parallel.count() > 0) {
        ratio.push_back(static_cast<double>(r->time_holistic.count()) /
                        static_cast<double>(r->time_individual_parallel.count()));
      }
    }
    if (s.feasible == 0) {
      if (warn) warn("point " + std::to_string(points[p]) + " has no feasible trials; excluded from summary");
      continue;
    }
    s.savings = quantiles(sav);
    s.robots_individual = quantiles(ri);
    s.robots_holistic = quantiles(rh);
    s.time_individual_total_us = quantiles(ti);
    s.time_individual_parallel_us = quantiles(tp);
    s.time_holistic_us = quantiles(th);
    s.time_ratio = quantiles(ratio);
    out.points.push_back(s);
  }
  return out;
}

namespace {
void put_q(std::ostream& os, const Quantiles& q) {
  char buf[160];
  std::snprintf(buf, sizeof buf, ",%.6g,%.6g,%.6g,%.6g,%.6g,%.6g", q.p5, q.p25, q.p50, q.p75, q.p95, q.mean);
  os << buf;
}
void put_q_header(std::ostream& os, const char* name) {
  for (const char* suffix : {"p5", "p25", "p50", "p75", "p95", "mean"}) os << ',' << name << '_' << suffix;
}
}  // namespace

void write_summary_csv(std::ostream& os, const SweepSummary& summary) {
  os << "experiment,point,point_value,trials,feasible";
  for (const char* name : {"savings", "robots_individual", "robots_holistic", "time_individual_total_us",
                           "time_individual_parallel_us", "time_holistic_us", "time_ratio"}) {
    put_q_header(os, name);
  }
  os << '\n';
  for (const auto& p : summary.points) {
    os << summary.experiment << ',' << p.point_index << ',' << p.point_value << ',' << p.trials << ',' << p.feasible;
    for (const Quantiles* q : {&p.savings, &p.robots_individual, &p.robots_holistic, &p.time_individual_total_us,
                               &p.time_individual_parallel_us, &p.time_holistic_us, &p.time_ratio}) {
      put_q(os, *q);
    }
    os << '\n';
  }
}

std::string_view to_string(Finding f) {
  switch (f) {
    case Finding::Holds: return "holds";
    case Finding::Fails: return "fails";
    case Finding::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

namespace {
std::vector<double> average_ranks(const std::vector<double>& v) {
  std::vector<std::size_t> order(v.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::vector<double> ranks(v.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j + 1 < order.size() && v[order[j + 1]] == v[order[i]]) ++j;
    const double r = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = r;
    i = j + 1;
  }
  return ranks;
}
}  // namespace

double spearman(const std::vector<double>& x, const std::vector<double>& y) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  if (x.size() != y.size() || x.size() < 2) return nan;
  const auto rx = average_ranks(x);
  const auto ry = average_ranks(y);
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / n;
  const double my = std::accumulate(ry.begin(), ry.end(), 0.0) / n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  if (sxx == 0 || syy == 0) return nan;
  return sxy / std::sqrt(sxx * syy);
}

TrendReport trend_checks(const SweepSummary& summary) {
  TrendReport rep;
  const auto& pts = summary.points;
  if (pts.size() < 3) return rep;
  auto verdict = [](bool b) { return b ? Finding::Holds : Finding::Fails; };

  if (summary.sweep == SweepVariable::Obstacles) {
    double best_inner = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i + 1 < pts.size(); ++i) best_inner = std::max(best_inner, pts[i].savings.p50);
    rep.interior_peak = verdict(best_inner > pts.front().savings.p50 && best_inner > pts.back().savings.p50);

    std::vector<double> x, y;
    for (const auto& p : pts) {
      if (p.time_ratio.n == 0) continue;
      x.push_back(p.point_value);
      y.push_back(p.time_ratio.p50);
    }
    rep.timing_spearman = spearman(x, y);
    rep.timing_crossover = std::isnan(rep.timing_spearman) ? Finding::Inconclusive : verdict(rep.timing_spearman < 0);
  }
  if (summary.sweep == SweepVariable::Size) {
    rep.size_decline = verdict(pts.front().savings.p50 > pts.back().savings.p50);
  }
  if (summary.sweep == SweepVariable::Targets) {
    const auto first_nontrivial =
        std::find_if(pts.begin(), pts.end(), [](const PointSummary& p) { return p.point_value > 1; });
    if (first_nontrivial != pts.end() && first_nontrivial != pts.end() - 1) {
      rep.target_growth = verdict(pts.back().savings.mean >= 2.0 * first_nontrivial->savings.mean);
    }
    rep.target_increase = verdict(pts.back().savings.mean > pts.front().savings.mean);
  }
  return rep;
}

void write_trend_report(std::ostream& os, const SweepSummary& summary, const TrendReport& rep) {
  os << "experiment " << summary.experiment << " sweep=" << to_string(summary.sweep) << " points=" << summary.points.size()
     << '\n';
  for (const auto& p : summary.points) {
    char buf[200];
    std::snprintf(buf, sizeof buf, "  %-6d feasible=%-5zu savings p25/p50/p75=%g/%g/%g mean=%.3f ratio_p50=%.3f\n",
                  p.point_value, p.feasible, p.savings.p25, p.savings.p50, p.savings.p75, p.savings.mean,
                  p.time_ratio.p50);
    os << buf;
  }
  switch (summary.sweep) {
    case SweepVariable::Obstacles:
      os << "interior_peak: " << to_string(rep.interior_peak) << '\n';
      os << "timing_crossover: " << to_string(rep.timing_crossover) << " (spearman=" << rep.timing_spearman << ")\n";
      break;
    case SweepVariable::Size:
      os << "size_decline: " << to_string(rep.size_decline) << '\n';
      break;
    case SweepVariable::Targets:
      os << "target_growth: " << to_string(rep.target_growth) << '\n';
      os << "target_increase: " << to_string(rep.target_increase) << '\n';
      break;
    case SweepVariable::None:
      os << "no sweep: no trend findings\n";
      break;
  }
}

}  // namespace cordon
