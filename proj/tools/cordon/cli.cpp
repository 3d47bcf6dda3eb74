#include "cordon/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "cordon/config.hpp"
#include "cordon/errors.hpp"
#include "cordon/experiments.hpp"
#include "cordon/generate.hpp"
#include "cordon/map_io.hpp"
#include "cordon/oracle.hpp"
#include "cordon/planner.hpp"
#include "cordon/render.hpp"
#include "cordon/stats.hpp"

namespace cordon::cli {
namespace {

namespace fs = std::filesystem;

std::string ms(Duration d) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", static_cast<double>(d.count()) / 1e6);
  return buf;
}

std::string coord_text(Coord c) { return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")"; }

std::string join_ids(const std::vector<int>& ids) {
  std::string s;
  for (std::size_t i = 0; i < ids.size(); ++i) s += (i ? "," : "") + std::to_string(ids[i]);
  return s;
}

// "15" or "15-20".
bool parse_target_range(const std::string& text, int& lo, int& hi) {
  auto parse = [](std::string_view s, int& v) {
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    return ec == std::errc() && p == s.data() + s.size() && !s.empty();
  };
  const auto dash = text.find('-');
  if (dash == std::string::npos) {
    if (!parse(text, lo)) return false;
    hi = lo;
    return true;
  }
  return parse(std::string_view(text).substr(0, dash), lo) && parse(std::string_view(text).substr(dash + 1), hi);
}

struct GenerateArgs {
  std::string kind;
  int width = 100;
  int height = 100;
  std::optional<int> size;
  int obstacles = 0;
  std::string targets = "1";
  int block_size = 3;
  int rect_min = 2;
  int rect_max = 10;
  std::uint64_t seed = 0;
  std::string output;
};

int cmd_generate(const GenerateArgs& a, std::ostream& out, std::ostream& err) {
  GenSpec spec;
  try {
    spec.kind = parse_environment_kind(a.kind);
  } catch (const InvalidSpec& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  spec.width = a.size.value_or(a.width);
  spec.height = a.size.value_or(a.height);
  spec.obstacles = a.obstacles;
  if (!parse_target_range(a.targets, spec.targets_min, spec.targets_max)) {
    err << "error: --targets expects N or MIN-MAX\n";
    return kUsage;
  }
  spec.block_size = a.block_size;
  spec.rect_min = a.rect_min;
  spec.rect_max = a.rect_max;
  spec.seed = a.seed;

  Environment env = generate_environment(spec);
  const OccupancyGrid& g = env.grid;
  std::ostream& note = a.output.empty() ? err : out;
  if (a.output.empty()) {
    write_map(out, g);
  } else {
    save_map(a.output, g);
  }
  note << "generated " << to_string(spec.kind) << ' ' << g.width() << 'x' << g.height()
       << " obstacles=" << spec.obstacles << " targets=" << g.target_count() << " seed=" << spec.seed
       << " free=" << g.count_free() << " obstacle_cells=" << g.count_obstacles()
       << (env.saturated ? " saturated" : "") << (a.output.empty() ? "" : " -> " + a.output) << '\n';
  return kOk;
}

struct SolveArgs {
  std::string map;
  std::string approach = "both";
  std::string output;
};

int cmd_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  const OccupancyGrid grid = load_map(a.map);
  if (grid.target_count() == 0) {
    err << "error: map has no targets\n";
    return kUsage;
  }
  const bool want_ind = a.approach != "holistic";
  const bool want_hol = a.approach != "individual";
  out << "map " << a.map << ' ' << grid.width() << 'x' << grid.height() << " m=" << grid.target_count() << '\n';

  std::optional<Placement> ind;
  std::optional<Placement> hol;
  if (want_ind) {
    ind = solve_individual(grid);
    const auto est = parallel_individual_time_estimate(*ind);
    out << "individual: robots=" << ind->robot_count() << " feasible=" << (ind->feasible ? "yes" : "no")
        << " time_ms=" << ms(ind->solve_time) << " parallel_estimate_ms=" << ms(est.per_target_share)
        << " slowest_target_ms=" << ms(est.slowest_target) << '\n';
  }
  if (want_hol) {
    hol = solve_holistic(grid);
    out << "holistic: robots=" << hol->robot_count() << " feasible=" << (hol->feasible ? "yes" : "no")
        << " time_ms=" << ms(hol->solve_time) << '\n';
  }

  const bool feasible = (!ind || ind->feasible) && (!hol || hol->feasible);
  if (!feasible) {
    err << "infeasible: target(s) " << join_ids(exposed_targets(grid))
        << " reachable from the border without crossing a free interior cell\n";
    return kInfeasible;
  }
  if (ind && hol) {
    out << "individual=" << ind->robot_count() << " holistic=" << hol->robot_count()
        << " savings=" << static_cast<long>(ind->robot_count()) - static_cast<long>(hol->robot_count()) << '\n';
  } else if (ind) {
    out << "individual=" << ind->robot_count() << '\n';
  } else {
    out << "holistic=" << hol->robot_count() << '\n';
  }
  if (!a.output.empty()) {
    const Placement& chosen = hol ? *hol : *ind;
    save_placement(a.output, grid, chosen.robots);
    out << "placement (" << to_string(chosen.approach) << ") -> " << a.output << '\n';
  }
  return kOk;
}

// Placement robots, checking any embedded map against `grid`.
std::optional<std::vector<Coord>> load_matching_placement(const OccupancyGrid& grid, const std::string& path,
                                                          std::ostream& err) {
  PlacementFile pf = load_placement(path);
  if (pf.map && !(*pf.map == grid)) {
    err << "error: placement " << path << " was made for a different map (" << pf.map->width() << 'x'
        << pf.map->height() << " vs " << grid.width() << 'x' << grid.height() << ")\n";
    return std::nullopt;
  }
  for (const Coord& c : pf.robots) {
    if (!grid.in_bounds(c)) {
      err << "error: robot " << coord_text(c) << " is outside the " << grid.width() << 'x' << grid.height()
          << " map\n";
      return std::nullopt;
    }
  }
  return pf.robots;
}

int cmd_verify(const std::string& map_path, const std::string& placement_path, std::ostream& out, std::ostream& err) {
  const OccupancyGrid grid = load_map(map_path);
  auto robots = load_matching_placement(grid, placement_path, err);
  if (!robots) return kUsage;
  const auto leak = oracle::find_leak(grid, *robots);
  if (!leak) {
    out << "SEPARATED robots=" << robots->size() << '\n';
    return kOk;
  }
  out << "LEAK\nwitness:";
  for (const Coord& c : *leak) out << ' ' << coord_text(c);
  out << '\n';
  return kLeak;
}

struct SweepArgs {
  std::string config;
  std::string out_dir = ".";
  int jobs = 1;
  bool quiet = false;
};

int cmd_sweep(const SweepArgs& a, std::ostream& out, std::ostream& err) {
  ExperimentConfig cfg;
  try {
    cfg = load_config(a.config);
  } catch (const ParseError& e) {
    err << a.config << ':' << e.line() << ": " << e.what() << '\n';
    return kUsage;
  }
  if (const char* env = std::getenv("CORDON_SEED"); env != nullptr && *env != '\0') {
    std::uint64_t seed = 0;
    const std::string_view s(env);
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), seed);
    if (ec != std::errc() || p != s.data() + s.size()) {
      err << "error: CORDON_SEED must be an unsigned integer\n";
      return kUsage;
    }
    cfg.seed = seed;
  }

  RunOptions opts;
  opts.jobs = a.jobs;
  if (!a.quiet) opts.log = [&err](const std::string& msg) { err << msg << '\n'; };
  const RunResult result = run_experiment(cfg, opts);

  const fs::path dir(a.out_dir);
  fs::create_directories(dir);
  const fs::path trials_path = dir / (cfg.name + "_trials.csv");
  const fs::path summary_path = dir / (cfg.name + "_summary.csv");
  const fs::path trends_path = dir / (cfg.name + "_trends.txt");

  auto open = [](const fs::path& p) {
    std::ofstream f(p, std::ios::binary);
    if (!f) throw IoError("cannot write '" + p.string() + "'");
    return f;
  };
  {
    auto f = open(trials_path);
    write_trials_csv(f, cfg, result.records);
  }
  const SweepSummary summary =
      summarize(cfg, result.records, [&err](const std::string& msg) { err << "warning: " << msg << '\n'; });
  {
    auto f = open(summary_path);
    write_summary_csv(f, summary);
  }
  const TrendReport report = trend_checks(summary);
  std::ostringstream report_text;
  write_trend_report(report_text, summary, report);
  report_text << "trials=" << result.records.size() << " discarded=" << result.discarded
              << " dominance_violations=" << result.dominance_violations
              << " oracle_failures=" << result.oracle_failures << '\n';
  {
    auto f = open(trends_path);
    f << report_text.str();
  }
  out << report_text.str();
  out << "wrote " << trials_path.string() << ", " << summary_path.string() << ", " << trends_path.string() << '\n';
  return (result.dominance_violations == 0 && result.oracle_failures == 0) ? kOk : kLeak;
}

struct RenderArgs {
  std::string map;
  std::string placement;
  bool ascii = false;
  std::string output;
  int cell_px = 12;
};

int cmd_render(const RenderArgs& a, std::ostream& out, std::ostream& err) {
  const OccupancyGrid grid = load_map(a.map);
  std::vector<Coord> robots;
  if (!a.placement.empty()) {
    auto loaded = load_matching_placement(grid, a.placement, err);
    if (!loaded) return kUsage;
    robots = std::move(*loaded);
  }
  std::ostringstream body;
  if (a.ascii) {
    write_placement(body, grid, robots);
  } else {
    SvgStyle style;
    style.cell_px = a.cell_px;
    render_svg(body, grid, robots, style);
  }
  if (a.output.empty()) {
    out << body.str();
  } else {
    std::ofstream f(a.output, std::ios::binary);
    if (!f) throw IoError("cannot write '" + a.output + "'");
    f << body.str();
    out << "rendered -> " << a.output << '\n';
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"cordon: robot placement for multi-target access monitoring"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Generate a random environment map");
  generate->add_option("--kind", gen.kind, "open | closed")->required();
  generate->add_option("--width", gen.width, "Columns")->capture_default_str();
  generate->add_option("--height", gen.height, "Rows")->capture_default_str();
  generate->add_option("--size", gen.size, "Square side (overrides --width/--height)");
  generate->add_option("--obstacles", gen.obstacles, "Rectangles (open) or blocked crossings (closed)")
      ->capture_default_str();
  generate->add_option("--targets", gen.targets, "Target count N or range MIN-MAX")->capture_default_str();
  generate->add_option("--block-size", gen.block_size, "Closed layout block side")->capture_default_str();
  generate->add_option("--rect-min", gen.rect_min, "Open layout minimum rectangle side")->capture_default_str();
  generate->add_option("--rect-max", gen.rect_max, "Open layout maximum rectangle side")->capture_default_str();
  generate->add_option("--seed", gen.seed, "Random seed")->capture_default_str();
  generate->add_option("-o,--output", gen.output, "Map file (stdout when omitted)");

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Place robots with the individual and/or holistic approach");
  solve_cmd->add_option("map", solve.map, "Map file")->required();
  solve_cmd->add_option("--approach", solve.approach, "individual | holistic | both")
      ->check(CLI::IsMember({"individual", "holistic", "both"}))
      ->capture_default_str();
  solve_cmd->add_option("-o,--output", solve.output, "Write the placement (holistic when both)");

  std::string verify_map, verify_placement;
  auto* verify = app.add_subcommand("verify", "Check that a placement separates every target from the border");
  verify->add_option("map", verify_map, "Map file")->required();
  verify->add_option("placement", verify_placement, "Placement file")->required();

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Run an experiment sweep from a config file");
  sweep_cmd->add_option("config", sweep.config, "Experiment config")->required();
  sweep_cmd->add_option("--out", sweep.out_dir, "Output directory")->capture_default_str();
  sweep_cmd->add_option("--jobs", sweep.jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  sweep_cmd->add_flag("--quiet", sweep.quiet, "Suppress discard log");

  RenderArgs render;
  auto* render_cmd = app.add_subcommand("render", "Render a map (and placement) as SVG or text");
  render_cmd->add_option("map", render.map, "Map file")->required();
  render_cmd->add_option("--placement", render.placement, "Placement file to overlay");
  render_cmd->add_flag("--ascii", render.ascii, "Emit the map text format with R lines instead of SVG");
  render_cmd->add_option("-o,--output", render.output, "Output file (stdout when omitted)");
  render_cmd->add_option("--cell-px", render.cell_px, "SVG cell size")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*generate) return cmd_generate(gen, out, err);
    if (*solve_cmd) return cmd_solve(solve, out, err);
    if (*verify) return cmd_verify(verify_map, verify_placement, out, err);
    if (*sweep_cmd) return cmd_sweep(sweep, out, err);
    if (*render_cmd) return cmd_render(render, out, err);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const ContractViolation& e) {
    err << "contract error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidSpec& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const GenerationFailed& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  }
  return kUsage;
}

}  // namespace cordon::cli
