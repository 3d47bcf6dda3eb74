#include "cordon/config.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <set>

#include "cordon/errors.hpp"

namespace cordon {
namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <typename T>
T parse_number(std::string_view text, std::size_t line, std::string_view key) {
  T value{};
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw ParseError(line, "bad value '" + std::string(text) + "' for '" + std::string(key) + "'");
  }
  return value;
}

bool parse_bool(std::string_view text, std::size_t line, std::string_view key) {
  if (text == "true" || text == "yes" || text == "1") return true;
  if (text == "false" || text == "no" || text == "0") return false;
  throw ParseError(line, "bad boolean '" + std::string(text) + "' for '" + std::string(key) + "'");
}

}  // namespace

std::string_view to_string(SweepVariable v) {
  switch (v) {
    case SweepVariable::None: return "none";
    case SweepVariable::Obstacles: return "obstacles";
    case SweepVariable::Targets: return "targets";
    case SweepVariable::Size: return "size";
  }
  return "none";
}

std::vector<int> SweepRange::points() const {
  std::vector<int> out;
  for (long long v = from; v <= to; v += step) out.push_back(static_cast<int>(v));
  return out;
}

std::vector<int> ExperimentConfig::points() const {
  if (sweep == SweepVariable::None) return {0};
  return range.points();
}

GenSpec ExperimentConfig::spec_at(int point_value) const {
  GenSpec s;
  s.kind = kind;
  s.width = width;
  s.height = height;
  s.obstacles = obstacles;
  s.targets_min = targets_min;
  s.targets_max = targets_max;
  s.block_size = block_size;
  s.rect_min = rect_min;
  s.rect_max = rect_max;
  switch (sweep) {
    case SweepVariable::None: break;
    case SweepVariable::Obstacles: s.obstacles = point_value; break;
    case SweepVariable::Targets: s.targets_min = s.targets_max = point_value; break;
    case SweepVariable::Size: s.width = s.height = point_value; break;
  }
  return s;
}

void ExperimentConfig::validate() const {
  if (trials < 1) throw InvalidSpec("trials must be >= 1");
  if (max_attempts < 1) throw InvalidSpec("max_attempts must be >= 1");
  if (sweep != SweepVariable::None) {
    if (range.step < 1) throw InvalidSpec("sweep step must be >= 1");
    if (range.to < range.from) throw InvalidSpec("sweep range is empty");
    if (map) throw InvalidSpec("a fixed map cannot be swept");
  }
  if (!map) {
    for (int p : points()) spec_at(p).validate();
  }
}

ExperimentConfig parse_config(std::istream& is, const std::filesystem::path& base_dir) {
  ExperimentConfig cfg;
  bool in_section = false;
  bool size_given = false;
  std::set<std::string> seen;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(is, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line != "[experiment]") throw ParseError(line_no, "unknown section '" + std::string(line) + "'");
      if (in_section) throw ParseError(line_no, "duplicate [experiment] section");
      in_section = true;
      continue;
    }
    if (!in_section) throw ParseError(line_no, "expected [experiment] section header first");
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError(line_no, "expected 'key = value'");
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key.empty()) throw ParseError(line_no, "missing key");
    if (!seen.insert(key).second) throw ParseError(line_no, "duplicate key '" + key + "'");

    if (key == "name") {
      if (value.empty()) throw ParseError(line_no, "empty name");
      cfg.name = std::string(value);
    } else if (key == "experiment") {
      cfg.experiment = std::string(value);
    } else if (key == "map") {
      cfg.map = base_dir / std::filesystem::path(std::string(value));
    } else if (key == "kind") {
      if (value == "open") cfg.kind = EnvironmentKind::Open;
      else if (value == "closed") cfg.kind = EnvironmentKind::Closed;
      else throw ParseError(line_no, "kind must be open|closed");
    } else if (key == "sweep") {
      if (value == "none") cfg.sweep = SweepVariable::None;
      else if (value == "obstacles") cfg.sweep = SweepVariable::Obstacles;
      else if (value == "targets") cfg.sweep = SweepVariable::Targets;
      else if (value == "size") cfg.sweep = SweepVariable::Size;
      else throw ParseError(line_no, "sweep must be none|obstacles|targets|size");
    } else if (key == "from") {
      cfg.range.from = parse_number<int>(value, line_no, key);
    } else if (key == "to") {
      cfg.range.to = parse_number<int>(value, line_no, key);
    } else if (key == "step") {
      cfg.range.step = parse_number<int>(value, line_no, key);
    } else if (key == "trials") {
      cfg.trials = parse_number<int>(value, line_no, key);
    } else if (key == "width") {
      cfg.width = parse_number<int>(value, line_no, key);
    } else if (key == "height") {
      cfg.height = parse_number<int>(value, line_no, key);
    } else if (key == "size") {
      cfg.width = cfg.height = parse_number<int>(value, line_no, key);
      size_given = true;
    } else if (key == "targets") {
      if (const auto dash = value.find('-'); dash != std::string_view::npos && dash > 0) {
        cfg.targets_min = parse_number<int>(trim(value.substr(0, dash)), line_no, key);
        cfg.targets_max = parse_number<int>(trim(value.substr(dash + 1)), line_no, key);
      } else {
        cfg.targets_min = cfg.targets_max = parse_number<int>(value, line_no, key);
      }
    } else if (key == "obstacles") {
      cfg.obstacles = parse_number<int>(value, line_no, key);
    } else if (key == "block_size") {
      cfg.block_size = parse_number<int>(value, line_no, key);
    } else if (key == "rect_min") {
      cfg.rect_min = parse_number<int>(value, line_no, key);
    } else if (key == "rect_max") {
      cfg.rect_max = parse_number<int>(value, line_no, key);
    } else if (key == "seed") {
      cfg.seed = parse_number<std::uint64_t>(value, line_no, key);
    } else if (key == "infeasible") {
      if (value == "exclude") cfg.infeasible = InfeasiblePolicy::Exclude;
      else if (value == "reseed") cfg.infeasible = InfeasiblePolicy::Reseed;
      else if (value == "record") cfg.infeasible = InfeasiblePolicy::Record;
      else throw ParseError(line_no, "infeasible must be exclude|reseed|record");
    } else if (key == "verify") {
      cfg.verify = parse_bool(value, line_no, key);
    } else if (key == "max_attempts") {
      cfg.max_attempts = parse_number<int>(value, line_no, key);
    } else {
      throw ParseError(line_no, "unknown key '" + key + "'");
    }
  }
  if (!in_section) throw ParseError(line_no + 1, "missing [experiment] section");
  if (size_given && (seen.count("width") || seen.count("height"))) {
    throw ParseError(0, "'size' conflicts with 'width'/'height'");
  }
  try {
    cfg.validate();
  } catch (const InvalidSpec& e) {
    throw ParseError(0, e.what());
  }
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config '" + path.string() + "'");
  return parse_config(in, path.parent_path());
}

}  // namespace cordon
