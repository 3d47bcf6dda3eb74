#include "cordon/map_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "cordon/errors.hpp"

namespace cordon {
namespace {

constexpr char kStarGlyph = '*';

class LineReader {
 public:
  explicit LineReader(std::istream& is) : is_(is) {}
  bool next(std::string& line) {
    if (!std::getline(is_, line)) return false;
    ++line_no_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
  }
  std::size_t line_no() const { return line_no_; }

 private:
  std::istream& is_;
  std::size_t line_no_ = 0;
};

int parse_int(std::string_view text, std::size_t line, const char* what) {
  int value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) throw ParseError(line, std::string("bad ") + what + " '" + std::string(text) + "'");
  return value;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

// Index: targetId -> cell list, for '*' cells.
std::map<std::pair<int, int>, int> read_index(std::istream& is) {
  std::map<std::pair<int, int>, int> out;
  LineReader reader(is);
  std::string line;
  while (reader.next(line)) {
    if (line.empty() || line == "targetId,row,col") continue;
    std::vector<std::string_view> parts;
    std::string_view rest = line;
    for (std::size_t pos; (pos = rest.find(',')) != std::string_view::npos;) {
      parts.push_back(rest.substr(0, pos));
      rest.remove_prefix(pos + 1);
    }
    parts.push_back(rest);
    if (parts.size() != 3) throw ParseError(reader.line_no(), "target index: expected targetId,row,col");
    const int id = parse_int(parts[0], reader.line_no(), "target id");
    const int row = parse_int(parts[1], reader.line_no(), "row");
    const int col = parse_int(parts[2], reader.line_no(), "column");
    if (id < kLetterTargets) throw ParseError(reader.line_no(), "target index lists a lettered id");
    if (!out.emplace(std::make_pair(row, col), id).second) throw ParseError(reader.line_no(), "duplicate index cell");
  }
  return out;
}

OccupancyGrid read_map_body(LineReader& reader, const std::string& header, std::istream* index) {
  const auto fields = split_ws(header);
  const std::size_t hl = reader.line_no();
  if (fields.size() != 5 || fields[0] != kMapMagic) throw ParseError(hl, "expected 'cordon-map v1 <width> <height> <m>'");
  if (fields[1] != kMapVersion) throw ParseError(hl, "unsupported map version '" + std::string(fields[1]) + "'");
  const int width = parse_int(fields[2], hl, "width");
  const int height = parse_int(fields[3], hl, "height");
  const int m = parse_int(fields[4], hl, "target count");
  if (width < OccupancyGrid::kMinSide || height < OccupancyGrid::kMinSide) throw ParseError(hl, "map must be at least 3x3");

  std::map<std::pair<int, int>, int> indexed;
  if (index != nullptr) indexed = read_index(*index);

  OccupancyGrid grid(width, height);
  std::string line;
  std::size_t stars = 0;
  for (int r = 0; r < height; ++r) {
    if (!reader.next(line)) throw ParseError(reader.line_no() + 1, "map ended after " + std::to_string(r) + " rows");
    if (static_cast<int>(line.size()) != width) {
      throw ParseError(reader.line_no(), "row has " + std::to_string(line.size()) + " cells, expected " + std::to_string(width));
    }
    for (int c = 0; c < width; ++c) {
      const char ch = line[static_cast<std::size_t>(c)];
      CellState s;
      if (ch == '.') {
        s = CellState::free();
      } else if (ch == '#') {
        s = CellState::obstacle();
      } else if (ch >= 'A' && ch <= 'Z') {
        s = CellState::target(ch - 'A');
      } else if (ch >= 'a' && ch <= 'z') {
        s = CellState::target(26 + (ch - 'a'));
      } else if (ch == kStarGlyph) {
        auto it = indexed.find({r, c});
        if (it == indexed.end()) throw ParseError(reader.line_no(), "'*' cell has no entry in the target index");
        s = CellState::target(it->second);
        ++stars;
      } else {
        throw ParseError(reader.line_no(), std::string("unexpected character '") + ch + "'");
      }
      grid.set({r, c}, s);
    }
  }
  if (stars != indexed.size()) throw ParseError(0, "target index lists cells that are not '*' in the map");
  if (grid.target_count() != m) {
    throw ParseError(hl, "header says m=" + std::to_string(m) + " but map has " + std::to_string(grid.target_count()));
  }
  try {
    grid.validate();
  } catch (const InvalidSpec& e) {
    throw ParseError(hl, e.what());
  }
  return grid;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  return out;
}

}  // namespace

char target_glyph(int id) {
  if (id < 26) return static_cast<char>('A' + id);
  if (id < kLetterTargets) return static_cast<char>('a' + (id - 26));
  return kStarGlyph;
}

bool needs_target_index(const OccupancyGrid& grid) { return grid.target_count() > kLetterTargets; }

void write_map(std::ostream& os, const OccupancyGrid& grid) {
  os << kMapMagic << ' ' << kMapVersion << ' ' << grid.width() << ' ' << grid.height() << ' ' << grid.target_count()
     << '\n';
  std::string row(static_cast<std::size_t>(grid.width()), '.');
  for (int r = 0; r < grid.height(); ++r) {
    for (int c = 0; c < grid.width(); ++c) {
      const CellState s = grid.at({r, c});
      row[static_cast<std::size_t>(c)] = s.is_free() ? '.' : s.is_obstacle() ? '#' : target_glyph(s.target_id());
    }
    os << row << '\n';
  }
}

void write_target_index(std::ostream& os, const OccupancyGrid& grid) {
  if (!needs_target_index(grid)) return;
  os << "targetId,row,col\n";
  for (std::size_t i = 0; i < grid.cell_count(); ++i) {
    if (grid[i].is_target() && grid[i].target_id() >= kLetterTargets) {
      const Coord c = grid.coord(i);
      os << grid[i].target_id() << ',' << c.row << ',' << c.col << '\n';
    }
  }
}

OccupancyGrid read_map(std::istream& is, std::istream* index) {
  LineReader reader(is);
  std::string header;
  if (!reader.next(header)) throw ParseError(1, "empty map");
  return read_map_body(reader, header, index);
}

std::string map_to_string(const OccupancyGrid& grid) {
  std::ostringstream os;
  write_map(os, grid);
  return os.str();
}

OccupancyGrid map_from_string(const std::string& text) {
  std::istringstream is(text);
  return read_map(is);
}

void write_placement(std::ostream& os, const OccupancyGrid& grid, const std::vector<Coord>& robots) {
  write_map(os, grid);
  for (const Coord& c : robots) os << "R " << c.row << ' ' << c.col << '\n';
}

PlacementFile read_placement(std::istream& is, std::istream* index) {
  PlacementFile out;
  LineReader reader(is);
  std::string line;
  while (reader.next(line)) {
    if (line.empty()) continue;
    if (line.rfind(kMapMagic, 0) == 0) {
      if (out.map || !out.robots.empty()) throw ParseError(reader.line_no(), "map header must come first");
      out.map = read_map_body(reader, line, index);
      continue;
    }
    const auto fields = split_ws(line);
    if (fields.size() != 3 || fields[0] != "R") throw ParseError(reader.line_no(), "expected 'R <row> <col>'");
    out.robots.push_back({parse_int(fields[1], reader.line_no(), "row"), parse_int(fields[2], reader.line_no(), "column")});
  }
  return out;
}

std::filesystem::path target_index_path(const std::filesystem::path& map_path) {
  auto p = map_path;
  p += ".idx";
  return p;
}

OccupancyGrid load_map(const std::filesystem::path& path) {
  auto in = open_in(path);
  const auto idx_path = target_index_path(path);
  if (std::filesystem::exists(idx_path)) {
    auto idx = open_in(idx_path);
    return read_map(in, &idx);
  }
  return read_map(in);
}

void save_map(const std::filesystem::path& path, const OccupancyGrid& grid) {
  auto out = open_out(path);
  write_map(out, grid);
  if (needs_target_index(grid)) {
    auto idx = open_out(target_index_path(path));
    write_target_index(idx, grid);
  }
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

PlacementFile load_placement(const std::filesystem::path& path) {
  auto in = open_in(path);
  const auto idx_path = target_index_path(path);
  if (std::filesystem::exists(idx_path)) {
    auto idx = open_in(idx_path);
    return read_placement(in, &idx);
  }
  return read_placement(in);
}

void save_placement(const std::filesystem::path& path, const OccupancyGrid& grid, const std::vector<Coord>& robots) {
  auto out = open_out(path);
  write_placement(out, grid, robots);
  if (needs_target_index(grid)) {
    auto idx = open_out(target_index_path(path));
    write_target_index(idx, grid);
  }
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

}  // namespace cordon
