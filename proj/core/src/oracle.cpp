#include "cordon/oracle.hpp"

#include <algorithm>
#include <cstdint>

#include "cordon/errors.hpp"

namespace cordon::oracle {
namespace {

constexpr int kDr[4] = {-1, 1, 0, 0};
constexpr int kDc[4] = {0, 0, -1, 1};

bool is_edge(const OccupancyGrid& g, int r, int c) {
  return r == 0 || c == 0 || r == g.height() - 1 || c == g.width() - 1;
}

// Breadth-first flood with reusable buffers; `blocked` marks robot cells.
class Flood {
 public:
  explicit Flood(const OccupancyGrid& grid, const std::vector<int>& ignored = {})
      : g_(grid), mark_(grid.cell_count(), 0), parent_(grid.cell_count(), -1) {
    queue_.reserve(grid.cell_count());
    for (int id : ignored) {
      if (id < 0) continue;
      if (static_cast<std::size_t>(id) >= ignored_.size()) ignored_.resize(static_cast<std::size_t>(id) + 1, false);
      ignored_[static_cast<std::size_t>(id)] = true;
    }
  }

  // Returns the index of the first target cell reached, or -1.
  std::int64_t run(const std::vector<std::uint8_t>& blocked, bool want_parents) {
    ++stamp_;
    if (stamp_ == 0) {
      std::fill(mark_.begin(), mark_.end(), 0);
      stamp_ = 1;
    }
    queue_.clear();
    const int w = g_.width();
    const int h = g_.height();
    for (int r = 0; r < h; ++r) {
      for (int c = 0; c < w; ++c) {
        if (!is_edge(g_, r, c)) continue;
        const auto i = static_cast<std::size_t>(r) * w + c;
        if (!g_[i].is_free() || blocked[i]) continue;
        mark_[i] = stamp_;
        if (want_parents) parent_[i] = -1;
        queue_.push_back(static_cast<std::int32_t>(i));
      }
    }
    for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
      const auto i = static_cast<std::size_t>(queue_[qi]);
      if (g_[i].is_target() && !ignored(g_[i].target_id())) return static_cast<std::int64_t>(i);
      const int r = static_cast<int>(i) / w;
      const int c = static_cast<int>(i) % w;
      for (int d = 0; d < 4; ++d) {
        const int nr = r + kDr[d];
        const int nc = c + kDc[d];
        if (nr < 0 || nc < 0 || nr >= h || nc >= w) continue;
        const auto j = static_cast<std::size_t>(nr) * w + nc;
        if (mark_[j] == stamp_ || blocked[j] || g_[j].is_obstacle()) continue;
        mark_[j] = stamp_;
        if (want_parents) parent_[j] = static_cast<std::int32_t>(i);
        queue_.push_back(static_cast<std::int32_t>(j));
      }
    }
    return -1;
  }

  std::vector<Coord> path_to(std::int64_t cell) const {
    std::vector<Coord> path;
    for (auto i = static_cast<std::int32_t>(cell); i >= 0; i = parent_[static_cast<std::size_t>(i)]) {
      path.push_back(g_.coord(static_cast<std::size_t>(i)));
    }
    std::reverse(path.begin(), path.end());
    return path;
  }

 private:
  bool ignored(int id) const { return static_cast<std::size_t>(id) < ignored_.size() && ignored_[static_cast<std::size_t>(id)]; }

  const OccupancyGrid& g_;
  std::vector<bool> ignored_;
  std::vector<std::uint32_t> mark_;
  std::vector<std::int32_t> parent_;
  std::vector<std::int32_t> queue_;
  std::uint32_t stamp_ = 0;
};

std::vector<std::uint8_t> robot_mask(const OccupancyGrid& grid, const std::vector<Coord>& robots) {
  std::vector<std::uint8_t> mask(grid.cell_count(), 0);
  for (const Coord& c : robots) {
    if (c.row < 0 || c.col < 0 || c.row >= grid.height() || c.col >= grid.width()) {
      throw ContractViolation("robot outside the grid");
    }
    const auto i = static_cast<std::size_t>(c.row) * grid.width() + c.col;
    if (!grid[i].is_free()) throw ContractViolation("robot on a non-free cell");
    if (is_edge(grid, c.row, c.col)) throw ContractViolation("robot on the border ring");
    mask[i] = 1;
  }
  return mask;
}

// Free interior cells lying in a component that holds both a free border cell and a target.
std::vector<std::size_t> relevant_cells(const OccupancyGrid& g) {
  const int w = g.width();
  const int h = g.height();
  std::vector<std::int32_t> comp(g.cell_count(), -1);
  std::vector<bool> has_border;
  std::vector<bool> has_target;
  std::vector<std::size_t> stack;
  for (std::size_t s = 0; s < g.cell_count(); ++s) {
    if (comp[s] >= 0 || g[s].is_obstacle()) continue;
    const auto id = static_cast<std::int32_t>(has_border.size());
    has_border.push_back(false);
    has_target.push_back(false);
    comp[s] = id;
    stack.assign(1, s);
    while (!stack.empty()) {
      const std::size_t i = stack.back();
      stack.pop_back();
      const int r = static_cast<int>(i) / w;
      const int c = static_cast<int>(i) % w;
      if (g[i].is_target()) has_target.back() = true;
      if (g[i].is_free() && is_edge(g, r, c)) has_border.back() = true;
      for (int d = 0; d < 4; ++d) {
        const int nr = r + kDr[d];
        const int nc = c + kDc[d];
        if (nr < 0 || nc < 0 || nr >= h || nc >= w) continue;
        const auto j = static_cast<std::size_t>(nr) * w + nc;
        if (comp[j] >= 0 || g[j].is_obstacle()) continue;
        comp[j] = id;
        stack.push_back(j);
      }
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < g.cell_count(); ++i) {
    if (!g[i].is_free() || comp[i] < 0) continue;
    const auto id = static_cast<std::size_t>(comp[i]);
    const int r = static_cast<int>(i) / w;
    const int c = static_cast<int>(i) % w;
    if (!is_edge(g, r, c) && has_border[id] && has_target[id]) out.push_back(i);
  }
  return out;
}

}  // namespace

bool verify_separation(const OccupancyGrid& grid, const std::vector<Coord>& robots, const std::vector<int>& ignored) {
  Flood flood(grid, ignored);
  return flood.run(robot_mask(grid, robots), false) < 0;
}

std::optional<std::vector<Coord>> find_leak(const OccupancyGrid& grid, const std::vector<Coord>& robots,
                                            const std::vector<int>& ignored) {
  Flood flood(grid, ignored);
  const std::int64_t hit = flood.run(robot_mask(grid, robots), true);
  if (hit < 0) return std::nullopt;
  return flood.path_to(hit);
}

std::optional<int> brute_force_min_cut(const OccupancyGrid& grid, int k_max) {
  Flood flood(grid);
  std::vector<std::uint8_t> blocked(grid.cell_count(), 0);
  if (flood.run(blocked, false) < 0) return 0;
  const std::vector<std::size_t> cand = relevant_cells(grid);
  const int n = static_cast<int>(cand.size());
  for (int k = 1; k <= std::min(k_max, n); ++k) {
    // Lexicographic k-combinations of candidate positions.
    std::vector<int> pick(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
    while (true) {
      for (int i : pick) blocked[cand[static_cast<std::size_t>(i)]] = 1;
      const bool separated = flood.run(blocked, false) < 0;
      for (int i : pick) blocked[cand[static_cast<std::size_t>(i)]] = 0;
      if (separated) return k;
      int i = k - 1;
      while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i) --i;
      if (i < 0) break;
      ++pick[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return std::nullopt;
}

}  // namespace cordon::oracle
