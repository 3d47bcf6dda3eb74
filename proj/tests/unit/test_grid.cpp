#include <gtest/gtest.h>

#include <algorithm>
#include <queue>
#include <random>
#include <set>

#include "cordon/errors.hpp"
#include "cordon/generate.hpp"
#include "cordon/grid.hpp"
#include "cordon/rng.hpp"
#include "support/grids.hpp"

namespace cordon {
namespace {

TEST(Neighbors, CornerEdgeInterior) {
  OccupancyGrid g(10, 10);
  EXPECT_EQ(neighbors(g, {0, 0}).size(), 2u);
  EXPECT_EQ(neighbors(g, {0, 5}).size(), 3u);
  EXPECT_EQ(neighbors(g, {5, 5}).size(), 4u);
  EXPECT_EQ(neighbors(g, {9, 9}).size(), 2u);
}

TEST(Neighbors, AreFourConnectedAndIgnoreState) {
  OccupancyGrid g(5, 5);
  g.set({1, 2}, CellState::obstacle());
  g.set({2, 1}, CellState::target(0));
  const auto nb = neighbors(g, {2, 2});
  std::set<Coord> got(nb.begin(), nb.end());
  EXPECT_EQ(got, (std::set<Coord>{{1, 2}, {3, 2}, {2, 1}, {2, 3}}));
}

TEST(Neighbors, OutOfBoundsIsContractViolation) {
  OccupancyGrid g(4, 4);
  EXPECT_THROW(neighbors(g, {4, 0}), ContractViolation);
  EXPECT_THROW(neighbors(g, {0, -1}), ContractViolation);
}

TEST(OccupancyGrid, RejectsTooSmall) {
  EXPECT_THROW(OccupancyGrid(2, 5), InvalidSpec);
  EXPECT_THROW(OccupancyGrid(5, 2), InvalidSpec);
  EXPECT_NO_THROW(OccupancyGrid(3, 3));
}

TEST(OccupancyGrid, CellCountAndTargets) {
  OccupancyGrid g(7, 4);
  EXPECT_EQ(g.cell_count(), 28u);
  EXPECT_EQ(g.target_count(), 0);
  g.set({1, 1}, CellState::target(1));
  g.set({2, 2}, CellState::target(0));
  g.set({2, 3}, CellState::target(1));
  EXPECT_EQ(g.target_count(), 2);
  EXPECT_EQ(g.target_cells(1), (std::vector<Coord>{{1, 1}, {2, 3}}));
  EXPECT_NO_THROW(g.validate());
}

TEST(OccupancyGrid, ValidateRejectsIdGaps) {
  OccupancyGrid g(5, 5);
  g.set({2, 2}, CellState::target(1));
  EXPECT_THROW(g.validate(), InvalidSpec);
}

TEST(OccupancyGrid, SetOutOfBoundsThrows) {
  OccupancyGrid g(5, 5);
  EXPECT_THROW(g.set({5, 5}, CellState::obstacle()), ContractViolation);
  EXPECT_THROW((void)g.at({-1, 0}), ContractViolation);
}

GenSpec open_spec(int w, int h, int obstacles, std::uint64_t seed) {
  GenSpec s;
  s.kind = EnvironmentKind::Open;
  s.width = w;
  s.height = h;
  s.obstacles = obstacles;
  s.seed = seed;
  return s;
}

GenSpec closed_spec(int w, int h, int blocked, int block, std::uint64_t seed) {
  GenSpec s;
  s.kind = EnvironmentKind::Closed;
  s.width = w;
  s.height = h;
  s.obstacles = blocked;
  s.block_size = block;
  s.seed = seed;
  return s;
}

TEST(GenerateOpen, ZeroObstaclesIsAllFree) {
  const auto g = generate_open(open_spec(100, 100, 0, 7));
  EXPECT_EQ(g.count_free(), 10000u);
}

TEST(GenerateOpen, MoreRectanglesLeaveLessFreeSpace) {
  const auto sparse = generate_open(open_spec(100, 100, 10, 1));
  const auto dense = generate_open(open_spec(100, 100, 235, 1));
  EXPECT_LT(dense.count_free(), sparse.count_free());
}

TEST(GenerateOpen, DeterministicUnderSeed) {
  EXPECT_EQ(generate_open(open_spec(100, 100, 10, 42)), generate_open(open_spec(100, 100, 10, 42)));
  EXPECT_NE(generate_open(open_spec(100, 100, 10, 42)), generate_open(open_spec(100, 100, 10, 43)));
}

// Every rectangle is at least 2x2, so each obstacle cell sits in some all-obstacle 2x2 square,
// and at most obstacles * 10 * 10 cells can be covered.
TEST(GenerateOpen, ObstacleCellsComeFromRectangles) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto g = generate_open(open_spec(40, 30, 12, seed));
    EXPECT_LE(g.count_obstacles(), 12u * 100u);
    auto obst = [&](int r, int c) { return r >= 0 && c >= 0 && r < 30 && c < 40 && g.at({r, c}).is_obstacle(); };
    for (int r = 0; r < 30; ++r) {
      for (int c = 0; c < 40; ++c) {
        if (!obst(r, c)) continue;
        bool in_square = false;
        for (int dr = -1; dr <= 0; ++dr) {
          for (int dc = -1; dc <= 0; ++dc) {
            in_square = in_square || (obst(r + dr, c + dc) && obst(r + dr + 1, c + dc) && obst(r + dr, c + dc + 1) &&
                                      obst(r + dr + 1, c + dc + 1));
          }
        }
        ASSERT_TRUE(in_square) << "seed " << seed << " cell " << r << "," << c;
      }
    }
  }
}

TEST(GenerateOpen, RejectsBadSpec) {
  EXPECT_THROW(generate_open(open_spec(2, 10, 0, 1)), InvalidSpec);
  EXPECT_THROW(generate_open(open_spec(10, 10, -1, 1)), InvalidSpec);
  EXPECT_THROW(generate_open(closed_spec(10, 10, 0, 3, 1)), ContractViolation);
}

// Independent street layout for a side: streets at multiples of block+1 and the last index.
std::vector<bool> streets(int extent, int block) {
  std::vector<bool> s(static_cast<std::size_t>(extent), false);
  for (int i = 0; i < extent; ++i) s[static_cast<std::size_t>(i)] = i % (block + 1) == 0 || i == extent - 1;
  return s;
}

TEST(GenerateClosed, NothingBlockedGivesConnectedLattice) {
  const auto g = generate_closed(closed_spec(100, 100, 0, 3, 1));
  const auto rs = streets(100, 3);
  std::size_t street_cells = 0;
  for (int r = 0; r < 100; ++r) {
    for (int c = 0; c < 100; ++c) {
      const bool street = rs[static_cast<std::size_t>(r)] || rs[static_cast<std::size_t>(c)];
      EXPECT_EQ(g.at({r, c}).is_free(), street);
      street_cells += street;
    }
  }
  // Flood from (0,0) reaches every street cell.
  std::vector<bool> seen(g.cell_count(), false);
  std::queue<Coord> q;
  q.push({0, 0});
  seen[0] = true;
  std::size_t reached = 0;
  while (!q.empty()) {
    const Coord c = q.front();
    q.pop();
    ++reached;
    for (Coord n : neighbors(g, c)) {
      if (g.at(n).is_free() && !seen[g.index(n)]) {
        seen[g.index(n)] = true;
        q.push(n);
      }
    }
  }
  EXPECT_EQ(reached, street_cells);
}

TEST(GenerateClosed, BlockedCrossingsAreCapped) {
  const auto spec = closed_spec(100, 100, 1510, 3, 3);
  const auto g = generate_closed(spec);
  const auto rs = streets(100, 3);
  const auto lines = static_cast<std::size_t>(std::count(rs.begin(), rs.end(), true));
  ASSERT_EQ(lines, 26u);
  std::size_t blocked = 0;
  for (int r = 0; r < 100; ++r) {
    for (int c = 0; c < 100; ++c) {
      if (rs[static_cast<std::size_t>(r)] && rs[static_cast<std::size_t>(c)] && g.at({r, c}).is_obstacle()) ++blocked;
    }
  }
  EXPECT_EQ(blocked, std::min<std::size_t>(1510, lines * lines));
  EXPECT_EQ(closed_intersection_count(spec), lines * lines);
  EXPECT_TRUE(closed_is_saturated(spec));
}

TEST(GenerateClosed, OnlyBlocksAndSampledCrossingsAreObstacles) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto g = generate_closed(closed_spec(37, 29, 40, 4, seed));
    const auto rs = streets(29, 4);
    const auto cs = streets(37, 4);
    std::size_t blocked = 0;
    for (int r = 0; r < 29; ++r) {
      for (int c = 0; c < 37; ++c) {
        const bool sr = rs[static_cast<std::size_t>(r)];
        const bool sc = cs[static_cast<std::size_t>(c)];
        if (!sr && !sc) {
          EXPECT_TRUE(g.at({r, c}).is_obstacle());
        } else if (sr != sc) {
          EXPECT_TRUE(g.at({r, c}).is_free()) << "street segment cell blocked";
        } else {
          blocked += g.at({r, c}).is_obstacle();
        }
      }
    }
    EXPECT_EQ(blocked, 40u);
  }
}

TEST(GenerateClosed, Deterministic) {
  EXPECT_EQ(generate_closed(closed_spec(100, 100, 1510, 3, 3)), generate_closed(closed_spec(100, 100, 1510, 3, 3)));
  EXPECT_EQ(generate_closed(closed_spec(60, 60, 50, 3, 9)), generate_closed(closed_spec(60, 60, 50, 3, 9)));
  EXPECT_NE(generate_closed(closed_spec(60, 60, 50, 3, 9)), generate_closed(closed_spec(60, 60, 50, 3, 10)));
}

TEST(PlaceTargets, SingleTargetIsInterior) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(seed);
    const auto g = place_targets(OccupancyGrid(10, 10), 1, rng);
    const auto cells = g.all_target_cells();
    ASSERT_EQ(cells.size(), 1u);
    EXPECT_FALSE(g.on_border(cells[0]));
  }
}

TEST(PlaceTargets, PigeonholeFails) {
  // 7x3 interior is one row of five cells.
  Rng rng(1);
  EXPECT_THROW(place_targets(OccupancyGrid(7, 3), 6, rng), GenerationFailed);
  Rng again(1);
  EXPECT_EQ(place_targets(OccupancyGrid(7, 3), 5, again).target_count(), 5);
}

TEST(PlaceTargets, DistinctAndReproducible) {
  Rng a(9), b(9);
  const auto g1 = place_targets(OccupancyGrid(100, 100), 20, a);
  const auto g2 = place_targets(OccupancyGrid(100, 100), 20, b);
  EXPECT_EQ(g1, g2);
  const auto cells = g1.all_target_cells();
  EXPECT_EQ(std::set<Coord>(cells.begin(), cells.end()).size(), 20u);
  for (int id = 0; id < 20; ++id) EXPECT_EQ(g1.target_cells(id).size(), 1u);
}

TEST(PlaceTargets, NeverOnObstacleOrBorder) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    auto spec = open_spec(30, 30, 25, seed);
    spec.targets_min = 10;
    spec.targets_max = 20;
    const auto env = generate_environment(spec);
    EXPECT_GE(env.grid.target_count(), 10);
    EXPECT_LE(env.grid.target_count(), 20);
    for (Coord c : env.grid.all_target_cells()) EXPECT_FALSE(env.grid.on_border(c));
    EXPECT_NO_THROW(env.grid.validate());
  }
}

TEST(PlaceTargets, RefusesGridWithTargets) {
  Rng rng(1);
  auto g = testing::empty_with_targets(6, 6, {{2, 2}});
  EXPECT_THROW(place_targets(g, 1, rng), ContractViolation);
}

TEST(Rng, EngineSequenceIsStandard) {
  // The standard fixes the 10000th output of a default-seeded mt19937_64.
  std::mt19937_64 reference;
  reference.discard(9999);
  EXPECT_EQ(reference(), 9981545732273789042ULL);
  Rng rng(5489u);
  for (int i = 0; i < 9999; ++i) rng.next();
  EXPECT_EQ(rng.next(), 9981545732273789042ULL);
}

TEST(Rng, BoundedDrawsStayInRange) {
  Rng rng(3);
  std::vector<int> hits(7, 0);
  for (int i = 0; i < 7000; ++i) {
    const auto v = rng.uniform(-3, 3);
    ASSERT_GE(v, -3);
    ASSERT_LE(v, 3);
    ++hits[static_cast<std::size_t>(v + 3)];
  }
  for (int h : hits) EXPECT_GT(h, 800);
  for (int i = 0; i < 1000; ++i) EXPECT_LT(rng.below(13), 13u);
  EXPECT_EQ(rng.uniform(4, 4), 4);
}

TEST(Rng, DerivedSeedsDiffer) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t stream = 0; stream < 100; ++stream) {
    for (std::uint64_t attempt = 0; attempt < 5; ++attempt) seen.insert(derive_seed(1, stream, attempt));
  }
  EXPECT_EQ(seen.size(), 500u);
  EXPECT_EQ(derive_seed(1, 2, 3), splitmix64(splitmix64(1 + 2) + 3));
}

}  // namespace
}  // namespace cordon
