#include <gtest/gtest.h>

#include <cstdlib>

#include "cordon/errors.hpp"
#include "cordon/map_io.hpp"
#include "cordon/oracle.hpp"
#include "cordon/planner.hpp"
#include "support/grids.hpp"

namespace cordon {
namespace {

TEST(VerifySeparation, FourNeighboursSeal) {
  const auto g = testing::empty_with_targets(9, 9, {{4, 4}});
  EXPECT_TRUE(oracle::verify_separation(g, {{3, 4}, {5, 4}, {4, 3}, {4, 5}}));
  EXPECT_FALSE(oracle::verify_separation(g, {{3, 4}, {5, 4}, {4, 3}}));
  EXPECT_FALSE(oracle::verify_separation(g, {}));
}

TEST(VerifySeparation, GoldenHolisticPlacement) {
  const auto g = load_map(testing::golden_map_path());
  EXPECT_TRUE(oracle::verify_separation(g, solve_holistic(g).robots));
}

TEST(VerifySeparation, NoTargetsMeansSeparated) {
  EXPECT_TRUE(oracle::verify_separation(OccupancyGrid(5, 5), {}));
}

TEST(VerifySeparation, RobotContracts) {
  const auto g = testing::grid_of({".....", ".#A..", "....."});
  EXPECT_THROW(oracle::verify_separation(g, {{1, 1}}), ContractViolation);  // obstacle
  EXPECT_THROW(oracle::verify_separation(g, {{1, 2}}), ContractViolation);  // target
  EXPECT_THROW(oracle::verify_separation(g, {{0, 2}}), ContractViolation);  // border ring
  EXPECT_THROW(oracle::verify_separation(g, {{7, 7}}), ContractViolation);  // outside
}

TEST(VerifySeparation, IgnoredTargetsMayLeak) {
  const auto g = testing::empty_with_targets(9, 9, {{4, 4}, {1, 1}});
  const std::vector<Coord> ring{{3, 4}, {5, 4}, {4, 3}, {4, 5}};
  EXPECT_FALSE(oracle::verify_separation(g, ring));
  EXPECT_TRUE(oracle::verify_separation(g, ring, {1}));
}

TEST(FindLeak, WitnessIsABorderToTargetWalk) {
  const auto g = testing::grid_of({
      "..........",
      ".######.#.",
      ".#....#.#.",
      ".#.A..#.#.",
      ".#....#...",
      ".###.##.#.",
      "..........",
  });
  const std::vector<Coord> robots{{5, 4}};
  EXPECT_FALSE(oracle::find_leak(g, robots).has_value());
  const auto leak = oracle::find_leak(g, {});
  ASSERT_TRUE(leak.has_value());
  ASSERT_GE(leak->size(), 2u);
  EXPECT_TRUE(g.on_border(leak->front()));
  EXPECT_TRUE(g.at(leak->front()).is_free());
  EXPECT_TRUE(g.at(leak->back()).is_target());
  for (std::size_t i = 1; i < leak->size(); ++i) {
    const Coord a = (*leak)[i - 1];
    const Coord b = (*leak)[i];
    EXPECT_EQ(std::abs(a.row - b.row) + std::abs(a.col - b.col), 1);
    EXPECT_FALSE(g.at(b).is_obstacle());
  }
}

TEST(BruteForce, PocketMouth) {
  const auto g = testing::grid_of({
      "........",
      ".####...",
      ".#..#...",
      ".#.A#...",
      ".##.#...",
      "........",
  });
  EXPECT_EQ(oracle::brute_force_min_cut(g, 4), 1);
}

TEST(BruteForce, EmptyGridCenter) {
  const auto g = testing::empty_with_targets(8, 8, {{4, 4}});
  EXPECT_EQ(oracle::brute_force_min_cut(g, 4), 4);
  EXPECT_EQ(oracle::brute_force_min_cut(g, 3), std::nullopt);
}

TEST(BruteForce, GoldenMap) {
  const auto g = load_map(testing::golden_map_path());
  EXPECT_EQ(oracle::brute_force_min_cut(g, 4), 2);
}

TEST(BruteForce, SealedAndExposed) {
  const auto sealed = testing::grid_of({"#####", "#...#", "#.A.#", "#...#", "#####"});
  EXPECT_EQ(oracle::brute_force_min_cut(sealed, 4), 0);
  const auto exposed = testing::grid_of({".....", ".A...", ".....", "....."});
  EXPECT_EQ(oracle::brute_force_min_cut(exposed, 4), std::nullopt);
}

}  // namespace
}  // namespace cordon
