#include <gtest/gtest.h>

#include <set>

#include "cordon/errors.hpp"
#include "cordon/flownet.hpp"
#include "cordon/generate.hpp"
#include "cordon/map_io.hpp"
#include "cordon/maxflow.hpp"
#include "cordon/oracle.hpp"
#include "cordon/rng.hpp"
#include "support/grids.hpp"
#include "support/reference_flow.hpp"

namespace cordon {
namespace {

FlowNetwork two_nodes(Capacity c) {
  FlowNetwork net(1000);
  const NodeId s = net.add_node({NodeRole::SuperSource});
  const NodeId t = net.add_node({NodeRole::SuperSink});
  net.add_arc(s, t, c);
  net.set_source(s);
  net.set_sink(t);
  return net;
}

TEST(MaxFlow, TwoNodes) {
  const FlowNetwork net = two_nodes(5);
  const FlowState st = max_flow(net);
  EXPECT_EQ(st.value, 5);
  EXPECT_EQ(st.flow, std::vector<Capacity>{5});
  const CutResult cut = extract_min_cut(net, st);
  EXPECT_EQ(cut.value, 5);
  EXPECT_TRUE(cut.feasible);
  EXPECT_TRUE(cut.cells.empty());
}

TEST(MaxFlow, MalformedNetworks) {
  FlowNetwork net(10);
  const NodeId s = net.add_node({});
  net.set_source(s);
  EXPECT_THROW(max_flow(net), ContractViolation);
  net.set_sink(s);
  EXPECT_THROW(max_flow(net), ContractViolation);
  EXPECT_THROW(net.add_arc(s, NodeId{7}, 1), ContractViolation);
}

// Capacity, conservation and excess bookkeeping of a finished flow.
void expect_valid_flow(const FlowNetwork& net, const FlowState& st) {
  std::vector<Capacity> balance(net.node_count(), 0);
  for (std::size_t i = 0; i < net.arcs().size(); ++i) {
    const Arc& a = net.arcs()[i];
    ASSERT_GE(st.flow[i], 0);
    ASSERT_LE(st.flow[i], a.capacity);
    balance[static_cast<std::size_t>(a.tail.value)] -= st.flow[i];
    balance[static_cast<std::size_t>(a.head.value)] += st.flow[i];
  }
  for (std::size_t v = 0; v < net.node_count(); ++v) {
    if (static_cast<std::int32_t>(v) == net.source().value) continue;
    if (static_cast<std::int32_t>(v) == net.sink().value) {
      EXPECT_EQ(balance[v], st.value);
      continue;
    }
    ASSERT_EQ(balance[v], 0) << "node " << v;
    ASSERT_EQ(st.excess[v], 0) << "node " << v;
  }
}

TEST(MaxFlow, MatchesReferenceOnRandomNetworks) {
  for (std::uint64_t seed = 1; seed <= 400; ++seed) {
    Rng rng(seed);
    const int n = static_cast<int>(rng.uniform(2, 40));
    const int m = static_cast<int>(rng.uniform(0, n * 4));
    FlowNetwork net(1'000'000);
    for (int i = 0; i < n; ++i) net.add_node({});
    std::vector<testing::RefArc> ref;
    for (int i = 0; i < m; ++i) {
      const int u = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
      const int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
      if (u == v) continue;
      const Capacity c = rng.uniform(0, 12);
      net.add_arc({u}, {v}, c);
      ref.push_back({u, v, c});
    }
    net.set_source({0});
    net.set_sink({n - 1});
    const FlowState st = max_flow(net);
    ASSERT_EQ(st.value, testing::reference_max_flow(n, ref, 0, n - 1)) << "seed " << seed;
    expect_valid_flow(net, st);
    const CutResult cut = extract_min_cut(net, st);
    EXPECT_EQ(cut.value, st.value);
    EXPECT_TRUE(cut.source_side[0]);
    EXPECT_FALSE(cut.source_side[static_cast<std::size_t>(n - 1)]);
  }
}

TEST(MaxFlow, GridNetworksMatchReference) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    GenSpec spec;
    spec.kind = seed % 3 ? EnvironmentKind::Open : EnvironmentKind::Closed;
    spec.width = 30;
    spec.height = 25;
    spec.obstacles = static_cast<int>(seed % 20) * 2;
    spec.targets_min = 1;
    spec.targets_max = 6;
    spec.seed = seed;
    const auto g = generate_environment(spec).grid;
    const FlowNetwork net = attach_merged_sink(build_base_network(g), g);
    std::vector<testing::RefArc> ref;
    for (const Arc& a : net.arcs()) ref.push_back({a.tail.value, a.head.value, a.capacity});
    const FlowState st = max_flow(net);
    EXPECT_EQ(st.value, testing::reference_max_flow(static_cast<int>(net.node_count()), ref, net.source().value,
                                                     net.sink().value));
    expect_valid_flow(net, st);
  }
}

TEST(MinCut, EmptyGridCenterTargetNeedsFour) {
  const auto g = testing::empty_with_targets(10, 10, {{5, 5}});
  const FlowNetwork net = attach_merged_sink(build_base_network(g), g);
  const FlowState st = max_flow(net);
  EXPECT_EQ(st.value, 4);
  const CutResult cut = extract_min_cut(net, st);
  EXPECT_TRUE(cut.feasible);
  EXPECT_EQ(cut.cells.size(), 4u);
  EXPECT_TRUE(oracle::verify_separation(g, cut.cells));
  EXPECT_EQ(oracle::brute_force_min_cut(g, 4), 4);
}

TEST(MinCut, PocketMouthIsTheCut) {
  const auto g = testing::grid_of({
      "........",
      ".####...",
      ".#..#...",
      ".#.A#...",
      ".##.#...",
      "........",
  });
  const CutResult cut = min_vertex_cut(g, TargetSelection::single(0));
  EXPECT_TRUE(cut.feasible);
  EXPECT_EQ(cut.value, 1);
  EXPECT_EQ(cut.cells, (std::vector<Coord>{{4, 3}}));
  EXPECT_EQ(oracle::brute_force_min_cut(g, 4), 1);
}

TEST(MinCut, BorderAdjacentTargetIsInfeasible) {
  const auto g = testing::grid_of({".....", ".A...", ".....", "....."});
  const CutResult cut = min_vertex_cut(g, TargetSelection::single(0));
  EXPECT_FALSE(cut.feasible);
  EXPECT_TRUE(cut.cells.empty());
  EXPECT_GE(cut.value, static_cast<Capacity>(g.cell_count()) + 1);
}

TEST(MinCut, SealedGridNeedsNothing) {
  const auto g = testing::grid_of({"######", "#....#", "#.AB.#", "#....#", "######"});
  for (auto sel : {TargetSelection::all(), TargetSelection::single(0), TargetSelection::single(1)}) {
    const CutResult cut = min_vertex_cut(g, sel);
    EXPECT_TRUE(cut.feasible);
    EXPECT_EQ(cut.value, 0);
    EXPECT_TRUE(cut.cells.empty());
  }
}

TEST(MinCut, GoldenMap) {
  const auto g = load_map(testing::golden_map_path());
  ASSERT_EQ(g.target_count(), 3);
  for (int id = 0; id < 3; ++id) EXPECT_EQ(min_vertex_cut(g, TargetSelection::single(id)).value, 1);
  const CutResult all = min_vertex_cut(g, TargetSelection::all());
  EXPECT_EQ(all.value, 2);
  EXPECT_EQ(all.cells.size(), 2u);
}

TEST(MinCut, SourceSideCutIsDeterministic) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    GenSpec spec;
    spec.width = 40;
    spec.height = 40;
    spec.obstacles = 40;
    spec.targets_min = 10;
    spec.targets_max = 10;
    spec.seed = seed;
    const auto g = generate_environment(spec).grid;
    const CutResult a = min_vertex_cut(g, TargetSelection::all());
    const CutResult b = min_vertex_cut(g, TargetSelection::all());
    EXPECT_EQ(a.cells, b.cells);
    EXPECT_EQ(a.source_side, b.source_side);
  }
}

// The source-side cut is the one closest to the source: every cut cell is reachable from
// the border without crossing another cut cell.
TEST(MinCut, CutCellsFaceTheBorder) {
  const auto g = testing::grid_of({
      "..........",
      ".########.",
      ".#......#.",
      ".#.####.#.",
      ".#.#A.#.#.",
      ".#.#..#.#.",
      ".#.##.#.#.",
      ".#......#.",
      ".####.###.",
      "..........",
  });
  // Two nested single-cell mouths: (8,5) outside and (6,5) inside.
  const CutResult cut = min_vertex_cut(g, TargetSelection::single(0));
  EXPECT_EQ(cut.value, 1);
  EXPECT_EQ(cut.cells, (std::vector<Coord>{{8, 5}}));
}

TEST(MinCut, RandomGridsAgreeWithBruteForce) {
  int checked = 0;
  for (std::uint64_t seed = 1; checked < 25 && seed < 400; ++seed) {
    GenSpec spec;
    spec.width = 20;
    spec.height = 20;
    spec.obstacles = 30;
    spec.rect_max = 6;
    spec.seed = seed;
    const auto g = generate_environment(spec).grid;
    const CutResult cut = min_vertex_cut(g, TargetSelection::single(0));
    if (!cut.feasible || cut.value > 3) continue;
    EXPECT_EQ(oracle::brute_force_min_cut(g, 3), static_cast<int>(cut.value)) << "seed " << seed;
    ++checked;
  }
  EXPECT_EQ(checked, 25);
}

TEST(MinCut, NonMaximalFlowIsRejected) {
  if (!checked_build()) GTEST_SKIP() << "augmenting-path check only in checked builds";
  const FlowNetwork net = two_nodes(5);
  FlowState zero;
  zero.flow.assign(1, 0);
  zero.excess.assign(2, 0);
  EXPECT_THROW(extract_min_cut(net, zero), ContractViolation);
}

TEST(MinCut, DualityCountersTrackSolves) {
  if (!checked_build()) GTEST_SKIP();
  auto& c = duality_counters();
  const auto before = c.checks.load();
  const auto g = testing::empty_with_targets(8, 8, {{3, 3}, {5, 5}});
  (void)min_vertex_cut(g, TargetSelection::all());
  (void)min_vertex_cut(g, TargetSelection::single(1));
  EXPECT_EQ(c.checks.load(), before + 2);
  EXPECT_EQ(c.violations.load(), 0u);
}

}  // namespace
}  // namespace cordon
