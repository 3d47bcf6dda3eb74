#pragma once

#include <atomic>
#include <cstdint>
#include <string_view>
#include <vector>

#include "cordon/flownet.hpp"
#include "cordon/grid.hpp"

namespace cordon {

// Identifies the max-flow variant in trial records so timings stay comparable.
inline constexpr std::string_view kMaxFlowVariant = "hlpr-gap-global";

struct FlowStats {
  std::uint64_t pushes = 0;
  std::uint64_t relabels = 0;
  std::uint64_t gaps = 0;
  std::uint64_t global_relabels = 0;
  std::uint64_t discharges = 0;
};

// Result of max_flow: per-arc flow (indexed like FlowNetwork::arcs()), per-node excess and
// final height label. At termination excess is zero everywhere except source and sink.
struct FlowState {
  Capacity value = 0;
  std::vector<Capacity> flow;
  std::vector<Capacity> excess;
  std::vector<std::int32_t> height;
  FlowStats stats;
};

// Highest-label preflow-push with the gap heuristic and a global relabel (exact distance
// labels by reverse BFS from sink, then from source) every node_count() discharges.
// Throws ContractViolation when source or sink is missing or they coincide.
FlowState max_flow(const FlowNetwork& net);

struct CutResult {
  // False when the minimum cut has to sever an infinite arc: no set of free interior
  // cells separates the source from the sink.
  bool feasible = true;
  // Cut capacity. Equals the flow value; only meaningful as a robot count when feasible.
  Capacity value = 0;
  // Cells whose Internal arc is cut, ascending by (row, col).
  std::vector<Coord> cells;
  // Nodes reachable from the source in the residual network.
  std::vector<bool> source_side;
};

// Source side = residual reachability from the source (the cut closest to the source).
// In checked builds verifies the flow is maximal and that the cut capacity equals the flow
// value; violations throw ContractViolation.
CutResult extract_min_cut(const FlowNetwork& net, const FlowState& state);

class TargetSelection {
 public:
  static TargetSelection all() { return TargetSelection(-1); }
  static TargetSelection single(int id) { return TargetSelection(id); }
  bool is_all() const { return id_ < 0; }
  int id() const { return id_; }

 private:
  explicit TargetSelection(int id) : id_(id) {}
  int id_;
};

// build_base_network -> attach sink(s) -> max_flow -> extract_min_cut.
CutResult min_vertex_cut(const OccupancyGrid& grid, TargetSelection targets);

// Solves performed through extract_min_cut and how many broke max-flow/min-cut duality.
// Process-wide; only updated in checked builds.
struct DualityCounters {
  std::atomic<std::uint64_t> checks{0};
  std::atomic<std::uint64_t> violations{0};
};
DualityCounters& duality_counters();
bool checked_build();

}  // namespace cordon
