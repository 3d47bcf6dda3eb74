#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "cordon/grid.hpp"

namespace cordon {

using Capacity = std::int64_t;

struct NodeId {
  std::int32_t value = -1;
  bool valid() const { return value >= 0; }
  auto operator<=>(const NodeId&) const = default;
};

enum class NodeRole : std::uint8_t { CellIn, CellOut, SuperSource, SuperSink, TargetSink, Auxiliary };
enum class ArcKind : std::uint8_t { Internal, Adjacency, SourceLink, SinkLink, Other };

struct NodeInfo {
  NodeRole role = NodeRole::Auxiliary;
  // Grid cell index for CellIn / CellOut, -1 otherwise.
  std::int32_t cell = -1;
  // Target id for TargetSink, -1 otherwise.
  std::int32_t target = -1;
};

struct Arc {
  NodeId tail;
  NodeId head;
  Capacity capacity = 0;
  ArcKind kind = ArcKind::Other;
};

// Directed network with integer capacities. Capacities >= infinite() are treated as
// uncuttable. Cells of a grid are split into an in-half and an out-half joined by an
// Internal arc, so a minimum edge cut over Internal arcs is a minimum vertex cut.
class FlowNetwork {
 public:
  explicit FlowNetwork(Capacity infinite = 1) : infinite_(infinite) {}

  NodeId add_node(NodeInfo info);
  void add_arc(NodeId tail, NodeId head, Capacity capacity, ArcKind kind = ArcKind::Other);

  std::size_t node_count() const { return nodes_.size(); }
  const std::vector<NodeInfo>& nodes() const { return nodes_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const NodeInfo& info(NodeId n) const { return nodes_.at(static_cast<std::size_t>(n.value)); }

  Capacity infinite() const { return infinite_; }
  bool is_infinite(Capacity c) const { return c >= infinite_; }

  NodeId source() const { return source_; }
  NodeId sink() const { return sink_; }
  void set_source(NodeId n);
  void set_sink(NodeId n);

  // True when the source has no outgoing arcs: nothing can enter, every placement is feasible.
  bool source_degenerate() const;

  // Grid bookkeeping, set by build_base_network. in_half(cell) is invalid for obstacle cells.
  int grid_width() const { return grid_width_; }
  NodeId in_half(std::size_t cell) const;
  NodeId out_half(std::size_t cell) const;
  std::optional<Coord> coord_of(NodeId n) const;

 private:
  friend FlowNetwork build_base_network(const OccupancyGrid& grid);

  Capacity infinite_;
  std::vector<NodeInfo> nodes_;
  std::vector<Arc> arcs_;
  NodeId source_;
  NodeId sink_;
  int grid_width_ = 0;
  std::vector<std::int32_t> in_half_of_cell_;
};

// |cells| + 1: strictly larger than any cut made only of free interior cells.
Capacity infinite_capacity(const OccupancyGrid& grid);

// Traversability dual of the grid. Every non-obstacle cell is split; the Internal arc has
// capacity 1 for Free interior cells and infinite() for border and target cells. Adjacent
// cells are joined out->in both ways with infinite capacity. A SuperSource feeds the in-half
// of every Free border cell. No sink yet.
FlowNetwork build_base_network(const OccupancyGrid& grid);

// Fresh TargetSink fed by the out-half of every cell of `target_id`. Throws ContractViolation
// for an unknown id or a network that already has a sink.
FlowNetwork attach_single_sink(FlowNetwork net, const OccupancyGrid& grid, int target_id);

// One SuperSink fed by every target cell. Throws ContractViolation when m = 0.
FlowNetwork attach_merged_sink(FlowNetwork net, const OccupancyGrid& grid);

// Same, but only targets with include[id] feed the sink; the others stay ordinary
// (uncuttable) cells. `include` must have m entries, at least one set.
FlowNetwork attach_merged_sink(FlowNetwork net, const OccupancyGrid& grid, const std::vector<bool>& include);

// Debug edge list: '#'-prefixed legend (node roles, cells, source, sink, infinite value),
// then one "tail head capacity" line per arc.
void dump_network(std::ostream& os, const FlowNetwork& net);

}  // namespace cordon
