#include "cordon/flownet.hpp"

#include <algorithm>
#include <ostream>

#include "cordon/errors.hpp"

namespace cordon {

NodeId FlowNetwork::add_node(NodeInfo info) {
  nodes_.push_back(info);
  return NodeId{static_cast<std::int32_t>(nodes_.size() - 1)};
}

void FlowNetwork::add_arc(NodeId tail, NodeId head, Capacity capacity, ArcKind kind) {
  const auto n = static_cast<std::int32_t>(nodes_.size());
  if (tail.value < 0 || tail.value >= n || head.value < 0 || head.value >= n) {
    throw ContractViolation("add_arc: node out of range");
  }
  if (capacity < 0) throw ContractViolation("add_arc: negative capacity");
  arcs_.push_back({tail, head, capacity, kind});
}

void FlowNetwork::set_source(NodeId n) {
  if (n.value < 0 || static_cast<std::size_t>(n.value) >= nodes_.size()) throw ContractViolation("set_source: bad node");
  source_ = n;
}

void FlowNetwork::set_sink(NodeId n) {
  if (n.value < 0 || static_cast<std::size_t>(n.value) >= nodes_.size()) throw ContractViolation("set_sink: bad node");
  sink_ = n;
}

bool FlowNetwork::source_degenerate() const {
  for (const Arc& a : arcs_) {
    if (a.tail == source_ && a.capacity > 0) return false;
  }
  return true;
}

NodeId FlowNetwork::in_half(std::size_t cell) const {
  if (cell >= in_half_of_cell_.size()) return {};
  return NodeId{in_half_of_cell_[cell]};
}

NodeId FlowNetwork::out_half(std::size_t cell) const {
  const NodeId in = in_half(cell);
  return in.valid() ? NodeId{in.value + 1} : NodeId{};
}

std::optional<Coord> FlowNetwork::coord_of(NodeId n) const {
  const NodeInfo& ni = info(n);
  if (ni.cell < 0 || grid_width_ <= 0) return std::nullopt;
  return Coord{ni.cell / grid_width_, ni.cell % grid_width_};
}

Capacity infinite_capacity(const OccupancyGrid& grid) { return static_cast<Capacity>(grid.cell_count()) + 1; }

FlowNetwork build_base_network(const OccupancyGrid& grid) {
  FlowNetwork net(infinite_capacity(grid));
  const Capacity inf = net.infinite();
  net.grid_width_ = grid.width();
  net.in_half_of_cell_.assign(grid.cell_count(), -1);

  for (std::size_t i = 0; i < grid.cell_count(); ++i) {
    if (grid[i].is_obstacle()) continue;
    const auto cell = static_cast<std::int32_t>(i);
    const NodeId in = net.add_node({NodeRole::CellIn, cell, -1});
    const NodeId out = net.add_node({NodeRole::CellOut, cell, -1});
    net.in_half_of_cell_[i] = in.value;
    const bool cuttable = grid[i].is_free() && !grid.on_border(grid.coord(i));
    net.add_arc(in, out, cuttable ? 1 : inf, ArcKind::Internal);
  }

  const NodeId source = net.add_node({NodeRole::SuperSource, -1, -1});
  net.set_source(source);

  for (std::size_t i = 0; i < grid.cell_count(); ++i) {
    if (grid[i].is_obstacle()) continue;
    const Coord c = grid.coord(i);
    for (const Coord nb : neighbors(grid, c)) {
      const std::size_t j = grid.index(nb);
      if (grid[j].is_obstacle()) continue;
      net.add_arc(net.out_half(i), net.in_half(j), inf, ArcKind::Adjacency);
    }
    if (grid[i].is_free() && grid.on_border(c)) net.add_arc(source, net.in_half(i), inf, ArcKind::SourceLink);
  }
  return net;
}

FlowNetwork attach_single_sink(FlowNetwork net, const OccupancyGrid& grid, int target_id) {
  if (net.sink().valid()) throw ContractViolation("attach_single_sink: network already has a sink");
  if (target_id < 0 || target_id >= grid.target_count()) throw ContractViolation("attach_single_sink: unknown target id");
  const NodeId sink = net.add_node({NodeRole::TargetSink, -1, target_id});
  net.set_sink(sink);
  for (const Coord c : grid.target_cells(target_id)) {
    net.add_arc(net.out_half(grid.index(c)), sink, net.infinite(), ArcKind::SinkLink);
  }
  return net;
}

FlowNetwork attach_merged_sink(FlowNetwork net, const OccupancyGrid& grid) {
  return attach_merged_sink(std::move(net), grid, std::vector<bool>(static_cast<std::size_t>(grid.target_count()), true));
}

FlowNetwork attach_merged_sink(FlowNetwork net, const OccupancyGrid& grid, const std::vector<bool>& include) {
  if (net.sink().valid()) throw ContractViolation("attach_merged_sink: network already has a sink");
  if (grid.target_count() == 0) throw ContractViolation("attach_merged_sink: grid has no targets");
  if (include.size() != static_cast<std::size_t>(grid.target_count()) ||
      std::find(include.begin(), include.end(), true) == include.end()) {
    throw ContractViolation("attach_merged_sink: target selection is empty or the wrong size");
  }
  const NodeId sink = net.add_node({NodeRole::SuperSink, -1, -1});
  net.set_sink(sink);
  for (const Coord c : grid.all_target_cells()) {
    if (!include[static_cast<std::size_t>(grid.at(c).target_id())]) continue;
    net.add_arc(net.out_half(grid.index(c)), sink, net.infinite(), ArcKind::SinkLink);
  }
  return net;
}

namespace {
const char* role_name(NodeRole r) {
  switch (r) {
    case NodeRole::CellIn: return "in";
    case NodeRole::CellOut: return "out";
    case NodeRole::SuperSource: return "source";
    case NodeRole::SuperSink: return "supersink";
    case NodeRole::TargetSink: return "targetsink";
    case NodeRole::Auxiliary: return "aux";
  }
  return "?";
}
}  // namespace

void dump_network(std::ostream& os, const FlowNetwork& net) {
  os << "# cordon-flownet nodes " << net.node_count() << " arcs " << net.arcs().size() << '\n';
  os << "# infinite " << net.infinite() << '\n';
  os << "# source " << net.source().value << " sink " << net.sink().value << '\n';
  for (std::size_t i = 0; i < net.node_count(); ++i) {
    const NodeId id{static_cast<std::int32_t>(i)};
    const NodeInfo& ni = net.info(id);
    os << "# node " << i << ' ' << role_name(ni.role);
    if (auto c = net.coord_of(id)) os << ' ' << c->row << ' ' << c->col;
    if (ni.target >= 0) os << " target " << ni.target;
    os << '\n';
  }
  for (const Arc& a : net.arcs()) os << a.tail.value << ' ' << a.head.value << ' ' << a.capacity << '\n';
}

}  // namespace cordon
