#include "cordon/maxflow.hpp"

#include <algorithm>
#include <string>

#include "cordon/errors.hpp"

namespace cordon {
namespace {

// Residual network in compressed adjacency form. Arc a of the input becomes two residual
// arcs; pos_of_arc[a] is the forward one and mate[] links each to its reverse.
struct Residual {
  std::vector<std::int32_t> first;  // size n + 1
  std::vector<std::int32_t> head;
  std::vector<std::int32_t> mate;
  std::vector<Capacity> cap;
  std::vector<std::int32_t> pos_of_arc;

  explicit Residual(const FlowNetwork& net) {
    const auto n = net.node_count();
    const auto& arcs = net.arcs();
    first.assign(n + 1, 0);
    for (const Arc& a : arcs) {
      ++first[static_cast<std::size_t>(a.tail.value) + 1];
      ++first[static_cast<std::size_t>(a.head.value) + 1];
    }
    for (std::size_t v = 0; v < n; ++v) first[v + 1] += first[v];
    const auto total = static_cast<std::size_t>(first[n]);
    head.resize(total);
    mate.resize(total);
    cap.resize(total);
    pos_of_arc.resize(arcs.size());
    std::vector<std::int32_t> fill(first.begin(), first.end() - 1);
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      const Arc& a = arcs[i];
      const std::int32_t fwd = fill[static_cast<std::size_t>(a.tail.value)]++;
      const std::int32_t bwd = fill[static_cast<std::size_t>(a.head.value)]++;
      head[static_cast<std::size_t>(fwd)] = a.head.value;
      head[static_cast<std::size_t>(bwd)] = a.tail.value;
      cap[static_cast<std::size_t>(fwd)] = a.capacity;
      cap[static_cast<std::size_t>(bwd)] = 0;
      mate[static_cast<std::size_t>(fwd)] = bwd;
      mate[static_cast<std::size_t>(bwd)] = fwd;
      pos_of_arc[i] = fwd;
    }
  }
};

// Two phases. Phase 1 discharges only nodes labelled below n, so it stops as soon as no more
// excess can reach the sink: that is the flow value. Phase 2 returns the stranded excess to
// the source, turning the preflow into a flow (the cut extraction needs a real flow).
//
// Active nodes sit in per-height stacks; nodes labelled below n are also threaded on
// per-height doubly linked lists so a gap only touches the nodes it lifts.
class PreflowPush {
 public:
  explicit PreflowPush(const FlowNetwork& net)
      : net_(net),
        res_(net),
        n_(static_cast<std::int32_t>(net.node_count())),
        source_(net.source().value),
        sink_(net.sink().value),
        excess_(idx(n_), 0),
        height_(idx(n_), 0),
        current_(res_.first.begin(), res_.first.end() - 1),
        active_next_(idx(n_), kNone),
        active_head_(idx(2 * n_ + 1), kNone),
        all_next_(idx(n_), kNone),
        all_prev_(idx(n_), kNone),
        all_head_(idx(n_), kNone) {}

  FlowState run() {
    height_[idx(source_)] = n_;
    for (std::int32_t p = res_.first[idx(source_)]; p < res_.first[idx(source_) + 1]; ++p) {
      const Capacity delta = res_.cap[idx(p)];
      if (delta == 0) continue;
      push_amount(p, delta);
      ++stats_.pushes;
    }

    limit_ = n_;
    drain();
    limit_ = 2 * n_;
    drain();
    for (std::int32_t v = 0; v < n_; ++v) {
      if (!is_terminal(v) && excess_[idx(v)] != 0) throw ContractViolation("max_flow: excess left at a non-terminal node");
    }

    FlowState state;
    state.value = excess_[idx(sink_)];
    state.excess = excess_;
    state.height = height_;
    state.flow.resize(net_.arcs().size());
    for (std::size_t i = 0; i < net_.arcs().size(); ++i) {
      state.flow[i] = net_.arcs()[i].capacity - res_.cap[idx(res_.pos_of_arc[i])];
    }
    state.stats = stats_;
    return state;
  }

 private:
  static constexpr std::int32_t kNone = -1;
  static std::size_t idx(std::int32_t v) { return static_cast<std::size_t>(v); }

  bool is_terminal(std::int32_t v) const { return v == source_ || v == sink_; }

  void drain() {
    global_relabel();
    std::int64_t work = 0;
    while (amax_ >= 0) {
      const std::int32_t v = active_head_[idx(amax_)];
      if (v == kNone) {
        --amax_;
        continue;
      }
      active_head_[idx(amax_)] = active_next_[idx(v)];
      discharge(v);
      ++stats_.discharges;
      if (++work >= n_) {
        global_relabel();
        work = 0;
      }
    }
  }

  void activate(std::int32_t v) {
    const std::int32_t h = height_[idx(v)];
    active_next_[idx(v)] = active_head_[idx(h)];
    active_head_[idx(h)] = v;
    amax_ = std::max(amax_, h);
  }

  void list_insert(std::int32_t v) {
    const std::int32_t h = height_[idx(v)];
    const std::int32_t first = all_head_[idx(h)];
    all_prev_[idx(v)] = kNone;
    all_next_[idx(v)] = first;
    if (first != kNone) all_prev_[idx(first)] = v;
    all_head_[idx(h)] = v;
    dmax_ = std::max(dmax_, h);
  }

  void list_remove(std::int32_t v) {
    const std::int32_t prev = all_prev_[idx(v)];
    const std::int32_t next = all_next_[idx(v)];
    if (prev == kNone) {
      all_head_[idx(height_[idx(v)])] = next;
    } else {
      all_next_[idx(prev)] = next;
    }
    if (next != kNone) all_prev_[idx(next)] = prev;
  }

  void push_amount(std::int32_t p, Capacity delta) {
    const std::int32_t w = res_.head[idx(p)];
    res_.cap[idx(p)] -= delta;
    res_.cap[idx(res_.mate[idx(p)])] += delta;
    const std::int32_t v = res_.head[idx(res_.mate[idx(p)])];
    excess_[idx(v)] -= delta;
    excess_[idx(w)] += delta;
  }

  void discharge(std::int32_t v) {
    const std::int32_t end = res_.first[idx(v) + 1];
    while (excess_[idx(v)] > 0) {
      std::int32_t& p = current_[idx(v)];
      if (p == end) {
        relabel(v);
        if (height_[idx(v)] >= limit_) return;
        p = res_.first[idx(v)];
        continue;
      }
      const std::int32_t w = res_.head[idx(p)];
      if (res_.cap[idx(p)] > 0 && height_[idx(v)] == height_[idx(w)] + 1) {
        const bool was_idle = excess_[idx(w)] == 0;
        push_amount(p, std::min(excess_[idx(v)], res_.cap[idx(p)]));
        ++stats_.pushes;
        if (was_idle && !is_terminal(w)) activate(w);
      } else {
        ++p;
      }
    }
  }

  void relabel(std::int32_t v) {
    ++stats_.relabels;
    const std::int32_t old = height_[idx(v)];
    std::int32_t lowest = 2 * n_;
    for (std::int32_t p = res_.first[idx(v)]; p < res_.first[idx(v) + 1]; ++p) {
      if (res_.cap[idx(p)] > 0) lowest = std::min(lowest, height_[idx(res_.head[idx(p)])]);
    }
    const std::int32_t raised = std::min(lowest + 1, 2 * n_);
    if (old >= n_) {
      height_[idx(v)] = raised;
      return;
    }
    list_remove(v);
    if (all_head_[idx(old)] == kNone) {
      // Nothing left at `old`: every node above it (and below n) has lost its path to the sink.
      ++stats_.gaps;
      lift_above(old);
      height_[idx(v)] = std::max(raised, n_);
      return;
    }
    height_[idx(v)] = raised;
    if (raised < n_) list_insert(v);
  }

  // Lifts every listed node above height `gap` to n. Their stale stack entries are dropped;
  // phase 2 requeues the ones holding excess, phase 1 leaves them for phase 2.
  void lift_above(std::int32_t gap) {
    for (std::int32_t h = gap + 1; h <= dmax_; ++h) {
      for (std::int32_t u = all_head_[idx(h)]; u != kNone; u = all_next_[idx(u)]) {
        height_[idx(u)] = n_;
        current_[idx(u)] = res_.first[idx(u)];
        if (limit_ > n_ && excess_[idx(u)] > 0) activate(u);
      }
      all_head_[idx(h)] = kNone;
      active_head_[idx(h)] = kNone;
    }
    dmax_ = gap - 1;
  }

  void global_relabel() {
    ++stats_.global_relabels;
    const std::int32_t unreached = 2 * n_;
    std::fill(height_.begin(), height_.end(), unreached);
    queue_.clear();
    auto bfs_from = [&](std::int32_t root, std::int32_t base) {
      height_[idx(root)] = base;
      std::size_t qi = queue_.size();
      queue_.push_back(root);
      for (; qi < queue_.size(); ++qi) {
        const std::int32_t w = queue_[qi];
        for (std::int32_t p = res_.first[idx(w)]; p < res_.first[idx(w) + 1]; ++p) {
          const std::int32_t u = res_.head[idx(p)];
          // Residual arc u -> w is the mate of w -> u.
          if (height_[idx(u)] == unreached && res_.cap[idx(res_.mate[idx(p)])] > 0) {
            height_[idx(u)] = height_[idx(w)] + 1;
            queue_.push_back(u);
          }
        }
      }
    };
    bfs_from(sink_, 0);
    if (height_[idx(source_)] == unreached) {
      if (limit_ > n_) bfs_from(source_, n_);
    }
    // Source still reaches the sink only while the flow is not yet maximal; keep it at n.
    height_[idx(source_)] = n_;

    std::fill(active_head_.begin(), active_head_.end(), kNone);
    std::fill(all_head_.begin(), all_head_.end(), kNone);
    amax_ = -1;
    dmax_ = -1;
    for (std::int32_t v = 0; v < n_; ++v) {
      if (height_[idx(v)] == unreached && limit_ == n_) height_[idx(v)] = n_;
      current_[idx(v)] = res_.first[idx(v)];
      if (is_terminal(v)) continue;
      if (height_[idx(v)] < n_) list_insert(v);
      if (excess_[idx(v)] > 0 && height_[idx(v)] < limit_) activate(v);
    }
  }

  const FlowNetwork& net_;
  Residual res_;
  std::int32_t n_;
  std::int32_t source_;
  std::int32_t sink_;
  std::vector<Capacity> excess_;
  std::vector<std::int32_t> height_;
  std::vector<std::int32_t> current_;
  std::vector<std::int32_t> active_next_;
  std::vector<std::int32_t> active_head_;
  std::vector<std::int32_t> all_next_;
  std::vector<std::int32_t> all_prev_;
  std::vector<std::int32_t> all_head_;
  std::vector<std::int32_t> queue_;
  std::int32_t amax_ = -1;
  std::int32_t dmax_ = -1;
  std::int32_t limit_ = 0;
  FlowStats stats_;
};

void check_well_formed(const FlowNetwork& net) {
  if (!net.source().valid() || !net.sink().valid()) throw ContractViolation("max_flow: network needs a source and a sink");
  if (net.source() == net.sink()) throw ContractViolation("max_flow: source and sink coincide");
}

}  // namespace

bool checked_build() {
#ifdef CORDON_CHECKED
  return true;
#else
  return false;
#endif
}

DualityCounters& duality_counters() {
  static DualityCounters counters;
  return counters;
}

FlowState max_flow(const FlowNetwork& net) {
  check_well_formed(net);
  return PreflowPush(net).run();
}

CutResult extract_min_cut(const FlowNetwork& net, const FlowState& state) {
  check_well_formed(net);
  const auto& arcs = net.arcs();
  if (state.flow.size() != arcs.size()) throw ContractViolation("extract_min_cut: flow state does not match network");

  // Residual adjacency over both arc directions: arcs by tail, then arcs by head.
  const std::size_t n = net.node_count();
  std::vector<std::int32_t> start(2 * n + 1, 0);
  for (const Arc& arc : arcs) {
    ++start[static_cast<std::size_t>(arc.tail.value) + 1];
    ++start[n + static_cast<std::size_t>(arc.head.value) + 1];
  }
  for (std::size_t i = 0; i < 2 * n; ++i) start[i + 1] += start[i];
  std::vector<std::int32_t> by_end(2 * arcs.size());
  {
    std::vector<std::int32_t> fill(start.begin(), start.end() - 1);
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      by_end[static_cast<std::size_t>(fill[static_cast<std::size_t>(arcs[i].tail.value)]++)] = static_cast<std::int32_t>(i);
      by_end[static_cast<std::size_t>(fill[n + static_cast<std::size_t>(arcs[i].head.value)]++)] =
          static_cast<std::int32_t>(i);
    }
  }
  CutResult result;
  result.source_side.assign(n, false);
  std::vector<std::int32_t> queue{net.source().value};
  queue.reserve(n);
  result.source_side[static_cast<std::size_t>(net.source().value)] = true;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const auto v = static_cast<std::size_t>(queue[qi]);
    for (std::int32_t k = start[v]; k < start[v + 1]; ++k) {
      const auto a = static_cast<std::size_t>(by_end[static_cast<std::size_t>(k)]);
      const auto w = static_cast<std::size_t>(arcs[a].head.value);
      if (!result.source_side[w] && arcs[a].capacity - state.flow[a] > 0) {
        result.source_side[w] = true;
        queue.push_back(arcs[a].head.value);
      }
    }
    for (std::int32_t k = start[n + v]; k < start[n + v + 1]; ++k) {
      const auto a = static_cast<std::size_t>(by_end[static_cast<std::size_t>(k)]);
      const auto w = static_cast<std::size_t>(arcs[a].tail.value);
      if (!result.source_side[w] && state.flow[a] > 0) {
        result.source_side[w] = true;
        queue.push_back(arcs[a].tail.value);
      }
    }
  }

#ifdef CORDON_CHECKED
  if (result.source_side[static_cast<std::size_t>(net.sink().value)]) {
    throw ContractViolation("extract_min_cut: flow is not maximal (augmenting path remains)");
  }
#endif

  Capacity cut_capacity = 0;
  for (const Arc& arc : arcs) {
    if (!result.source_side[static_cast<std::size_t>(arc.tail.value)] ||
        result.source_side[static_cast<std::size_t>(arc.head.value)]) {
      continue;
    }
    cut_capacity += arc.capacity;
    if (net.is_infinite(arc.capacity)) {
      result.feasible = false;
    } else if (arc.kind == ArcKind::Internal) {
      if (auto c = net.coord_of(arc.tail)) result.cells.push_back(*c);
    }
  }
  std::sort(result.cells.begin(), result.cells.end());
  result.value = cut_capacity;
  if (!result.feasible) result.cells.clear();

#ifdef CORDON_CHECKED
  auto& counters = duality_counters();
  counters.checks.fetch_add(1, std::memory_order_relaxed);
  // On grid networks every finite cut arc is a unit Internal arc.
  const bool grid_network = net.grid_width() > 0;
  const bool cardinality_ok =
      !grid_network || !result.feasible || static_cast<Capacity>(result.cells.size()) == cut_capacity;
  if (cut_capacity != state.value || !cardinality_ok) {
    counters.violations.fetch_add(1, std::memory_order_relaxed);
    throw ContractViolation("extract_min_cut: duality violated (flow " + std::to_string(state.value) + ", cut " +
                            std::to_string(cut_capacity) + ")");
  }
#endif
  return result;
}

CutResult min_vertex_cut(const OccupancyGrid& grid, TargetSelection targets) {
  FlowNetwork base = build_base_network(grid);
  FlowNetwork net = targets.is_all() ? attach_merged_sink(std::move(base), grid)
                                     : attach_single_sink(std::move(base), grid, targets.id());
  const FlowState state = max_flow(net);
  return extract_min_cut(net, state);
}

}  // namespace cordon
