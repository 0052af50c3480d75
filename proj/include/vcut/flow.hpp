#pragma once

// Arc-capacitated max flow (Dinic) with min-cut extraction, and the split
// construction that turns s-t vertex cuts into arc cuts: every vertex v
// becomes an internal arc (enter-node -> leave-node) of capacity w(v), every
// edge becomes an uncuttable arc between leave- and enter-nodes.

#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "vcut/graph.hpp"

namespace vcut {

struct FlowStats {
  std::uint64_t calls = 0;
  double millis = 0.0;
};

/// Per-thread counters for benchmarking; reset manually.
inline FlowStats& flow_stats() {
  thread_local FlowStats stats;
  return stats;
}

class FlowNetwork {
 public:
  static constexpr std::int64_t kNoLimit = std::numeric_limits<std::int64_t>::max();

  FlowNetwork(int node_count, int source, int sink)
      : adj_(static_cast<std::size_t>(node_count)), source_(source), sink_(sink) {}

  /// Adds an arc and its reverse of capacity 0; returns the arc id. The
  /// reverse arc is id ^ 1.
  int add_arc(int from, int to, std::int64_t cap) {
    int id = static_cast<int>(to_.size());
    to_.push_back(to);
    cap_.push_back(cap);
    to_.push_back(from);
    cap_.push_back(0);
    adj_[static_cast<std::size_t>(from)].push_back(id);
    adj_[static_cast<std::size_t>(to)].push_back(id + 1);
    return id;
  }

  int node_count() const noexcept { return static_cast<int>(adj_.size()); }
  int arc_count() const noexcept { return static_cast<int>(to_.size()); }
  int source() const noexcept { return source_; }
  int sink() const noexcept { return sink_; }
  void set_terminals(int source, int sink) {
    source_ = source;
    sink_ = sink;
  }
  std::int64_t capacity(int arc) const { return cap_[static_cast<std::size_t>(arc)]; }
  void set_capacity(int arc, std::int64_t cap) { cap_[static_cast<std::size_t>(arc)] = cap; }
  const std::vector<std::int64_t>& capacities() const noexcept { return cap_; }
  void restore_capacities(const std::vector<std::int64_t>& caps) { cap_ = caps; }

  /// Runs Dinic to completion, or stops as soon as the accumulated flow
  /// reaches stop_at. Capacities are left in residual state.
  std::int64_t run_max_flow(std::int64_t stop_at = kNoLimit) {
    auto started = std::chrono::steady_clock::now();
    std::int64_t flow = 0;
    while (flow < stop_at && bfs_levels()) {
      it_.assign(adj_.size(), 0);
      while (flow < stop_at) {
        std::int64_t pushed = blocking_path(source_, kNoLimit);
        if (pushed == 0) break;
        flow += pushed;
      }
    }
    auto& stats = flow_stats();
    stats.calls += 1;
    stats.millis +=
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
            .count();
    return flow;
  }

  /// Nodes reachable from the source in the residual network; after a full
  /// run this is the minimal source side of a minimum cut.
  std::vector<char> residual_reachable() const {
    std::vector<char> seen(adj_.size(), 0);
    std::vector<int> queue{source_};
    seen[static_cast<std::size_t>(source_)] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (int id : adj_[static_cast<std::size_t>(queue[head])]) {
        int v = to_[static_cast<std::size_t>(id)];
        if (cap_[static_cast<std::size_t>(id)] > 0 && !seen[static_cast<std::size_t>(v)]) {
          seen[static_cast<std::size_t>(v)] = 1;
          queue.push_back(v);
        }
      }
    }
    return seen;
  }

 private:
  bool bfs_levels() {
    level_.assign(adj_.size(), -1);
    std::vector<int> queue{source_};
    level_[static_cast<std::size_t>(source_)] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int u = queue[head];
      for (int id : adj_[static_cast<std::size_t>(u)]) {
        int v = to_[static_cast<std::size_t>(id)];
        if (cap_[static_cast<std::size_t>(id)] > 0 && level_[static_cast<std::size_t>(v)] < 0) {
          level_[static_cast<std::size_t>(v)] = level_[static_cast<std::size_t>(u)] + 1;
          queue.push_back(v);
        }
      }
    }
    return level_[static_cast<std::size_t>(sink_)] >= 0;
  }

  std::int64_t blocking_path(int u, std::int64_t limit) {
    if (u == sink_) return limit;
    for (int& i = it_[static_cast<std::size_t>(u)];
         i < static_cast<int>(adj_[static_cast<std::size_t>(u)].size()); ++i) {
      int id = adj_[static_cast<std::size_t>(u)][static_cast<std::size_t>(i)];
      int v = to_[static_cast<std::size_t>(id)];
      if (cap_[static_cast<std::size_t>(id)] <= 0 ||
          level_[static_cast<std::size_t>(v)] != level_[static_cast<std::size_t>(u)] + 1)
        continue;
      std::int64_t pushed =
          blocking_path(v, std::min(limit, cap_[static_cast<std::size_t>(id)]));
      if (pushed > 0) {
        cap_[static_cast<std::size_t>(id)] -= pushed;
        cap_[static_cast<std::size_t>(id ^ 1)] += pushed;
        return pushed;
      }
    }
    level_[static_cast<std::size_t>(u)] = -1;
    return 0;
  }

  std::vector<int> to_;
  std::vector<std::int64_t> cap_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> level_, it_;
  int source_, sink_;
};

struct MaxFlowResult {
  std::int64_t value;
  std::vector<char> source_side;
};

/// Exact max flow plus the residual-reachable node set.
inline MaxFlowResult max_flow(FlowNetwork& net) {
  std::int64_t value = net.run_max_flow();
  return MaxFlowResult{value, net.residual_reachable()};
}

struct STCutResult {
  CutValue value;
  VertexSet separator;
  VertexSet witness_left;
};

/// Reusable split network for one graph: built once, re-terminated per
/// (s, t) query. Internal arcs carry the vertex weights; s and t get
/// uncuttable internal arcs for the duration of their query. Keeps a
/// reference to the graph, which must outlive the solver.
class SplitGraphSolver {
 public:
  explicit SplitGraphSolver(const DirectedGraph& g)
      : n_(g.vertex_count()),
        inf_(g.total_weight() + 1),
        net_(2 * g.vertex_count(), 0, 0),
        digraph_(&g) {
    split_arc_.resize(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v)
      split_arc_[static_cast<std::size_t>(v)] = net_.add_arc(enter(v), leave(v), g.weight(v));
    for (int u = 0; u < n_; ++u)
      for (VertexId v : g.out_neighbors(u)) net_.add_arc(leave(u), enter(v), inf_);
    base_caps_ = net_.capacities();
  }

  explicit SplitGraphSolver(const UndirectedGraph& g)
      : n_(g.vertex_count()),
        inf_(g.total_weight() + 1),
        net_(2 * g.vertex_count(), 0, 0),
        ugraph_(&g) {
    split_arc_.resize(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v)
      split_arc_[static_cast<std::size_t>(v)] = net_.add_arc(enter(v), leave(v), g.weight(v));
    for (int u = 0; u < n_; ++u)
      for (VertexId v : g.neighbors(u)) net_.add_arc(leave(u), enter(v), inf_);
    base_caps_ = net_.capacities();
  }

  std::int64_t uncuttable_capacity() const noexcept { return inf_; }

  /// Minimum s-t vertex cut; NoCut when s and t are adjacent.
  STCutResult query(VertexId s, VertexId t) { return run(s, t, FlowNetwork::kNoLimit); }

  /// Same, but gives up once the cut provably weighs at least bound.
  /// Returns nullopt in that case.
  std::optional<STCutResult> query_below(VertexId s, VertexId t, std::int64_t bound) {
    STCutResult r = run(s, t, bound);
    if (r.value.is_finite() && r.value.value() >= bound) return std::nullopt;
    return r;
  }

 private:
  int enter(VertexId v) const { return 2 * v; }
  int leave(VertexId v) const { return 2 * v + 1; }

  bool adjacent(VertexId s, VertexId t) const {
    return digraph_ ? digraph_->has_arc(s, t) : ugraph_->has_edge(s, t);
  }

  STCutResult run(VertexId s, VertexId t, std::int64_t stop_at) {
    detail::check_vertex_range(n_, s, "source");
    detail::check_vertex_range(n_, t, "sink");
    if (s == t) fail(ErrorCode::SamePair, "source equals sink");
    if (adjacent(s, t)) return STCutResult{CutValue::no_cut(), {}, {}};
    net_.restore_capacities(base_caps_);
    net_.set_capacity(split_arc_[static_cast<std::size_t>(s)], inf_);
    net_.set_capacity(split_arc_[static_cast<std::size_t>(t)], inf_);
    net_.set_terminals(leave(s), enter(t));
    std::int64_t value = net_.run_max_flow(stop_at);
    if (value >= stop_at) return STCutResult{CutValue::finite(value), {}, {}};
    auto reach = net_.residual_reachable();
    VertexSet separator, left;
    for (int v = 0; v < n_; ++v) {
      bool enter_in = reach[static_cast<std::size_t>(enter(v))] != 0;
      bool leave_in = reach[static_cast<std::size_t>(leave(v))] != 0;
      if (enter_in && !leave_in)
        separator.push_back(v);
      else if (leave_in)
        left.push_back(v);
    }
    return STCutResult{CutValue::finite(value), std::move(separator), std::move(left)};
  }

  int n_;
  std::int64_t inf_;
  FlowNetwork net_;
  const DirectedGraph* digraph_ = nullptr;
  const UndirectedGraph* ugraph_ = nullptr;
  std::vector<int> split_arc_;
  std::vector<std::int64_t> base_caps_;
};

namespace detail {

template <typename Graph>
FlowNetwork build_split_network(const Graph& g, VertexId s, VertexId t) {
  if (s == t) fail(ErrorCode::SamePair, "source equals sink");
  int n = g.vertex_count();
  check_vertex_range(n, s, "source");
  check_vertex_range(n, t, "sink");
  std::int64_t inf = g.total_weight() + 1;
  FlowNetwork net(2 * n, 2 * s + 1, 2 * t);
  for (int v = 0; v < n; ++v)
    net.add_arc(2 * v, 2 * v + 1, (v == s || v == t) ? inf : g.weight(v));
  if constexpr (std::is_same_v<Graph, DirectedGraph>) {
    for (int u = 0; u < n; ++u)
      for (VertexId v : g.out_neighbors(u)) net.add_arc(2 * u + 1, 2 * v, inf);
  } else {
    for (int u = 0; u < n; ++u)
      for (VertexId v : g.neighbors(u)) net.add_arc(2 * u + 1, 2 * v, inf);
  }
  return net;
}

}  // namespace detail

/// Split network for one (s, t) query; source is s's leave-node, sink is
/// t's enter-node. The pair must be distinct and non-adjacent.
inline FlowNetwork build_st_vertex_network(const DirectedGraph& g, VertexId s, VertexId t) {
  if (s != t && g.has_arc(s, t)) fail(ErrorCode::AdjacentPair, "pair is adjacent");
  return detail::build_split_network(g, s, t);
}

inline FlowNetwork build_st_vertex_network(const UndirectedGraph& g, VertexId s, VertexId t) {
  if (s != t && g.has_edge(s, t)) fail(ErrorCode::AdjacentPair, "pair is adjacent");
  return detail::build_split_network(g, s, t);
}

/// One-shot minimum s-t vertex cut.
inline STCutResult st_vertex_cut(const DirectedGraph& g, VertexId s, VertexId t) {
  return SplitGraphSolver(g).query(s, t);
}

inline STCutResult st_vertex_cut(const UndirectedGraph& g, VertexId s, VertexId t) {
  return SplitGraphSolver(g).query(s, t);
}

}  // namespace vcut
