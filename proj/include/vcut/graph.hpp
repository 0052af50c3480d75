#pragma once

// Weighted graph types shared by the whole library: simple directed and
// undirected graphs with positive integer vertex weights, vertex cuts as
// (left, separator, right) tri-partitions, and cut values that may be
// infinite when two vertices cannot be separated.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace vcut {

using VertexId = int;
using Weight = std::int64_t;
using VertexSet = std::vector<VertexId>;

enum class ErrorCode {
  SelfLoop,
  DuplicateArc,
  DuplicateEdge,
  NonPositiveWeight,
  VertexOutOfRange,
  WeightOverflow,
  SamePair,
  AdjacentPair,
  CompleteGraph,
  TerminalSetTooSmall,
  InvalidCut,
  EmptySet,
  BudgetExceeded,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

/// Weight of a cut: a finite nonnegative value, or NoCut when the queried
/// vertices cannot be separated (adjacent or identical endpoints).
class CutValue {
 public:
  static CutValue finite(std::int64_t w) {
    if (w < 0) throw std::logic_error("finite cut value must be nonnegative");
    CutValue c;
    c.finite_ = true;
    c.value_ = w;
    return c;
  }
  static CutValue no_cut() { return CutValue{}; }

  bool is_finite() const noexcept { return finite_; }
  std::int64_t value() const {
    if (!finite_) throw std::logic_error("no finite value on NoCut");
    return value_;
  }

  /// Adds delta to a finite value; NoCut is absorbing.
  CutValue shifted(std::int64_t delta) const {
    return finite_ ? finite(value_ + delta) : no_cut();
  }

  std::string str() const { return finite_ ? std::to_string(value_) : "inf"; }

  friend bool operator==(const CutValue& a, const CutValue& b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
  }
  friend bool operator!=(const CutValue& a, const CutValue& b) { return !(a == b); }
  // Finite values order below NoCut, which compares like +infinity.
  friend bool operator<(const CutValue& a, const CutValue& b) {
    if (!a.finite_) return false;
    if (!b.finite_) return true;
    return a.value_ < b.value_;
  }

 private:
  std::int64_t value_ = 0;
  bool finite_ = false;
};

namespace detail {

inline void check_vertex_range(int n, VertexId v, const char* what) {
  if (v < 0 || v >= n)
    fail(ErrorCode::VertexOutOfRange,
         std::string(what) + " " + std::to_string(v) + " out of range [0," +
             std::to_string(n) + ")");
}

inline std::vector<Weight> normalize_weights(int n, std::vector<Weight> weights) {
  if (weights.empty()) weights.assign(static_cast<std::size_t>(n), 1);
  if (static_cast<int>(weights.size()) != n)
    fail(ErrorCode::VertexOutOfRange, "weight list size does not match vertex count");
  Weight max_w = 0;
  for (int v = 0; v < n; ++v) {
    if (weights[v] < 1)
      fail(ErrorCode::NonPositiveWeight,
           "vertex " + std::to_string(v) + " has non-positive weight " +
               std::to_string(weights[v]));
    max_w = std::max(max_w, weights[v]);
  }
  // Keep n * max_weight < 2^62 so separator weights shifted by the total
  // graph weight never overflow a signed 64-bit accumulator.
  if (static_cast<__int128>(n) * max_w >= (static_cast<__int128>(1) << 62))
    fail(ErrorCode::WeightOverflow, "n * max_weight must stay below 2^62");
  return weights;
}

inline std::vector<char> make_mask(int n, const VertexSet& s) {
  std::vector<char> mask(static_cast<std::size_t>(n), 0);
  for (VertexId v : s) {
    check_vertex_range(n, v, "vertex");
    mask[static_cast<std::size_t>(v)] = 1;
  }
  return mask;
}

}  // namespace detail

class DirectedGraph {
 public:
  DirectedGraph(int n, std::vector<std::pair<VertexId, VertexId>> arcs,
                std::vector<Weight> weights = {})
      : n_(n), arcs_(std::move(arcs)) {
    if (n_ < 1) fail(ErrorCode::VertexOutOfRange, "vertex count must be positive");
    weights_ = detail::normalize_weights(n_, std::move(weights));
    out_.assign(static_cast<std::size_t>(n_), {});
    in_.assign(static_cast<std::size_t>(n_), {});
    for (const auto& [u, v] : arcs_) {
      detail::check_vertex_range(n_, u, "arc tail");
      detail::check_vertex_range(n_, v, "arc head");
      if (u == v) fail(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(u));
      out_[static_cast<std::size_t>(u)].push_back(v);
      in_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& nbrs : out_) std::sort(nbrs.begin(), nbrs.end());
    for (auto& nbrs : in_) std::sort(nbrs.begin(), nbrs.end());
    for (int u = 0; u < n_; ++u) {
      const auto& nbrs = out_[static_cast<std::size_t>(u)];
      auto dup = std::adjacent_find(nbrs.begin(), nbrs.end());
      if (dup != nbrs.end())
        fail(ErrorCode::DuplicateArc,
             "duplicate arc (" + std::to_string(u) + "," + std::to_string(*dup) + ")");
    }
    for (Weight w : weights_) total_weight_ += w;
  }

  int vertex_count() const noexcept { return n_; }
  int arc_count() const noexcept { return static_cast<int>(arcs_.size()); }
  Weight weight(VertexId v) const { return weights_[static_cast<std::size_t>(v)]; }
  const std::vector<Weight>& weights() const noexcept { return weights_; }
  std::int64_t total_weight() const noexcept { return total_weight_; }
  const std::vector<std::pair<VertexId, VertexId>>& arcs() const noexcept { return arcs_; }
  const VertexSet& out_neighbors(VertexId v) const { return out_[static_cast<std::size_t>(v)]; }
  const VertexSet& in_neighbors(VertexId v) const { return in_[static_cast<std::size_t>(v)]; }

  bool has_arc(VertexId u, VertexId v) const {
    const auto& nbrs = out_[static_cast<std::size_t>(u)];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
  }

  friend bool operator==(const DirectedGraph& a, const DirectedGraph& b) {
    if (a.n_ != b.n_ || a.weights_ != b.weights_) return false;
    auto ea = a.arcs_, eb = b.arcs_;
    std::sort(ea.begin(), ea.end());
    std::sort(eb.begin(), eb.end());
    return ea == eb;
  }

 private:
  int n_ = 0;
  std::vector<std::pair<VertexId, VertexId>> arcs_;
  std::vector<Weight> weights_;
  std::vector<VertexSet> out_, in_;
  std::int64_t total_weight_ = 0;
};

class UndirectedGraph {
 public:
  UndirectedGraph(int n, std::vector<std::pair<VertexId, VertexId>> edges,
                  std::vector<Weight> weights = {})
      : n_(n) {
    if (n_ < 1) fail(ErrorCode::VertexOutOfRange, "vertex count must be positive");
    weights_ = detail::normalize_weights(n_, std::move(weights));
    adj_.assign(static_cast<std::size_t>(n_), {});
    edges_.reserve(edges.size());
    for (const auto& [a, b] : edges) {
      detail::check_vertex_range(n_, a, "edge endpoint");
      detail::check_vertex_range(n_, b, "edge endpoint");
      if (a == b) fail(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(a));
      edges_.emplace_back(std::min(a, b), std::max(a, b));
      adj_[static_cast<std::size_t>(a)].push_back(b);
      adj_[static_cast<std::size_t>(b)].push_back(a);
    }
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
    for (int u = 0; u < n_; ++u) {
      const auto& nbrs = adj_[static_cast<std::size_t>(u)];
      auto dup = std::adjacent_find(nbrs.begin(), nbrs.end());
      if (dup != nbrs.end())
        fail(ErrorCode::DuplicateEdge,
             "duplicate edge {" + std::to_string(u) + "," + std::to_string(*dup) + "}");
    }
    for (Weight w : weights_) total_weight_ += w;
  }

  int vertex_count() const noexcept { return n_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  Weight weight(VertexId v) const { return weights_[static_cast<std::size_t>(v)]; }
  const std::vector<Weight>& weights() const noexcept { return weights_; }
  std::int64_t total_weight() const noexcept { return total_weight_; }
  const std::vector<std::pair<VertexId, VertexId>>& edges() const noexcept { return edges_; }
  const VertexSet& neighbors(VertexId v) const { return adj_[static_cast<std::size_t>(v)]; }

  bool has_edge(VertexId u, VertexId v) const {
    const auto& nbrs = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
  }

  friend bool operator==(const UndirectedGraph& a, const UndirectedGraph& b) {
    if (a.n_ != b.n_ || a.weights_ != b.weights_) return false;
    auto ea = a.edges_, eb = b.edges_;
    std::sort(ea.begin(), ea.end());
    std::sort(eb.begin(), eb.end());
    return ea == eb;
  }

 private:
  int n_ = 0;
  std::vector<std::pair<VertexId, VertexId>> edges_;
  std::vector<Weight> weights_;
  std::vector<VertexSet> adj_;
  std::int64_t total_weight_ = 0;
};

inline bool is_complete(const DirectedGraph& g) {
  int n = g.vertex_count();
  return n <= 1 ||
         static_cast<std::int64_t>(g.arc_count()) == static_cast<std::int64_t>(n) * (n - 1);
}

inline bool is_complete(const UndirectedGraph& g) {
  int n = g.vertex_count();
  return n <= 1 ||
         static_cast<std::int64_t>(g.edge_count()) == static_cast<std::int64_t>(n) * (n - 1) / 2;
}

/// Re-runs every construction invariant; with allow_complete = false also
/// requires at least one ordered non-adjacent pair.
inline void validate_directed(const DirectedGraph& g, bool allow_complete = true) {
  DirectedGraph check(g.vertex_count(), g.arcs(), g.weights());
  if (!allow_complete && is_complete(g))
    fail(ErrorCode::CompleteGraph, "graph has no ordered non-adjacent pair");
}

inline void validate_undirected(const UndirectedGraph& g, bool allow_complete = true) {
  UndirectedGraph check(g.vertex_count(), g.edges(), g.weights());
  if (!allow_complete && is_complete(g))
    fail(ErrorCode::CompleteGraph, "graph has no non-adjacent pair");
}

inline std::int64_t weight_of(const DirectedGraph& g, const VertexSet& s) {
  std::int64_t sum = 0;
  for (VertexId v : s) {
    detail::check_vertex_range(g.vertex_count(), v, "vertex");
    sum += g.weight(v);
  }
  return sum;
}

inline std::int64_t weight_of(const UndirectedGraph& g, const VertexSet& s) {
  std::int64_t sum = 0;
  for (VertexId v : s) {
    detail::check_vertex_range(g.vertex_count(), v, "vertex");
    sum += g.weight(v);
  }
  return sum;
}

namespace detail {

// Forward BFS over the kept vertices; adjacency supplied per vertex.
template <typename Neighbors>
int count_reachable(int n, VertexId start, const std::vector<char>& kept,
                    Neighbors neighbors, std::vector<char>& seen) {
  seen.assign(static_cast<std::size_t>(n), 0);
  std::vector<VertexId> queue{start};
  seen[static_cast<std::size_t>(start)] = 1;
  int reached = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    VertexId u = queue[head];
    for (VertexId v : neighbors(u)) {
      if (!kept[static_cast<std::size_t>(v)] || seen[static_cast<std::size_t>(v)]) continue;
      seen[static_cast<std::size_t>(v)] = 1;
      ++reached;
      queue.push_back(v);
    }
  }
  return reached;
}

}  // namespace detail

/// True when the graph induced on V minus removed has at most one vertex or
/// is strongly connected.
inline bool is_strongly_connected(const DirectedGraph& g, const VertexSet& removed = {}) {
  int n = g.vertex_count();
  auto mask = detail::make_mask(n, removed);
  std::vector<char> kept(static_cast<std::size_t>(n));
  int remaining = 0;
  VertexId start = -1;
  for (int v = 0; v < n; ++v) {
    kept[static_cast<std::size_t>(v)] = !mask[static_cast<std::size_t>(v)];
    if (kept[static_cast<std::size_t>(v)]) {
      ++remaining;
      if (start < 0) start = v;
    }
  }
  if (remaining <= 1) return true;
  std::vector<char> seen;
  int fwd = detail::count_reachable(
      n, start, kept, [&](VertexId u) -> const VertexSet& { return g.out_neighbors(u); }, seen);
  if (fwd != remaining) return false;
  int bwd = detail::count_reachable(
      n, start, kept, [&](VertexId u) -> const VertexSet& { return g.in_neighbors(u); }, seen);
  return bwd == remaining;
}

/// True when the graph induced on V minus removed has at most one vertex or
/// is connected.
inline bool is_connected(const UndirectedGraph& g, const VertexSet& removed = {}) {
  int n = g.vertex_count();
  auto mask = detail::make_mask(n, removed);
  std::vector<char> kept(static_cast<std::size_t>(n));
  int remaining = 0;
  VertexId start = -1;
  for (int v = 0; v < n; ++v) {
    kept[static_cast<std::size_t>(v)] = !mask[static_cast<std::size_t>(v)];
    if (kept[static_cast<std::size_t>(v)]) {
      ++remaining;
      if (start < 0) start = v;
    }
  }
  if (remaining <= 1) return true;
  std::vector<char> seen;
  int reached = detail::count_reachable(
      n, start, kept, [&](VertexId u) -> const VertexSet& { return g.neighbors(u); }, seen);
  return reached == remaining;
}

/// Tri-partition (left, separator, right) of a graph's vertex set. Valid on
/// a directed graph when no arc leaves left into right; valid on an
/// undirected graph when no edge joins left and right. The separator may be
/// empty. All member sets are kept sorted ascending.
struct VertexCut {
  VertexSet left;
  VertexSet separator;
  VertexSet right;
};

struct CutViolation {
  enum Kind { NotTriPartition, EmptySide, CrossingEdge } kind;
  VertexId u = -1;
  VertexId v = -1;

  std::string message() const {
    switch (kind) {
      case NotTriPartition:
        return "cut sides do not tri-partition the vertex set";
      case EmptySide:
        return "cut has an empty side";
      case CrossingEdge:
        return "crossing edge (" + std::to_string(u) + "," + std::to_string(v) + ")";
    }
    return "invalid cut";
  }
};

namespace detail {

// 0 = unassigned, 1 = left, 2 = separator, 3 = right.
inline std::optional<CutViolation> assign_sides(int n, const VertexCut& cut,
                                                std::vector<char>& side) {
  side.assign(static_cast<std::size_t>(n), 0);
  int assigned = 0;
  auto place = [&](const VertexSet& s, char tag) -> bool {
    for (VertexId v : s) {
      if (v < 0 || v >= n || side[static_cast<std::size_t>(v)] != 0) return false;
      side[static_cast<std::size_t>(v)] = tag;
      ++assigned;
    }
    return true;
  };
  if (!place(cut.left, 1) || !place(cut.separator, 2) || !place(cut.right, 3) ||
      assigned != n)
    return CutViolation{CutViolation::NotTriPartition};
  if (cut.left.empty() || cut.right.empty()) return CutViolation{CutViolation::EmptySide};
  return std::nullopt;
}

}  // namespace detail

/// Returns the first violation, or nullopt when the cut is valid.
inline std::optional<CutViolation> validate_cut(const DirectedGraph& g, const VertexCut& cut) {
  std::vector<char> side;
  if (auto bad = detail::assign_sides(g.vertex_count(), cut, side)) return bad;
  for (VertexId u : cut.left)
    for (VertexId v : g.out_neighbors(u))
      if (side[static_cast<std::size_t>(v)] == 3)
        return CutViolation{CutViolation::CrossingEdge, u, v};
  return std::nullopt;
}

inline std::optional<CutViolation> validate_cut(const UndirectedGraph& g, const VertexCut& cut) {
  std::vector<char> side;
  if (auto bad = detail::assign_sides(g.vertex_count(), cut, side)) return bad;
  for (VertexId u : cut.left)
    for (VertexId v : g.neighbors(u))
      if (side[static_cast<std::size_t>(v)] == 3)
        return CutViolation{CutViolation::CrossingEdge, u, v};
  return std::nullopt;
}

/// Builds a cut from its two sides; the separator is everything else.
inline VertexCut cut_from_sides(int n, VertexSet left, VertexSet right) {
  std::sort(left.begin(), left.end());
  std::sort(right.begin(), right.end());
  auto in_left = detail::make_mask(n, left);
  auto in_right = detail::make_mask(n, right);
  VertexSet separator;
  for (int v = 0; v < n; ++v)
    if (!in_left[static_cast<std::size_t>(v)] && !in_right[static_cast<std::size_t>(v)])
      separator.push_back(v);
  return VertexCut{std::move(left), std::move(separator), std::move(right)};
}

/// Builds a cut from the left side and separator; the right side is
/// everything else.
inline VertexCut cut_from_left_separator(int n, VertexSet left, VertexSet separator) {
  std::sort(left.begin(), left.end());
  std::sort(separator.begin(), separator.end());
  auto in_left = detail::make_mask(n, left);
  auto in_sep = detail::make_mask(n, separator);
  VertexSet right;
  for (int v = 0; v < n; ++v)
    if (!in_left[static_cast<std::size_t>(v)] && !in_sep[static_cast<std::size_t>(v)])
      right.push_back(v);
  return VertexCut{std::move(left), std::move(separator), std::move(right)};
}

}  // namespace vcut
