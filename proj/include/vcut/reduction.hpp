#pragma once

// Reduction from directed to undirected vertex cuts. A directed graph on n
// vertices maps to an undirected graph on 2n vertices: a clique over the
// out-copies, a clique over the in-copies, a perfect matching between the
// copies, and one cross edge per arc. Every separator weight in the reduced
// graph exceeds its directed counterpart by exactly the total vertex weight,
// and cuts translate back and forth mechanically.

#include <string>
#include <utility>
#include <vector>

#include "vcut/graph.hpp"

namespace vcut {

class ReducedGraph {
 public:
  ReducedGraph(UndirectedGraph graph, int base_n)
      : graph_(std::move(graph)), base_n_(base_n) {}

  const UndirectedGraph& graph() const noexcept { return graph_; }
  int base_vertex_count() const noexcept { return base_n_; }
  /// Total vertex weight of the base graph; the exact shift between
  /// directed separator weights and reduced separator weights.
  std::int64_t base_total_weight() const noexcept { return graph_.total_weight() / 2; }

  VertexId out_copy(VertexId v) const noexcept { return v; }
  VertexId in_copy(VertexId v) const noexcept { return v + base_n_; }
  bool is_out_copy(VertexId x) const noexcept { return x < base_n_; }
  VertexId base_vertex(VertexId x) const noexcept {
    return x < base_n_ ? x : x - base_n_;
  }

 private:
  UndirectedGraph graph_;
  int base_n_;
};

/// Builds the reduced graph. Layout: out-copy of v is v, in-copy of v is
/// v + n. Edge order: out-clique, in-clique, matching, then one edge per
/// arc, each block lexicographic.
inline ReducedGraph build_reduction(const DirectedGraph& g) {
  validate_directed(g);
  int n = g.vertex_count();
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(static_cast<std::size_t>(n) * (n - 1) + static_cast<std::size_t>(n) +
                g.arcs().size());
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u + n, v + n);
  for (int v = 0; v < n; ++v) edges.emplace_back(v, v + n);
  auto arcs = g.arcs();
  std::sort(arcs.begin(), arcs.end());
  for (const auto& [u, v] : arcs) edges.emplace_back(u, v + n);

  std::vector<Weight> weights(static_cast<std::size_t>(2 * n));
  for (int v = 0; v < n; ++v)
    weights[static_cast<std::size_t>(v)] = weights[static_cast<std::size_t>(v + n)] =
        g.weight(v);
  return ReducedGraph(UndirectedGraph(2 * n, std::move(edges), std::move(weights)), n);
}

/// A valid cut of the reduced graph oriented so that the left side lives in
/// the out-copies and the right side in the in-copies.
struct NormalizedCut {
  VertexCut cut;
};

/// Orients a valid cut of the reduced graph (swapping left and right if
/// needed). Any valid cut has each side contained in one copy, so this
/// always succeeds on valid input.
inline NormalizedCut normalize_cut(const ReducedGraph& r, const VertexCut& cut) {
  if (auto bad = validate_cut(r.graph(), cut))
    fail(ErrorCode::InvalidCut, bad->message());
  auto within = [&](const VertexSet& side, bool out_copy) {
    for (VertexId x : side)
      if (r.is_out_copy(x) != out_copy) return false;
    return true;
  };
  if (within(cut.left, true) && within(cut.right, false)) return NormalizedCut{cut};
  if (within(cut.left, false) && within(cut.right, true))
    return NormalizedCut{VertexCut{cut.right, cut.separator, cut.left}};
  throw std::logic_error("valid reduced cut has a side straddling both copies");
}

/// Maps a normalized cut back to a directed cut of the base graph:
/// left = out-copy preimage, right = in-copy preimage, separator = rest.
/// The separator weight drops by exactly the shift.
inline VertexCut extract_directed_cut(const ReducedGraph& r, const NormalizedCut& nc) {
  VertexSet left, right;
  for (VertexId x : nc.cut.left) left.push_back(r.base_vertex(x));
  for (VertexId x : nc.cut.right) right.push_back(r.base_vertex(x));
  return cut_from_sides(r.base_vertex_count(), std::move(left), std::move(right));
}

/// Embeds a valid directed cut into the reduced graph: left maps to
/// out-copies, right to in-copies, separator = rest. The separator weight
/// grows by exactly the shift. The cut is validated against the reduced
/// graph, whose cross edges encode exactly the base arcs.
inline NormalizedCut lift_directed_cut(const ReducedGraph& r, const VertexCut& cut) {
  int n = r.base_vertex_count();
  std::vector<char> side;
  if (auto bad = detail::assign_sides(n, cut, side))
    fail(ErrorCode::InvalidCut, bad->message());
  for (VertexId u : cut.left)
    for (VertexId v : cut.right)
      if (r.graph().has_edge(r.out_copy(u), r.in_copy(v)))
        fail(ErrorCode::InvalidCut,
             CutViolation{CutViolation::CrossingEdge, u, v}.message());
  VertexSet left, right;
  for (VertexId v : cut.left) left.push_back(r.out_copy(v));
  for (VertexId v : cut.right) right.push_back(r.in_copy(v));
  return NormalizedCut{
      cut_from_sides(r.graph().vertex_count(), std::move(left), std::move(right))};
}

/// Weight of the neighborhood, in the reduced graph, of a nonempty set of
/// in-copy vertices. Equals the base in-neighborhood weight of the preimage
/// plus the total base weight.
inline std::int64_t reduced_neighborhood_weight(const ReducedGraph& r,
                                                const VertexSet& r_in) {
  if (r_in.empty()) fail(ErrorCode::EmptySet, "in-copy set must be nonempty");
  const UndirectedGraph& g = r.graph();
  std::vector<char> member(static_cast<std::size_t>(g.vertex_count()), 0);
  for (VertexId x : r_in) {
    detail::check_vertex_range(g.vertex_count(), x, "vertex");
    if (r.is_out_copy(x))
      fail(ErrorCode::VertexOutOfRange,
           "vertex " + std::to_string(x) + " is not an in-copy");
    member[static_cast<std::size_t>(x)] = 1;
  }
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  std::int64_t sum = 0;
  for (VertexId x : r_in)
    for (VertexId y : g.neighbors(x))
      if (!member[static_cast<std::size_t>(y)] && !seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = 1;
        sum += g.weight(y);
      }
  return sum;
}

}  // namespace vcut
