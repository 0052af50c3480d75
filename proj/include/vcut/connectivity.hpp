#pragma once

// Solvers for every vertex-cut variant on directed and undirected graphs.
// Directed queries run either through the reduction to an undirected graph
// or directly on the split network of the input; both paths return equal
// values, and reduction-path solutions keep the undirected cut they were
// extracted from as a certificate.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vcut/flow.hpp"
#include "vcut/graph.hpp"
#include "vcut/oracle.hpp"
#include "vcut/reduction.hpp"

namespace vcut {

enum class SolvePath { Reduction, Direct };

struct VariantQuery {
  enum class Kind { Global, Pair, Source, Sink, Steiner, AllPairs };
  Kind kind = Kind::Global;
  VertexId s = -1;
  VertexId t = -1;
  VertexSet terminals;
};

struct Solution {
  CutValue value;
  std::optional<VertexCut> cut;              // on the queried graph
  std::optional<NormalizedCut> certificate;  // reduced-graph cut, reduction path only
};

namespace detail {

inline Solution solution_from_st(int n, const STCutResult& r) {
  if (!r.value.is_finite()) return Solution{CutValue::no_cut(), std::nullopt, std::nullopt};
  return Solution{r.value, cut_from_left_separator(n, r.witness_left, r.separator),
                  std::nullopt};
}

// Minimum over a fixed sequence of pair queries. Only a strictly better cut
// replaces the incumbent, and later queries abort once they match it, so the
// witness is determined by evaluation order.
class PairSweep {
 public:
  explicit PairSweep(SplitGraphSolver& solver) : solver_(solver) {}

  void consider(VertexId s, VertexId t) {
    if (!best_) {
      STCutResult r = solver_.query(s, t);
      if (r.value.is_finite()) best_ = std::move(r);
      return;
    }
    auto r = solver_.query_below(s, t, best_->value.value());
    if (r && r->value.is_finite()) best_ = std::move(*r);
  }

  const std::optional<STCutResult>& best() const noexcept { return best_; }

 private:
  SplitGraphSolver& solver_;
  std::optional<STCutResult> best_;
};

}  // namespace detail

inline Solution undirected_pair(const UndirectedGraph& g, VertexId s, VertexId t) {
  return detail::solution_from_st(g.vertex_count(), st_vertex_cut(g, s, t));
}

/// Minimum cut over all tri-partitions. Pivot scheme: with p of minimum
/// weighted degree, every minimum cut either separates p from a non-neighbor
/// or separates two non-adjacent neighbors of p.
inline Solution undirected_global(const UndirectedGraph& g) {
  if (is_complete(g))
    fail(ErrorCode::CompleteGraph, "global cut undefined on a complete graph");
  int n = g.vertex_count();
  VertexId pivot = 0;
  std::int64_t pivot_degree = -1;
  for (int v = 0; v < n; ++v) {
    std::int64_t d = weight_of(g, g.neighbors(v));
    if (pivot_degree < 0 || d < pivot_degree) {
      pivot = v;
      pivot_degree = d;
    }
  }
  SplitGraphSolver solver(g);
  detail::PairSweep sweep(solver);
  for (int t = 0; t < n; ++t)
    if (t != pivot && !g.has_edge(pivot, t)) sweep.consider(pivot, t);
  const VertexSet& nb = g.neighbors(pivot);
  for (std::size_t i = 0; i < nb.size(); ++i)
    for (std::size_t j = i + 1; j < nb.size(); ++j)
      if (!g.has_edge(nb[i], nb[j])) sweep.consider(nb[i], nb[j]);
  if (!sweep.best()) throw std::logic_error("non-complete graph produced no candidate pair");
  return detail::solution_from_st(n, *sweep.best());
}

/// Minimum cut with v on the left; NoCut when v dominates the graph.
inline Solution undirected_source(const UndirectedGraph& g, VertexId v) {
  detail::check_vertex_range(g.vertex_count(), v, "source");
  SplitGraphSolver solver(g);
  detail::PairSweep sweep(solver);
  for (int t = 0; t < g.vertex_count(); ++t)
    if (t != v && !g.has_edge(v, t)) sweep.consider(v, t);
  if (!sweep.best()) return Solution{CutValue::no_cut(), std::nullopt, std::nullopt};
  return detail::solution_from_st(g.vertex_count(), *sweep.best());
}

/// Minimum cut separating two terminals; NoCut when the terminals form a
/// clique.
inline Solution undirected_steiner(const UndirectedGraph& g, VertexSet terminals) {
  std::sort(terminals.begin(), terminals.end());
  terminals.erase(std::unique(terminals.begin(), terminals.end()), terminals.end());
  if (terminals.size() < 2)
    fail(ErrorCode::TerminalSetTooSmall, "need at least two distinct terminals");
  for (VertexId v : terminals) detail::check_vertex_range(g.vertex_count(), v, "terminal");
  SplitGraphSolver solver(g);
  detail::PairSweep sweep(solver);
  for (std::size_t i = 0; i < terminals.size(); ++i)
    for (std::size_t j = i + 1; j < terminals.size(); ++j)
      if (!g.has_edge(terminals[i], terminals[j])) sweep.consider(terminals[i], terminals[j]);
  if (!sweep.best()) return Solution{CutValue::no_cut(), std::nullopt, std::nullopt};
  return detail::solution_from_st(g.vertex_count(), *sweep.best());
}

namespace detail {

// Translates an undirected solution on the reduced graph back to the base
// graph: normalize, extract, subtract the weight shift.
inline Solution shift_down(const ReducedGraph& r, const Solution& reduced) {
  if (!reduced.value.is_finite())
    return Solution{CutValue::no_cut(), std::nullopt, std::nullopt};
  NormalizedCut nc = normalize_cut(r, *reduced.cut);
  VertexCut cut = extract_directed_cut(r, nc);
  return Solution{reduced.value.shifted(-r.base_total_weight()), std::move(cut),
                  std::move(nc)};
}

}  // namespace detail

inline Solution directed_global(const DirectedGraph& g,
                                SolvePath path = SolvePath::Reduction) {
  if (is_complete(g))
    fail(ErrorCode::CompleteGraph, "global cut undefined on a complete digraph");
  int n = g.vertex_count();
  if (path == SolvePath::Reduction) {
    ReducedGraph r = build_reduction(g);
    return detail::shift_down(r, undirected_global(r.graph()));
  }
  VertexId pivot = 0;
  std::int64_t pivot_degree = -1;
  for (int v = 0; v < n; ++v) {
    std::int64_t d = weight_of(g, g.out_neighbors(v)) + weight_of(g, g.in_neighbors(v));
    if (pivot_degree < 0 || d < pivot_degree) {
      pivot = v;
      pivot_degree = d;
    }
  }
  SplitGraphSolver solver(g);
  detail::PairSweep sweep(solver);
  for (int t = 0; t < n; ++t)
    if (t != pivot && !g.has_arc(pivot, t)) sweep.consider(pivot, t);
  for (int s = 0; s < n; ++s)
    if (s != pivot && !g.has_arc(s, pivot)) sweep.consider(s, pivot);
  for (VertexId u : g.in_neighbors(pivot))
    for (VertexId v : g.out_neighbors(pivot))
      if (u != v && !g.has_arc(u, v)) sweep.consider(u, v);
  if (!sweep.best()) throw std::logic_error("non-complete digraph produced no candidate pair");
  return detail::solution_from_st(n, *sweep.best());
}

inline Solution directed_pair(const DirectedGraph& g, VertexId s, VertexId t,
                              SolvePath path = SolvePath::Reduction) {
  detail::check_vertex_range(g.vertex_count(), s, "source");
  detail::check_vertex_range(g.vertex_count(), t, "sink");
  if (s == t) fail(ErrorCode::SamePair, "source equals sink");
  if (path == SolvePath::Direct)
    return detail::solution_from_st(g.vertex_count(), st_vertex_cut(g, s, t));
  ReducedGraph r = build_reduction(g);
  return detail::shift_down(r, undirected_pair(r.graph(), r.out_copy(s), r.in_copy(t)));
}

inline Solution directed_source(const DirectedGraph& g, VertexId s,
                                SolvePath path = SolvePath::Reduction) {
  detail::check_vertex_range(g.vertex_count(), s, "source");
  if (path == SolvePath::Reduction) {
    ReducedGraph r = build_reduction(g);
    return detail::shift_down(r, undirected_source(r.graph(), r.out_copy(s)));
  }
  SplitGraphSolver solver(g);
  detail::PairSweep sweep(solver);
  for (int t = 0; t < g.vertex_count(); ++t)
    if (t != s && !g.has_arc(s, t)) sweep.consider(s, t);
  if (!sweep.best()) return Solution{CutValue::no_cut(), std::nullopt, std::nullopt};
  return detail::solution_from_st(g.vertex_count(), *sweep.best());
}

inline Solution directed_sink(const DirectedGraph& g, VertexId t,
                              SolvePath path = SolvePath::Reduction) {
  detail::check_vertex_range(g.vertex_count(), t, "sink");
  if (path == SolvePath::Reduction) {
    ReducedGraph r = build_reduction(g);
    return detail::shift_down(r, undirected_source(r.graph(), r.in_copy(t)));
  }
  SplitGraphSolver solver(g);
  detail::PairSweep sweep(solver);
  for (int s = 0; s < g.vertex_count(); ++s)
    if (s != t && !g.has_arc(s, t)) sweep.consider(s, t);
  if (!sweep.best()) return Solution{CutValue::no_cut(), std::nullopt, std::nullopt};
  return detail::solution_from_st(g.vertex_count(), *sweep.best());
}

inline Solution directed_steiner(const DirectedGraph& g, VertexSet terminals,
                                 SolvePath path = SolvePath::Reduction) {
  std::sort(terminals.begin(), terminals.end());
  terminals.erase(std::unique(terminals.begin(), terminals.end()), terminals.end());
  if (terminals.size() < 2)
    fail(ErrorCode::TerminalSetTooSmall, "need at least two distinct terminals");
  for (VertexId v : terminals) detail::check_vertex_range(g.vertex_count(), v, "terminal");
  if (path == SolvePath::Reduction) {
    ReducedGraph r = build_reduction(g);
    VertexSet lifted;
    lifted.reserve(2 * terminals.size());
    for (VertexId v : terminals) lifted.push_back(r.out_copy(v));
    for (VertexId v : terminals) lifted.push_back(r.in_copy(v));
    return detail::shift_down(r, undirected_steiner(r.graph(), std::move(lifted)));
  }
  SplitGraphSolver solver(g);
  detail::PairSweep sweep(solver);
  for (VertexId s : terminals)
    for (VertexId t : terminals)
      if (s != t && !g.has_arc(s, t)) sweep.consider(s, t);
  if (!sweep.best()) return Solution{CutValue::no_cut(), std::nullopt, std::nullopt};
  return detail::solution_from_st(g.vertex_count(), *sweep.best());
}

/// Matrix of pair cut values; NoCut on the diagonal and on arcs.
inline std::vector<std::vector<CutValue>> directed_all_pairs(
    const DirectedGraph& g, SolvePath path = SolvePath::Reduction) {
  int n = g.vertex_count();
  std::vector<std::vector<CutValue>> m(
      static_cast<std::size_t>(n),
      std::vector<CutValue>(static_cast<std::size_t>(n), CutValue::no_cut()));
  if (path == SolvePath::Direct) {
    SplitGraphSolver solver(g);
    for (int s = 0; s < n; ++s)
      for (int t = 0; t < n; ++t)
        if (s != t)
          m[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)] =
              solver.query(s, t).value;
    return m;
  }
  ReducedGraph r = build_reduction(g);
  SplitGraphSolver solver(r.graph());
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      if (s != t)
        m[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)] =
            solver.query(r.out_copy(s), r.in_copy(t))
                .value.shifted(-r.base_total_weight());
  return m;
}

inline std::vector<std::vector<CutValue>> undirected_all_pairs(const UndirectedGraph& g) {
  int n = g.vertex_count();
  std::vector<std::vector<CutValue>> m(
      static_cast<std::size_t>(n),
      std::vector<CutValue>(static_cast<std::size_t>(n), CutValue::no_cut()));
  SplitGraphSolver solver(g);
  for (int s = 0; s < n; ++s)
    for (int t = s + 1; t < n; ++t) {
      CutValue v = solver.query(s, t).value;
      m[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)] = v;
      m[static_cast<std::size_t>(t)][static_cast<std::size_t>(s)] = v;
    }
  return m;
}

/// Dispatch for single-value variants; all-pairs has its own matrix entry
/// points above.
inline Solution solve_variant(const DirectedGraph& g, const VariantQuery& q,
                              SolvePath path = SolvePath::Reduction) {
  switch (q.kind) {
    case VariantQuery::Kind::Global:
      return directed_global(g, path);
    case VariantQuery::Kind::Pair:
      return directed_pair(g, q.s, q.t, path);
    case VariantQuery::Kind::Source:
      return directed_source(g, q.s, path);
    case VariantQuery::Kind::Sink:
      return directed_sink(g, q.t, path);
    case VariantQuery::Kind::Steiner:
      return directed_steiner(g, q.terminals, path);
    case VariantQuery::Kind::AllPairs:
      break;
  }
  throw std::logic_error("all-pairs queries return a matrix, not a Solution");
}

inline Solution solve_variant(const UndirectedGraph& g, const VariantQuery& q) {
  switch (q.kind) {
    case VariantQuery::Kind::Global:
      return undirected_global(g);
    case VariantQuery::Kind::Pair:
      return undirected_pair(g, q.s, q.t);
    case VariantQuery::Kind::Source:
      return undirected_source(g, q.s);
    case VariantQuery::Kind::Sink:
      return undirected_source(g, q.t);
    case VariantQuery::Kind::Steiner:
      return undirected_steiner(g, q.terminals);
    case VariantQuery::Kind::AllPairs:
      break;
  }
  throw std::logic_error("all-pairs queries return a matrix, not a Solution");
}

inline OracleResult oracle_variant(const DirectedGraph& g, const VariantQuery& q,
                                   const OracleBudget& b = {}) {
  switch (q.kind) {
    case VariantQuery::Kind::Global:
      return oracle_global(g, b);
    case VariantQuery::Kind::Pair:
      return oracle_pair(g, q.s, q.t, b);
    case VariantQuery::Kind::Source:
      return oracle_source(g, q.s, b);
    case VariantQuery::Kind::Sink:
      return oracle_sink(g, q.t, b);
    case VariantQuery::Kind::Steiner:
      return oracle_steiner(g, q.terminals, b);
    case VariantQuery::Kind::AllPairs:
      break;
  }
  throw std::logic_error("all-pairs queries return a matrix, not an OracleResult");
}

inline OracleResult oracle_variant(const UndirectedGraph& g, const VariantQuery& q,
                                   const OracleBudget& b = {}) {
  switch (q.kind) {
    case VariantQuery::Kind::Global:
      return oracle_global(g, b);
    case VariantQuery::Kind::Pair:
      return oracle_pair(g, q.s, q.t, b);
    case VariantQuery::Kind::Source:
      return oracle_source(g, q.s, b);
    case VariantQuery::Kind::Sink:
      return oracle_source(g, q.t, b);
    case VariantQuery::Kind::Steiner:
      return oracle_steiner(g, q.terminals, b);
    case VariantQuery::Kind::AllPairs:
      break;
  }
  throw std::logic_error("all-pairs queries return a matrix, not an OracleResult");
}

}  // namespace vcut
