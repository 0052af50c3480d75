#pragma once

// Exponential-time ground truth. Every variant is answered by enumerating
// candidate separators (subsets by popcount, then lexicographic) and testing
// reachability from scratch, so correctness is immediate from the
// definitions. Bitmask adjacency keeps it usable up to around 20 vertices.

#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "vcut/graph.hpp"

namespace vcut {

struct OracleBudget {
  int max_n = 12;
  std::int64_t max_subsets = std::int64_t(1) << 20;
};

struct OracleResult {
  CutValue value;
  std::optional<VertexCut> cut;
};

namespace detail {

struct MaskGraph {
  int n = 0;
  bool directed = false;
  std::vector<std::uint64_t> out, in;  // identical for undirected graphs
  std::vector<Weight> w;

  explicit MaskGraph(const DirectedGraph& g)
      : n(g.vertex_count()), directed(true), out(n, 0), in(n, 0), w(g.weights()) {
    for (const auto& [a, b] : g.arcs()) {
      out[static_cast<std::size_t>(a)] |= std::uint64_t(1) << b;
      in[static_cast<std::size_t>(b)] |= std::uint64_t(1) << a;
    }
  }
  explicit MaskGraph(const UndirectedGraph& g)
      : n(g.vertex_count()), directed(false), out(n, 0), w(g.weights()) {
    for (const auto& [a, b] : g.edges()) {
      out[static_cast<std::size_t>(a)] |= std::uint64_t(1) << b;
      out[static_cast<std::size_t>(b)] |= std::uint64_t(1) << a;
    }
    in = out;
  }

  std::uint64_t reach(const std::vector<std::uint64_t>& adj, std::uint64_t kept,
                      int start) const {
    std::uint64_t seen = std::uint64_t(1) << start;
    std::uint64_t frontier = seen;
    while (frontier) {
      std::uint64_t next = 0;
      while (frontier) {
        int v = std::countr_zero(frontier);
        frontier &= frontier - 1;
        next |= adj[static_cast<std::size_t>(v)];
      }
      next &= kept & ~seen;
      seen |= next;
      frontier = next;
    }
    return seen;
  }

  bool separated_pair(std::uint64_t kept, int s, int t) const {
    return (reach(out, kept, s) & (std::uint64_t(1) << t)) == 0;
  }

  // Remaining vertices fail to be one (strongly) connected piece.
  bool disconnected(std::uint64_t kept) const {
    if (std::popcount(kept) <= 1) return false;
    int start = std::countr_zero(kept);
    if (reach(out, kept, start) != kept) return true;
    return directed && reach(in, kept, start) != kept;
  }

  std::int64_t set_weight(std::uint64_t mask) const {
    std::int64_t sum = 0;
    while (mask) {
      int v = std::countr_zero(mask);
      mask &= mask - 1;
      sum += w[static_cast<std::size_t>(v)];
    }
    return sum;
  }
};

inline VertexSet mask_to_set(std::uint64_t mask) {
  VertexSet s;
  while (mask) {
    s.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return s;
}

inline void check_budget(const MaskGraph& g, int free_vertices, const OracleBudget& b) {
  if (g.n > b.max_n || g.n > 62)
    fail(ErrorCode::BudgetExceeded,
         "oracle refuses n=" + std::to_string(g.n) + " (budget max_n=" +
             std::to_string(b.max_n) + ")");
  if (free_vertices < 63 && (std::int64_t(1) << free_vertices) > b.max_subsets)
    fail(ErrorCode::BudgetExceeded, "oracle subset budget exceeded");
}

// Enumerates subsets of candidates by popcount then lexicographic order,
// pruning by weight against the best value found so far. qualifies(mask)
// decides whether a subset is a separator for the variant at hand.
template <typename Qualifies>
std::pair<CutValue, std::uint64_t> enumerate_min_separator(const MaskGraph& g,
                                                           const VertexSet& candidates,
                                                           Qualifies qualifies) {
  CutValue best = CutValue::no_cut();
  std::uint64_t best_mask = 0;
  int m = static_cast<int>(candidates.size());
  Weight min_w = 0;
  for (VertexId v : candidates)
    min_w = (min_w == 0) ? g.w[static_cast<std::size_t>(v)]
                         : std::min(min_w, g.w[static_cast<std::size_t>(v)]);
  for (int k = 0; k <= m; ++k) {
    if (best.is_finite() &&
        static_cast<std::int64_t>(k) * min_w >= best.value())
      break;
    std::vector<int> pick(static_cast<std::size_t>(k));
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      std::uint64_t mask = 0;
      std::int64_t weight = 0;
      for (int i : pick) {
        mask |= std::uint64_t(1) << candidates[static_cast<std::size_t>(i)];
        weight += g.w[static_cast<std::size_t>(candidates[static_cast<std::size_t>(i)])];
      }
      if ((!best.is_finite() || weight < best.value()) && qualifies(mask)) {
        best = CutValue::finite(weight);
        best_mask = mask;
      }
      // next k-combination in lexicographic order
      int i = k - 1;
      while (i >= 0 && pick[static_cast<std::size_t>(i)] == m - k + i) --i;
      if (i < 0) break;
      ++pick[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j)
        pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return {best, best_mask};
}

// Witness sides for a separator of the whole graph: for directed graphs the
// right side is a strongly connected component without incoming arcs from
// the rest; for undirected graphs the left side is one connected component.
inline VertexCut global_witness(const MaskGraph& g, std::uint64_t sep_mask) {
  std::uint64_t kept = ((std::uint64_t(1) << g.n) - 1) & ~sep_mask;
  if (!g.directed) {
    int start = std::countr_zero(kept);
    std::uint64_t left = g.reach(g.out, kept, start);
    return VertexCut{mask_to_set(left), mask_to_set(sep_mask), mask_to_set(kept & ~left)};
  }
  std::uint64_t rest = kept;
  while (rest) {
    int v = std::countr_zero(rest);
    rest &= rest - 1;
    std::uint64_t fwd = g.reach(g.out, kept, v);
    std::uint64_t bwd = g.reach(g.in, kept, v);
    std::uint64_t scc = fwd & bwd;
    if (bwd == scc) {  // no arcs enter this component from outside
      return VertexCut{mask_to_set(kept & ~scc), mask_to_set(sep_mask), mask_to_set(scc)};
    }
  }
  throw std::logic_error("disconnected remainder has a source component");
}

inline OracleResult oracle_global_impl(const MaskGraph& g, const OracleBudget& b) {
  check_budget(g, g.n, b);
  VertexSet candidates(static_cast<std::size_t>(g.n));
  std::iota(candidates.begin(), candidates.end(), 0);
  std::uint64_t all = (std::uint64_t(1) << g.n) - 1;
  auto [best, mask] = enumerate_min_separator(g, candidates, [&](std::uint64_t s) {
    std::uint64_t kept = all & ~s;
    return std::popcount(kept) >= 2 && g.disconnected(kept);
  });
  if (!best.is_finite()) return OracleResult{best, std::nullopt};
  return OracleResult{best, global_witness(g, mask)};
}

inline OracleResult oracle_pair_impl(const MaskGraph& g, VertexId s, VertexId t,
                                     const OracleBudget& b) {
  check_vertex_range(g.n, s, "source");
  check_vertex_range(g.n, t, "sink");
  if (s == t) return OracleResult{CutValue::no_cut(), std::nullopt};
  check_budget(g, g.n - 2, b);
  if (g.out[static_cast<std::size_t>(s)] & (std::uint64_t(1) << t))
    return OracleResult{CutValue::no_cut(), std::nullopt};
  VertexSet candidates;
  for (int v = 0; v < g.n; ++v)
    if (v != s && v != t) candidates.push_back(v);
  std::uint64_t all = (std::uint64_t(1) << g.n) - 1;
  auto [best, mask] = enumerate_min_separator(g, candidates, [&](std::uint64_t sep) {
    return g.separated_pair(all & ~sep, s, t);
  });
  std::uint64_t kept = all & ~mask;
  std::uint64_t left = g.reach(g.out, kept, s);
  return OracleResult{best,
                      VertexCut{mask_to_set(left), mask_to_set(mask), mask_to_set(kept & ~left)}};
}

}  // namespace detail

inline OracleResult oracle_global(const DirectedGraph& g, const OracleBudget& b = {}) {
  return detail::oracle_global_impl(detail::MaskGraph(g), b);
}
inline OracleResult oracle_global(const UndirectedGraph& g, const OracleBudget& b = {}) {
  return detail::oracle_global_impl(detail::MaskGraph(g), b);
}

/// NoCut exactly when s == t or (s, t) is an arc/edge.
inline OracleResult oracle_pair(const DirectedGraph& g, VertexId s, VertexId t,
                                const OracleBudget& b = {}) {
  return detail::oracle_pair_impl(detail::MaskGraph(g), s, t, b);
}
inline OracleResult oracle_pair(const UndirectedGraph& g, VertexId s, VertexId t,
                                const OracleBudget& b = {}) {
  return detail::oracle_pair_impl(detail::MaskGraph(g), s, t, b);
}

namespace detail {

template <typename Graph, typename Pairs>
OracleResult oracle_min_over_pairs(const Graph& g, Pairs&& pairs, const OracleBudget& b) {
  OracleResult best{CutValue::no_cut(), std::nullopt};
  for (const auto& [s, t] : pairs) {
    OracleResult r = oracle_pair(g, s, t, b);
    if (r.value < best.value) best = std::move(r);
  }
  return best;
}

}  // namespace detail

inline OracleResult oracle_source(const DirectedGraph& g, VertexId s,
                                  const OracleBudget& b = {}) {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (int t = 0; t < g.vertex_count(); ++t)
    if (t != s && !g.has_arc(s, t)) pairs.emplace_back(s, t);
  return detail::oracle_min_over_pairs(g, pairs, b);
}

inline OracleResult oracle_sink(const DirectedGraph& g, VertexId t,
                                const OracleBudget& b = {}) {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (int s = 0; s < g.vertex_count(); ++s)
    if (s != t && !g.has_arc(s, t)) pairs.emplace_back(s, t);
  return detail::oracle_min_over_pairs(g, pairs, b);
}

/// Undirected single-source and single-sink cuts coincide.
inline OracleResult oracle_source(const UndirectedGraph& g, VertexId s,
                                  const OracleBudget& b = {}) {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (int t = 0; t < g.vertex_count(); ++t)
    if (t != s && !g.has_edge(s, t)) pairs.emplace_back(s, t);
  return detail::oracle_min_over_pairs(g, pairs, b);
}

inline OracleResult oracle_steiner(const DirectedGraph& g, VertexSet terminals,
                                   const OracleBudget& b = {}) {
  std::sort(terminals.begin(), terminals.end());
  terminals.erase(std::unique(terminals.begin(), terminals.end()), terminals.end());
  if (terminals.size() < 2)
    fail(ErrorCode::TerminalSetTooSmall, "need at least two distinct terminals");
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (VertexId s : terminals)
    for (VertexId t : terminals)
      if (s != t && !g.has_arc(s, t)) pairs.emplace_back(s, t);
  return detail::oracle_min_over_pairs(g, pairs, b);
}

inline OracleResult oracle_steiner(const UndirectedGraph& g, VertexSet terminals,
                                   const OracleBudget& b = {}) {
  std::sort(terminals.begin(), terminals.end());
  terminals.erase(std::unique(terminals.begin(), terminals.end()), terminals.end());
  if (terminals.size() < 2)
    fail(ErrorCode::TerminalSetTooSmall, "need at least two distinct terminals");
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (std::size_t i = 0; i < terminals.size(); ++i)
    for (std::size_t j = i + 1; j < terminals.size(); ++j)
      if (!g.has_edge(terminals[i], terminals[j]))
        pairs.emplace_back(terminals[i], terminals[j]);
  return detail::oracle_min_over_pairs(g, pairs, b);
}

inline std::vector<std::vector<CutValue>> oracle_all_pairs(const DirectedGraph& g,
                                                           const OracleBudget& b = {}) {
  int n = g.vertex_count();
  std::vector<std::vector<CutValue>> m(static_cast<std::size_t>(n),
                                       std::vector<CutValue>(static_cast<std::size_t>(n),
                                                             CutValue::no_cut()));
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      if (s != t)
        m[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)] =
            oracle_pair(g, s, t, b).value;
  return m;
}

inline std::vector<std::vector<CutValue>> oracle_all_pairs(const UndirectedGraph& g,
                                                           const OracleBudget& b = {}) {
  int n = g.vertex_count();
  std::vector<std::vector<CutValue>> m(static_cast<std::size_t>(n),
                                       std::vector<CutValue>(static_cast<std::size_t>(n),
                                                             CutValue::no_cut()));
  for (int s = 0; s < n; ++s)
    for (int t = s + 1; t < n; ++t) {
      CutValue v = oracle_pair(g, s, t, b).value;
      m[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)] = v;
      m[static_cast<std::size_t>(t)][static_cast<std::size_t>(s)] = v;
    }
  return m;
}

}  // namespace vcut
