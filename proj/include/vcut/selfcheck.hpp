#pragma once

// Per-instance cross checks of every identity the reduction promises,
// shared by the verify command and the acceptance suite. Each check either
// passes, fails with a detail string, or reports that it was skipped
// (complete input, or an oracle comparison beyond the enumeration budget).

#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "vcut/connectivity.hpp"
#include "vcut/flow.hpp"
#include "vcut/graph.hpp"
#include "vcut/oracle.hpp"
#include "vcut/reduction.hpp"

namespace vcut::selfcheck {

struct CheckStatus {
  enum Kind { Pass, Fail, Skip } kind = Pass;
  std::string detail;

  static CheckStatus pass() { return {}; }
  static CheckStatus fail(std::string d) { return {Fail, std::move(d)}; }
  static CheckStatus skip(std::string d) { return {Skip, std::move(d)}; }
};

/// Independent enumeration of the in-neighborhood weight of a vertex set;
/// the ground-truth side of the neighborhood identity.
inline std::int64_t in_neighborhood_weight(const DirectedGraph& g, const VertexSet& right) {
  std::vector<char> in_right(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<char> counted(static_cast<std::size_t>(g.vertex_count()), 0);
  for (VertexId v : right) in_right[static_cast<std::size_t>(v)] = 1;
  std::int64_t sum = 0;
  for (VertexId v : right)
    for (VertexId u : g.in_neighbors(v))
      if (!in_right[static_cast<std::size_t>(u)] && !counted[static_cast<std::size_t>(u)]) {
        counted[static_cast<std::size_t>(u)] = 1;
        sum += g.weight(u);
      }
  return sum;
}

/// Random valid directed cut: the separator starts as the in-neighborhood of
/// a random right side and occasionally absorbs extra left vertices, so
/// non-minimum cuts are produced too. Returns nullopt when the draw leaves
/// no left side.
inline std::optional<VertexCut> random_valid_directed_cut(const DirectedGraph& g,
                                                          std::mt19937_64& rng) {
  int n = g.vertex_count();
  if (n < 2) return std::nullopt;
  std::vector<char> in_right(static_cast<std::size_t>(n), 0);
  std::vector<char> in_sep(static_cast<std::size_t>(n), 0);
  int right_size = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n));
  for (int i = 0; i < right_size; ++i)
    in_right[static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(n))] = 1;
  for (int v = 0; v < n; ++v)
    if (in_right[static_cast<std::size_t>(v)])
      for (VertexId u : g.in_neighbors(v))
        if (!in_right[static_cast<std::size_t>(u)]) in_sep[static_cast<std::size_t>(u)] = 1;
  VertexSet left, sep, right;
  for (int v = 0; v < n; ++v) {
    if (in_right[static_cast<std::size_t>(v)])
      right.push_back(v);
    else if (in_sep[static_cast<std::size_t>(v)])
      sep.push_back(v);
    else
      left.push_back(v);
  }
  if (left.empty() || right.empty()) return std::nullopt;
  if (left.size() > 1 && rng() % 2 == 0) {
    VertexSet kept;
    for (VertexId v : left) {
      if (kept.empty() || rng() % 3 != 0)
        kept.push_back(v);
      else
        sep.push_back(v);
    }
    left = std::move(kept);
    std::sort(sep.begin(), sep.end());
  }
  return VertexCut{std::move(left), std::move(sep), std::move(right)};
}

namespace detail {

inline std::optional<std::string> bad_solution(const DirectedGraph& g, const Solution& sol,
                                               const char* what) {
  if (!sol.value.is_finite()) return std::nullopt;
  if (!sol.cut) return std::string(what) + ": finite value without a witness";
  if (auto v = validate_cut(g, *sol.cut))
    return std::string(what) + ": witness invalid, " + v->message();
  if (weight_of(g, sol.cut->separator) != sol.value.value())
    return std::string(what) + ": separator weight differs from reported value";
  return std::nullopt;
}

}  // namespace detail

inline CheckStatus check_size_identity(const DirectedGraph& g) {
  ReducedGraph r = build_reduction(g);
  std::int64_t n = g.vertex_count();
  std::int64_t want_edges = n * (n - 1) + n + g.arc_count();
  if (r.graph().vertex_count() != 2 * n)
    return CheckStatus::fail("reduced graph does not have 2n vertices");
  if (r.graph().edge_count() != want_edges) {
    std::ostringstream os;
    os << "expected " << want_edges << " edges, got " << r.graph().edge_count();
    return CheckStatus::fail(os.str());
  }
  for (int v = 0; v < n; ++v)
    if (r.graph().weight(r.out_copy(v)) != g.weight(v) ||
        r.graph().weight(r.in_copy(v)) != g.weight(v))
      return CheckStatus::fail("copy weights differ from base weights");
  return CheckStatus::pass();
}

/// Neighborhood identity; exhaustive over in-copy subsets when n <= 6, the
/// given number of random subsets otherwise.
inline CheckStatus check_neighborhood_identity(const DirectedGraph& g, int samples,
                                               std::uint64_t seed) {
  ReducedGraph r = build_reduction(g);
  int n = g.vertex_count();
  auto check_one = [&](const VertexSet& right) -> bool {
    VertexSet right_in;
    right_in.reserve(right.size());
    for (VertexId v : right) right_in.push_back(r.in_copy(v));
    return reduced_neighborhood_weight(r, right_in) ==
           in_neighborhood_weight(g, right) + g.total_weight();
  };
  if (n <= 6) {
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << n); ++mask) {
      VertexSet right;
      for (int v = 0; v < n; ++v)
        if (mask & (std::uint64_t(1) << v)) right.push_back(v);
      if (!check_one(right)) return CheckStatus::fail("neighborhood identity violated");
    }
    return CheckStatus::pass();
  }
  std::mt19937_64 rng(seed);
  for (int i = 0; i < samples; ++i) {
    VertexSet right;
    for (int v = 0; v < n; ++v)
      if (rng() % 2) right.push_back(v);
    if (right.empty()) right.push_back(static_cast<VertexId>(rng() % n));
    if (!check_one(right)) return CheckStatus::fail("neighborhood identity violated");
  }
  return CheckStatus::pass();
}

/// Reduction and direct global solvers agree, witnesses are valid, and the
/// certificate reproduces the extracted cut.
inline CheckStatus check_global_equivalence(const DirectedGraph& g) {
  if (is_complete(g)) return CheckStatus::skip("complete digraph");
  Solution red = directed_global(g, SolvePath::Reduction);
  Solution dir = directed_global(g, SolvePath::Direct);
  if (red.value != dir.value)
    return CheckStatus::fail("global values differ: reduction " + red.value.str() +
                             ", direct " + dir.value.str());
  if (auto bad = detail::bad_solution(g, red, "reduction")) return CheckStatus::fail(*bad);
  if (auto bad = detail::bad_solution(g, dir, "direct")) return CheckStatus::fail(*bad);
  if (!red.certificate) return CheckStatus::fail("reduction path returned no certificate");
  ReducedGraph r = build_reduction(g);
  VertexCut from_cert = extract_directed_cut(r, *red.certificate);
  if (from_cert.left != red.cut->left || from_cert.separator != red.cut->separator ||
      from_cert.right != red.cut->right)
    return CheckStatus::fail("certificate does not extract to the returned cut");
  return CheckStatus::pass();
}

/// Both global oracle values obey the weight shift and agree with the
/// solvers. Needs the oracle on 2n vertices, so gated on 2n <= max_oracle_n.
inline CheckStatus check_global_oracle_shift(const DirectedGraph& g, int max_oracle_n = 18) {
  if (is_complete(g)) return CheckStatus::skip("complete digraph");
  int n = g.vertex_count();
  if (2 * n > max_oracle_n) return CheckStatus::skip("oracle budget");
  OracleBudget budget{max_oracle_n, std::int64_t(1) << max_oracle_n};
  ReducedGraph r = build_reduction(g);
  OracleResult base = oracle_global(g, budget);
  OracleResult reduced = oracle_global(r.graph(), budget);
  if (!base.value.is_finite() || !reduced.value.is_finite())
    return CheckStatus::fail("oracle found no cut on a non-complete instance");
  if (reduced.value.value() != base.value.value() + g.total_weight())
    return CheckStatus::fail("global shift identity violated");
  if (directed_global(g, SolvePath::Reduction).value != base.value)
    return CheckStatus::fail("reduction path disagrees with the oracle");
  if (directed_global(g, SolvePath::Direct).value != base.value)
    return CheckStatus::fail("direct path disagrees with the oracle");
  return CheckStatus::pass();
}

/// All ordered pairs: both paths agree, NoCut exactly on arcs and the
/// diagonal, witnesses valid on both paths.
inline CheckStatus check_pair_equivalence(const DirectedGraph& g) {
  int n = g.vertex_count();
  auto red = directed_all_pairs(g, SolvePath::Reduction);
  auto dir = directed_all_pairs(g, SolvePath::Direct);
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      const CutValue& rv = red[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)];
      const CutValue& dv = dir[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)];
      if (rv != dv) {
        std::ostringstream os;
        os << "pair (" << s << "," << t << "): reduction " << rv.str() << ", direct "
           << dv.str();
        return CheckStatus::fail(os.str());
      }
      bool expect_nocut = s == t || g.has_arc(s, t);
      if (rv.is_finite() == expect_nocut) {
        std::ostringstream os;
        os << "pair (" << s << "," << t << "): NoCut classification wrong";
        return CheckStatus::fail(os.str());
      }
      if (s == t) continue;
      Solution sr = directed_pair(g, s, t, SolvePath::Reduction);
      Solution sd = directed_pair(g, s, t, SolvePath::Direct);
      if (sr.value != rv || sd.value != dv)
        return CheckStatus::fail("pair query disagrees with the all-pairs matrix");
      if (auto bad = detail::bad_solution(g, sr, "pair reduction"))
        return CheckStatus::fail(*bad);
      if (auto bad = detail::bad_solution(g, sd, "pair direct"))
        return CheckStatus::fail(*bad);
    }
  return CheckStatus::pass();
}

inline CheckStatus check_pairs_vs_oracle(const DirectedGraph& g, int max_oracle_n = 12) {
  int n = g.vertex_count();
  if (n > max_oracle_n) return CheckStatus::skip("oracle budget");
  OracleBudget budget{max_oracle_n, std::int64_t(1) << max_oracle_n};
  auto red = directed_all_pairs(g, SolvePath::Reduction);
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      if (s == t) continue;
      if (red[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)] !=
          oracle_pair(g, s, t, budget).value) {
        std::ostringstream os;
        os << "pair (" << s << "," << t << ") disagrees with the oracle";
        return CheckStatus::fail(os.str());
      }
    }
  return CheckStatus::pass();
}

/// Single-source, single-sink and Steiner identities for random choices of
/// source, sink and terminal set.
inline CheckStatus check_source_sink_steiner(const DirectedGraph& g, std::uint64_t seed,
                                             int max_oracle_n = 12) {
  int n = g.vertex_count();
  std::mt19937_64 rng(seed);
  ReducedGraph r = build_reduction(g);
  bool use_oracle = n <= max_oracle_n;
  OracleBudget budget{max_oracle_n, std::int64_t(1) << max_oracle_n};

  for (int round = 0; round < 2; ++round) {
    VertexId s = static_cast<VertexId>(rng() % static_cast<std::uint64_t>(n));
    Solution red_src = directed_source(g, s, SolvePath::Reduction);
    Solution dir_src = directed_source(g, s, SolvePath::Direct);
    if (red_src.value != dir_src.value)
      return CheckStatus::fail("source paths disagree");
    // the undirected single-source value on the reduced graph sits exactly
    // one shift above the directed one
    CutValue lifted = undirected_source(r.graph(), r.out_copy(s)).value;
    if (lifted != red_src.value.shifted(r.base_total_weight()))
      return CheckStatus::fail("source shift identity violated");
    if (use_oracle && red_src.value != oracle_source(g, s, budget).value)
      return CheckStatus::fail("source value disagrees with the oracle");
    if (auto bad = detail::bad_solution(g, red_src, "source")) return CheckStatus::fail(*bad);

    VertexId t = static_cast<VertexId>(rng() % static_cast<std::uint64_t>(n));
    Solution red_sink = directed_sink(g, t, SolvePath::Reduction);
    Solution dir_sink = directed_sink(g, t, SolvePath::Direct);
    if (red_sink.value != dir_sink.value)
      return CheckStatus::fail("sink paths disagree");
    CutValue lifted_sink = undirected_source(r.graph(), r.in_copy(t)).value;
    if (lifted_sink != red_sink.value.shifted(r.base_total_weight()))
      return CheckStatus::fail("sink shift identity violated");
    if (use_oracle && red_sink.value != oracle_sink(g, t, budget).value)
      return CheckStatus::fail("sink value disagrees with the oracle");
  }

  if (n >= 2) {
    for (int round = 0; round < 2; ++round) {
      int size = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(n - 1));
      VertexSet terms;
      for (int v = 0; v < n && static_cast<int>(terms.size()) < size; ++v)
        if (static_cast<int>(rng() % static_cast<std::uint64_t>(n)) < size) terms.push_back(v);
      if (terms.size() < 2) terms = {0, 1};
      Solution red_st = directed_steiner(g, terms, SolvePath::Reduction);
      Solution dir_st = directed_steiner(g, terms, SolvePath::Direct);
      if (red_st.value != dir_st.value)
        return CheckStatus::fail("steiner paths disagree");
      // terminal set in the reduced graph has both copies of each terminal
      VertexSet lifted_terms;
      for (VertexId v : terms) lifted_terms.push_back(r.out_copy(v));
      for (VertexId v : terms) lifted_terms.push_back(r.in_copy(v));
      if (lifted_terms.size() != 2 * terms.size())
        return CheckStatus::fail("lifted terminal set does not have size 2|T|");
      CutValue lifted = undirected_steiner(r.graph(), lifted_terms).value;
      if (lifted != red_st.value.shifted(r.base_total_weight()))
        return CheckStatus::fail("steiner shift identity violated");
      if (use_oracle && red_st.value != oracle_steiner(g, terms, budget).value)
        return CheckStatus::fail("steiner value disagrees with the oracle");
      if (auto bad = detail::bad_solution(g, red_st, "steiner"))
        return CheckStatus::fail(*bad);
    }
  }
  return CheckStatus::pass();
}

/// Lift then extract is the identity and shifts separator weights by exactly
/// the total base weight.
inline CheckStatus check_witness_roundtrip(const DirectedGraph& g, int samples,
                                           std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  ReducedGraph r = build_reduction(g);
  for (int i = 0; i < samples; ++i) {
    auto cut = random_valid_directed_cut(g, rng);
    if (!cut) continue;
    if (validate_cut(g, *cut))
      return CheckStatus::fail("cut generator produced an invalid cut");
    NormalizedCut lifted = lift_directed_cut(r, *cut);
    if (validate_cut(r.graph(), lifted.cut))
      return CheckStatus::fail("lifted cut is invalid");
    if (weight_of(r.graph(), lifted.cut.separator) !=
        weight_of(g, cut->separator) + r.base_total_weight())
      return CheckStatus::fail("lift does not shift the separator weight by the total");
    VertexCut back = extract_directed_cut(r, lifted);
    if (back.left != cut->left || back.separator != cut->separator ||
        back.right != cut->right)
      return CheckStatus::fail("extract(lift(cut)) is not the identity");
  }
  return CheckStatus::pass();
}

/// Flow backend against the oracle on every non-adjacent ordered pair.
inline CheckStatus check_flow_vs_oracle(const DirectedGraph& g, int max_oracle_n = 12) {
  int n = g.vertex_count();
  if (n > max_oracle_n) return CheckStatus::skip("oracle budget");
  OracleBudget budget{max_oracle_n, std::int64_t(1) << max_oracle_n};
  SplitGraphSolver solver(g);
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      if (s == t || g.has_arc(s, t)) continue;
      STCutResult got = solver.query(s, t);
      OracleResult want = oracle_pair(g, s, t, budget);
      if (got.value != want.value) {
        std::ostringstream os;
        os << "flow pair (" << s << "," << t << "): got " << got.value.str()
           << ", oracle " << want.value.str();
        return CheckStatus::fail(os.str());
      }
      if (got.value.is_finite() &&
          weight_of(g, got.separator) != got.value.value())
        return CheckStatus::fail("flow separator weight differs from the flow value");
    }
  return CheckStatus::pass();
}

}  // namespace vcut::selfcheck
