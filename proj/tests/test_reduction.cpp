#include <catch2/catch.hpp>

#include <random>
#include <set>

#include "test_util.hpp"
#include "vcut/oracle.hpp"
#include "vcut/random_instance.hpp"
#include "vcut/reduction.hpp"

using namespace vcut;
using test_util::single_arc;
using test_util::three_cycle;

namespace {

std::set<std::pair<VertexId, VertexId>> edge_set(const UndirectedGraph& g) {
  return {g.edges().begin(), g.edges().end()};
}

// Independent recount of the four edge blocks straight from the input graph.
std::set<std::pair<VertexId, VertexId>> expected_edges(const DirectedGraph& g) {
  int n = g.vertex_count();
  std::set<std::pair<VertexId, VertexId>> expect;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      expect.insert({u, v});
      expect.insert({u + n, v + n});
    }
  for (int v = 0; v < n; ++v) expect.insert({v, v + n});
  for (auto [u, v] : g.arcs()) expect.insert({std::min(u, v + n), std::max(u, v + n)});
  return expect;
}

}  // namespace

TEST_CASE("reduction of the 3-cycle") {
  DirectedGraph g = three_cycle();
  ReducedGraph r = build_reduction(g);
  CHECK(r.graph().vertex_count() == 6);
  CHECK(r.graph().edge_count() == 12);  // 2*C(3,2) + 3 + 3
  CHECK(r.base_total_weight() == 3);
  CHECK(edge_set(r.graph()) == expected_edges(g));
}

TEST_CASE("reduction of a single arc lists exactly the expected edges") {
  DirectedGraph g = single_arc();
  ReducedGraph r = build_reduction(g);
  CHECK(r.graph().vertex_count() == 4);
  CHECK(r.graph().edge_count() == 5);
  // out-copies are {0,1}, in-copies are {2,3}
  std::set<std::pair<VertexId, VertexId>> expect{{0, 1}, {2, 3}, {0, 2}, {1, 3}, {0, 3}};
  CHECK(edge_set(r.graph()) == expect);
}

TEST_CASE("reduction of an isolated vertex keeps only the matching edge") {
  DirectedGraph g(1, {});
  ReducedGraph r = build_reduction(g);
  CHECK(r.graph().vertex_count() == 2);
  CHECK(r.graph().edge_count() == 1);
  CHECK(r.graph().has_edge(0, 1));
}

TEST_CASE("reduction copies vertex weights to both copies") {
  DirectedGraph g = test_util::weighted_three_cycle();
  ReducedGraph r = build_reduction(g);
  for (int v = 0; v < 3; ++v) {
    CHECK(r.graph().weight(r.out_copy(v)) == g.weight(v));
    CHECK(r.graph().weight(r.in_copy(v)) == g.weight(v));
  }
  CHECK(r.base_total_weight() == 8);
}

TEST_CASE("size identity holds on random instances") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 1 + static_cast<int>(rng() % 16);
    DirectedGraph g = random_digraph(
        {.n = n, .p = (trial % 11) / 10.0, .max_weight = 7, .seed = rng()});
    ReducedGraph r = build_reduction(g);
    CHECK(r.graph().vertex_count() == 2 * n);
    CHECK(r.graph().edge_count() == n * (n - 1) + n + g.arc_count());
  }
}

TEST_CASE("normalize_cut keeps or swaps orientation") {
  ReducedGraph r = build_reduction(single_arc());
  // left in the in-copies gets swapped
  NormalizedCut swapped = normalize_cut(r, VertexCut{{2}, {0, 3}, {1}});
  CHECK(swapped.cut.left == VertexSet{1});
  CHECK(swapped.cut.right == VertexSet{2});
  // already normalized stays put
  NormalizedCut kept = normalize_cut(r, VertexCut{{1}, {0, 3}, {2}});
  CHECK(kept.cut.left == VertexSet{1});
  CHECK(kept.cut.right == VertexSet{2});
  // a side straddling both copies cannot be a valid cut: a clique edge crosses
  CHECK_THROWS_AS(normalize_cut(r, VertexCut{{0, 2}, {}, {1, 3}}), Error);
  try {
    normalize_cut(r, VertexCut{{0, 2}, {}, {1, 3}});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidCut);
  }
}

TEST_CASE("extract_directed_cut maps the single-arc example") {
  ReducedGraph r = build_reduction(single_arc());
  NormalizedCut nc = normalize_cut(r, VertexCut{{1}, {0, 3}, {2}});
  VertexCut cut = extract_directed_cut(r, nc);
  CHECK(cut.left == VertexSet{1});
  CHECK(cut.separator == VertexSet{});
  CHECK(cut.right == VertexSet{0});
  CHECK(weight_of(r.graph(), nc.cut.separator) - r.base_total_weight() == 0);
}

TEST_CASE("extract_directed_cut maps the 3-cycle example") {
  DirectedGraph g = three_cycle();
  ReducedGraph r = build_reduction(g);
  // separator = neighborhood of 1's in-copy: {0_out, 1_out, 0_in, 2_in}
  VertexCut reduced{{2}, {0, 1, 3, 5}, {4}};
  REQUIRE_FALSE(validate_cut(r.graph(), reduced).has_value());
  CHECK(weight_of(r.graph(), reduced.separator) == 4);
  VertexCut cut = extract_directed_cut(r, normalize_cut(r, reduced));
  CHECK(cut.left == VertexSet{2});
  CHECK(cut.separator == VertexSet{0});
  CHECK(cut.right == VertexSet{1});
  CHECK(weight_of(g, cut.separator) == 4 - r.base_total_weight());
  CHECK_FALSE(validate_cut(g, cut).has_value());
}

TEST_CASE("lift_directed_cut shifts the separator weight up by the total") {
  DirectedGraph g = three_cycle();
  ReducedGraph r = build_reduction(g);
  NormalizedCut lifted = lift_directed_cut(r, VertexCut{{2}, {0}, {1}});
  CHECK(lifted.cut.left == VertexSet{2});
  CHECK(lifted.cut.right == VertexSet{4});
  CHECK(weight_of(r.graph(), lifted.cut.separator) == 1 + 3);
  REQUIRE_FALSE(validate_cut(r.graph(), lifted.cut).has_value());

  ReducedGraph r2 = build_reduction(single_arc());
  NormalizedCut lifted2 = lift_directed_cut(r2, VertexCut{{1}, {}, {0}});
  CHECK(weight_of(r2.graph(), lifted2.cut.separator) == 0 + 2);

  CHECK_THROWS_AS(lift_directed_cut(r, VertexCut{{2}, {1}, {0}}), Error);  // arc (2,0) crosses
}

TEST_CASE("lift and extract are inverse on (left, right) and shift weights exactly") {
  std::mt19937_64 rng(21);
  int checked = 0;
  while (checked < 400) {
    int n = 2 + static_cast<int>(rng() % 8);
    DirectedGraph g =
        random_digraph({.n = n, .p = 0.35, .max_weight = 6, .seed = rng()});
    auto cut = test_util::random_valid_cut(g, rng);
    if (!cut) continue;
    ++checked;
    ReducedGraph r = build_reduction(g);
    NormalizedCut lifted = lift_directed_cut(r, *cut);
    REQUIRE_FALSE(validate_cut(r.graph(), lifted.cut).has_value());
    CHECK(weight_of(r.graph(), lifted.cut.separator) ==
          weight_of(g, cut->separator) + r.base_total_weight());
    VertexCut back = extract_directed_cut(r, lifted);
    CHECK(back.left == cut->left);
    CHECK(back.right == cut->right);
    CHECK(back.separator == cut->separator);
    // extract then lift is the identity on normalized cuts with S' = rest
    NormalizedCut again = lift_directed_cut(r, back);
    CHECK(again.cut.left == lifted.cut.left);
    CHECK(again.cut.separator == lifted.cut.separator);
    CHECK(again.cut.right == lifted.cut.right);
  }
}

TEST_CASE("every valid cut of a reduced graph has each side inside one copy") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 12; ++trial) {
    int n = 2 + static_cast<int>(rng() % 3);  // up to 3^8 assignments
    DirectedGraph g =
        random_digraph({.n = n, .p = 0.4, .max_weight = 3, .seed = rng()});
    ReducedGraph r = build_reduction(g);
    int nn = r.graph().vertex_count();
    long assignments = 1;
    for (int i = 0; i < nn; ++i) assignments *= 3;
    int valid_cuts = 0;
    for (long code = 0; code < assignments; ++code) {
      long c = code;
      VertexCut cut;
      for (int v = 0; v < nn; ++v, c /= 3) {
        switch (c % 3) {
          case 0: cut.left.push_back(v); break;
          case 1: cut.separator.push_back(v); break;
          default: cut.right.push_back(v); break;
        }
      }
      if (validate_cut(r.graph(), cut).has_value()) continue;
      ++valid_cuts;
      auto side_within_one_copy = [&](const VertexSet& side) {
        bool any_out = false, any_in = false;
        for (VertexId x : side) (r.is_out_copy(x) ? any_out : any_in) = true;
        return !(any_out && any_in);
      };
      REQUIRE(side_within_one_copy(cut.left));
      REQUIRE(side_within_one_copy(cut.right));
      CHECK_NOTHROW(normalize_cut(r, cut));
    }
    if (!is_complete(g)) CHECK(valid_cuts > 0);
  }
}

TEST_CASE("reduced neighborhood weight of in-copy sets") {
  DirectedGraph g = three_cycle();
  ReducedGraph r = build_reduction(g);
  CHECK(reduced_neighborhood_weight(r, {r.in_copy(1)}) == 1 + 3);
  CHECK(reduced_neighborhood_weight(r, {r.in_copy(0), r.in_copy(1), r.in_copy(2)}) ==
        0 + 3);  // no in-neighbors outside V itself

  DirectedGraph w = test_util::weighted_three_cycle();
  ReducedGraph rw = build_reduction(w);
  CHECK(reduced_neighborhood_weight(rw, {rw.in_copy(1)}) == 5 + 8);

  CHECK_THROWS_AS(reduced_neighborhood_weight(r, {}), Error);
  CHECK_THROWS_AS(reduced_neighborhood_weight(r, {r.out_copy(0)}), Error);
}

namespace {

// Oracle side of the neighborhood identity, straight from the definitions.
std::int64_t in_neighborhood_weight(const DirectedGraph& g, const VertexSet& right) {
  std::vector<char> in_right(g.vertex_count(), 0), counted(g.vertex_count(), 0);
  for (VertexId v : right) in_right[v] = 1;
  std::int64_t sum = 0;
  for (VertexId v : right)
    for (VertexId u : g.in_neighbors(v))
      if (!in_right[u] && !counted[u]) {
        counted[u] = 1;
        sum += g.weight(u);
      }
  return sum;
}

}  // namespace

TEST_CASE("neighborhood identity, exhaustive for small graphs") {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 1 + static_cast<int>(rng() % 6);
    DirectedGraph g = random_digraph(
        {.n = n, .p = (trial % 11) / 10.0, .max_weight = 8, .seed = rng()});
    ReducedGraph r = build_reduction(g);
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << n); ++mask) {
      VertexSet right, right_in;
      for (int v = 0; v < n; ++v)
        if (mask & (std::uint64_t(1) << v)) {
          right.push_back(v);
          right_in.push_back(r.in_copy(v));
        }
      CHECK(reduced_neighborhood_weight(r, right_in) ==
            in_neighborhood_weight(g, right) + g.total_weight());
    }
  }
}

TEST_CASE("neighborhood identity, sampled for larger graphs") {
  std::mt19937_64 rng(56);
  for (int trial = 0; trial < 10; ++trial) {
    int n = 10 + static_cast<int>(rng() % 20);
    DirectedGraph g = random_digraph({.n = n, .p = 0.3, .max_weight = 9, .seed = rng()});
    ReducedGraph r = build_reduction(g);
    for (int sample = 0; sample < 60; ++sample) {
      VertexSet right, right_in;
      for (int v = 0; v < n; ++v)
        if (rng() % 3 == 0) {
          right.push_back(v);
          right_in.push_back(r.in_copy(v));
        }
      if (right.empty()) continue;
      CHECK(reduced_neighborhood_weight(r, right_in) ==
            in_neighborhood_weight(g, right) + g.total_weight());
    }
  }
}
