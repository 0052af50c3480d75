#include <catch2/catch.hpp>

#include <random>

#include "test_util.hpp"
#include "vcut/connectivity.hpp"
#include "vcut/oracle.hpp"
#include "vcut/random_instance.hpp"

using namespace vcut;
using test_util::single_arc;
using test_util::three_cycle;
using test_util::weighted_three_cycle;

namespace {

void check_solution(const DirectedGraph& g, const Solution& sol) {
  if (!sol.value.is_finite()) {
    CHECK_FALSE(sol.cut.has_value());
    return;
  }
  REQUIRE(sol.cut.has_value());
  CHECK_FALSE(validate_cut(g, *sol.cut).has_value());
  CHECK(weight_of(g, sol.cut->separator) == sol.value.value());
}

void check_solution(const UndirectedGraph& g, const Solution& sol) {
  if (!sol.value.is_finite()) return;
  REQUIRE(sol.cut.has_value());
  CHECK_FALSE(validate_cut(g, *sol.cut).has_value());
  CHECK(weight_of(g, sol.cut->separator) == sol.value.value());
}

}  // namespace

TEST_CASE("undirected global cuts") {
  UndirectedGraph square(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  Solution sq = undirected_global(square);
  CHECK(sq.value == CutValue::finite(2));
  check_solution(square, sq);

  UndirectedGraph star(4, {{0, 1}, {0, 2}, {0, 3}});
  Solution st = undirected_global(star);
  CHECK(st.value == CutValue::finite(1));
  CHECK(st.cut->separator == VertexSet{0});

  ReducedGraph r = build_reduction(three_cycle());
  CHECK(undirected_global(r.graph()).value == CutValue::finite(4));

  UndirectedGraph k3(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK_THROWS_AS(undirected_global(k3), Error);
  CHECK_THROWS_AS(undirected_global(UndirectedGraph(1, {})), Error);
}

TEST_CASE("undirected pair, source and steiner variants") {
  UndirectedGraph path(3, {{0, 1}, {1, 2}}, {1, 7, 1});
  CHECK(undirected_pair(path, 0, 2).value == CutValue::finite(7));
  UndirectedGraph k3(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(undirected_pair(k3, 0, 2).value == CutValue::no_cut());

  ReducedGraph r = build_reduction(three_cycle());
  CHECK(undirected_pair(r.graph(), r.out_copy(0), r.in_copy(1)).value ==
        CutValue::no_cut());  // arc (0,1) exists
  CHECK(undirected_source(r.graph(), r.out_copy(0)).value == CutValue::finite(4));

  UndirectedGraph star(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(undirected_source(star, 0).value == CutValue::no_cut());  // dominating center
  CHECK(undirected_source(path, 0).value == CutValue::finite(7));

  // reduced 3-cycle, terminals = both copies of {1, 2}
  VertexSet terms{r.out_copy(1), r.out_copy(2), r.in_copy(1), r.in_copy(2)};
  CHECK(undirected_steiner(r.graph(), terms).value == CutValue::finite(4));
  CHECK(undirected_steiner(k3, {0, 1, 2}).value == CutValue::no_cut());
  ReducedGraph r2 = build_reduction(single_arc());
  CHECK(undirected_steiner(r2.graph(), {0, 1, 2, 3}).value == CutValue::finite(2));
  CHECK_THROWS_AS(undirected_steiner(k3, {1}), Error);
  CHECK_THROWS_AS(undirected_steiner(k3, {1, 1}), Error);
}

TEST_CASE("directed global via both paths") {
  for (SolvePath path : {SolvePath::Reduction, SolvePath::Direct}) {
    Solution cyc = directed_global(three_cycle(), path);
    CHECK(cyc.value == CutValue::finite(1));
    check_solution(three_cycle(), cyc);

    Solution w = directed_global(weighted_three_cycle(), path);
    CHECK(w.value == CutValue::finite(1));
    CHECK(w.cut->separator == VertexSet{1});

    Solution arc = directed_global(single_arc(), path);
    CHECK(arc.value == CutValue::finite(0));
    CHECK(arc.cut->left == VertexSet{1});
    CHECK(arc.cut->right == VertexSet{0});

    DirectedGraph k2(2, {{0, 1}, {1, 0}});
    CHECK_THROWS_AS(directed_global(k2, path), Error);
  }
}

TEST_CASE("directed pair via both paths") {
  for (SolvePath path : {SolvePath::Reduction, SolvePath::Direct}) {
    CHECK(directed_pair(three_cycle(), 0, 2, path).value == CutValue::finite(1));
    CHECK(directed_pair(three_cycle(), 0, 1, path).value == CutValue::no_cut());
    Solution w = directed_pair(weighted_three_cycle(), 1, 0, path);
    CHECK(w.value == CutValue::finite(2));
    CHECK(w.cut->separator == VertexSet{2});
    CHECK_THROWS_AS(directed_pair(three_cycle(), 1, 1, path), Error);
  }
}

TEST_CASE("directed source and sink via both paths") {
  for (SolvePath path : {SolvePath::Reduction, SolvePath::Direct}) {
    CHECK(directed_source(three_cycle(), 0, path).value == CutValue::finite(1));
    CHECK(directed_sink(three_cycle(), 0, path).value == CutValue::finite(1));
    CHECK(directed_source(single_arc(), 1, path).value == CutValue::finite(0));
    // out-dominating source has no valid target
    DirectedGraph fan(3, {{0, 1}, {0, 2}});
    CHECK(directed_source(fan, 0, path).value == CutValue::no_cut());
    CHECK(directed_sink(fan, 1, path).value == CutValue::finite(0));
  }
}

TEST_CASE("directed steiner via both paths") {
  for (SolvePath path : {SolvePath::Reduction, SolvePath::Direct}) {
    CHECK(directed_steiner(three_cycle(), {1, 2}, path).value == CutValue::finite(1));
    CHECK(directed_steiner(three_cycle(), {0, 1, 2}, path).value == CutValue::finite(1));
    DirectedGraph biclique(3, {{0, 1}, {1, 0}, {0, 2}, {2, 0}, {1, 2}, {2, 1}});
    CHECK(directed_steiner(biclique, {0, 1, 2}, path).value == CutValue::no_cut());
    CHECK_THROWS_AS(directed_steiner(three_cycle(), {2}, path), Error);
  }
}

TEST_CASE("all-pairs matrices") {
  auto matrix = directed_all_pairs(three_cycle(), SolvePath::Reduction);
  auto direct = directed_all_pairs(three_cycle(), SolvePath::Direct);
  CHECK(matrix == direct);
  for (int s = 0; s < 3; ++s) CHECK(matrix[s][s] == CutValue::no_cut());
  CHECK(matrix[0][1] == CutValue::no_cut());
  CHECK(matrix[1][2] == CutValue::no_cut());
  CHECK(matrix[2][0] == CutValue::no_cut());
  CHECK(matrix[0][2] == CutValue::finite(1));
  CHECK(matrix[1][0] == CutValue::finite(1));
  CHECK(matrix[2][1] == CutValue::finite(1));

  auto tiny = directed_all_pairs(single_arc(), SolvePath::Direct);
  CHECK(tiny[0][1] == CutValue::no_cut());
  CHECK(tiny[1][0] == CutValue::finite(0));

  DirectedGraph k3(3, {{0, 1}, {1, 0}, {0, 2}, {2, 0}, {1, 2}, {2, 1}});
  auto complete = directed_all_pairs(k3, SolvePath::Reduction);
  for (int s = 0; s < 3; ++s)
    for (int t = 0; t < 3; ++t) CHECK(complete[s][t] == CutValue::no_cut());
}

TEST_CASE("known connectivities of classic graphs") {
  // Petersen graph is 3-connected
  UndirectedGraph petersen(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                                {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                                {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
  CHECK(undirected_global(petersen).value == CutValue::finite(3));

  // bidirected 4-cycle needs two removals
  DirectedGraph c4(4, {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {2, 3}, {3, 2}, {3, 0}, {0, 3}});
  CHECK(directed_global(c4, SolvePath::Reduction).value == CutValue::finite(2));
  CHECK(directed_global(c4, SolvePath::Direct).value == CutValue::finite(2));
}

TEST_CASE("both paths match the oracle on random instances") {
  std::mt19937_64 rng(61);
  int tested = 0;
  while (tested < 25) {
    int n = 2 + static_cast<int>(rng() % 7);
    DirectedGraph g = random_digraph(
        {.n = n, .p = 0.1 * (tested % 9), .max_weight = 8, .seed = rng()});
    if (is_complete(g)) continue;
    ++tested;

    Solution red = directed_global(g, SolvePath::Reduction);
    Solution dir = directed_global(g, SolvePath::Direct);
    CutValue want = oracle_global(g).value;
    CHECK(red.value == want);
    CHECK(dir.value == want);
    check_solution(g, red);
    check_solution(g, dir);

    // certificate reproduces the returned cut exactly
    REQUIRE(red.certificate.has_value());
    ReducedGraph r = build_reduction(g);
    VertexCut from_cert = extract_directed_cut(r, *red.certificate);
    CHECK(from_cert.left == red.cut->left);
    CHECK(from_cert.separator == red.cut->separator);
    CHECK(from_cert.right == red.cut->right);

    int s = static_cast<int>(rng() % n);
    int t = static_cast<int>(rng() % n);
    if (s != t) {
      Solution pr = directed_pair(g, s, t, SolvePath::Reduction);
      Solution pd = directed_pair(g, s, t, SolvePath::Direct);
      CutValue pw = oracle_pair(g, s, t).value;
      CHECK(pr.value == pw);
      CHECK(pd.value == pw);
      check_solution(g, pr);
      check_solution(g, pd);
    }

    CHECK(directed_source(g, s, SolvePath::Reduction).value ==
          directed_source(g, s, SolvePath::Direct).value);
    CHECK(directed_source(g, s, SolvePath::Direct).value == oracle_source(g, s).value);
    CHECK(directed_sink(g, s, SolvePath::Reduction).value ==
          directed_sink(g, s, SolvePath::Direct).value);

    VertexSet terms;
    for (int v = 0; v < n; ++v)
      if (rng() % 2) terms.push_back(v);
    if (terms.size() >= 2) {
      CHECK(directed_steiner(g, terms, SolvePath::Reduction).value ==
            directed_steiner(g, terms, SolvePath::Direct).value);
      CHECK(directed_steiner(g, terms, SolvePath::Direct).value ==
            oracle_steiner(g, terms).value);
    }
  }
}

TEST_CASE("unit weights reproduce unweighted vertex connectivity") {
  std::mt19937_64 rng(67);
  int tested = 0;
  while (tested < 15) {
    int n = 3 + static_cast<int>(rng() % 5);
    DirectedGraph g = random_digraph({.n = n, .p = 0.5, .max_weight = 1, .seed = rng()});
    if (is_complete(g)) continue;
    ++tested;
    Solution sol = directed_global(g, SolvePath::Reduction);
    CutValue want = oracle_global(g).value;  // unit weights: weight == cardinality
    CHECK(sol.value == want);
    REQUIRE(sol.cut.has_value());
    CHECK(static_cast<std::int64_t>(sol.cut->separator.size()) == sol.value.value());
  }
}

TEST_CASE("undirected global matches the oracle on random instances") {
  std::mt19937_64 rng(71);
  int tested = 0;
  while (tested < 20) {
    int n = 2 + static_cast<int>(rng() % 7);
    UndirectedGraph g = random_ugraph(
        {.n = n, .p = 0.1 * (tested % 9), .max_weight = 6, .seed = rng()});
    if (is_complete(g)) continue;
    ++tested;
    Solution sol = undirected_global(g);
    CHECK(sol.value == oracle_global(g).value);
    check_solution(g, sol);
  }
}

TEST_CASE("variant dispatch mirrors the typed entry points") {
  DirectedGraph g = three_cycle();
  VariantQuery q;
  q.kind = VariantQuery::Kind::Pair;
  q.s = 0;
  q.t = 2;
  CHECK(solve_variant(g, q, SolvePath::Reduction).value == CutValue::finite(1));
  q.kind = VariantQuery::Kind::AllPairs;
  CHECK_THROWS_AS(solve_variant(g, q, SolvePath::Direct), std::logic_error);
}
