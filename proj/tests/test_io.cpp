#include <catch2/catch.hpp>

#include <random>
#include <sstream>

#include "test_util.hpp"
#include "vcut/instance_io.hpp"
#include "vcut/random_instance.hpp"
#include "vcut/reduction.hpp"

using namespace vcut;

namespace {

Instance parse_text(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

int error_line(const std::string& text) {
  std::istringstream in(text);
  try {
    parse_instance(in);
  } catch (const ParseError& e) {
    return e.line();
  }
  FAIL("expected a parse error");
  return -1;
}

}  // namespace

TEST_CASE("parses a directed instance with comments and weights") {
  auto inst = parse_text(
      "c a 3-cycle\n"
      "p dvc 3 3\n"
      "w 1 5\n"
      "c weights default to 1\n"
      "a 1 2\n"
      "a 2 3\n"
      "a 3 1\n");
  auto& g = std::get<DirectedGraph>(inst);
  CHECK(g.vertex_count() == 3);
  CHECK(g.arc_count() == 3);
  CHECK(g.weight(0) == 5);
  CHECK(g.weight(1) == 1);
  CHECK(g.has_arc(2, 0));
}

TEST_CASE("parses an undirected instance") {
  auto inst = parse_text("p uvc 3 2\ne 1 2\ne 2 3\n");
  auto& g = std::get<UndirectedGraph>(inst);
  CHECK(g.vertex_count() == 3);
  CHECK(g.has_edge(1, 0));
  CHECK_FALSE(g.has_edge(0, 2));
}

TEST_CASE("parse errors carry line numbers") {
  CHECK(error_line("p dvc 2 1\na 1 1\n") == 2);            // self-loop
  CHECK(error_line("p dvc 2 2\na 1 2\na 1 2\n") == 3);     // duplicate arc
  CHECK(error_line("p uvc 3 2\ne 1 2\ne 2 1\n") == 3);     // duplicate edge
  CHECK(error_line("p dvc 2 1\na 1 3\n") == 2);            // out of range
  CHECK(error_line("p dvc 2 1\nw 1 0\na 1 2\n") == 2);     // non-positive weight
  CHECK(error_line("p dvc 2 1\nw 1 2\nw 1 3\na 1 2\n") == 3);
  CHECK(error_line("p dvc 2 1\ne 1 2\n") == 2);            // edge line in a digraph
  CHECK(error_line("p dvc 2 2\na 1 2\n") == 3);            // fewer edges than declared
  CHECK(error_line("p dvc 2 0\na 1 2\n") == 2);            // more edges than declared
  CHECK(error_line("p xvc 2 1\na 1 2\n") == 1);            // unknown kind
  CHECK(error_line("a 1 2\n") == 1);                       // edge before header
  CHECK(error_line("p dvc 2 1\na 1 2 9\n") == 2);          // trailing tokens
  CHECK(error_line("") == 1);                              // missing header
}

TEST_CASE("print then parse is the identity on graphs") {
  std::mt19937_64 rng(81);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 1 + static_cast<int>(rng() % 12);
    DirectedGraph g = random_digraph(
        {.n = n, .p = 0.1 * (trial % 11), .max_weight = 9, .seed = rng()});
    std::ostringstream out;
    print_instance(out, g);
    std::istringstream in(out.str());
    CHECK(parse_directed(in) == g);

    UndirectedGraph u = random_ugraph(
        {.n = n, .p = 0.1 * (trial % 11), .max_weight = 9, .seed = rng()});
    std::ostringstream uout;
    print_instance(uout, u);
    std::istringstream uin(uout.str());
    CHECK(parse_undirected(uin) == u);
  }
}

TEST_CASE("printed output is line oriented with no trailing whitespace") {
  DirectedGraph g(2, {{0, 1}}, {3, 1});
  std::ostringstream out;
  print_instance(out, g);
  CHECK(out.str() == "p dvc 2 1\nw 1 3\nw 2 1\na 1 2\n");
}

TEST_CASE("a printed reduction parses back with all construction invariants") {
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 10; ++trial) {
    int n = 1 + static_cast<int>(rng() % 9);
    DirectedGraph g = random_digraph({.n = n, .p = 0.4, .max_weight = 5, .seed = rng()});
    ReducedGraph r = build_reduction(g);
    std::ostringstream out;
    print_instance(out, r.graph());
    std::istringstream in(out.str());
    UndirectedGraph parsed = parse_undirected(in);
    CHECK(parsed == r.graph());
    CHECK(parsed.vertex_count() == 2 * n);
    CHECK(parsed.edge_count() == n * (n - 1) + n + g.arc_count());
    for (int v = 0; v < n; ++v) {
      CHECK(parsed.weight(v) == g.weight(v));
      CHECK(parsed.weight(v + n) == g.weight(v));
      CHECK(parsed.has_edge(v, v + n));
    }
  }
}

TEST_CASE("same seed gives identical instances, different seeds differ") {
  GnpParams params{.n = 20, .p = 0.35, .max_weight = 10, .seed = 12345};
  CHECK(random_digraph(params) == random_digraph(params));
  GnpParams other = params;
  other.seed = 54321;
  CHECK_FALSE(random_digraph(params) == random_digraph(other));

  CHECK(random_digraph({.n = 5, .p = 1.0, .max_weight = 1, .seed = 1}).arc_count() == 20);
  CHECK(random_digraph({.n = 5, .p = 0.0, .max_weight = 1, .seed = 1}).arc_count() == 0);
}
