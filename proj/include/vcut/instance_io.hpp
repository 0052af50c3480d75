#pragma once

// Line-oriented instance files, DIMACS style. Header `p dvc <n> <m>` for
// directed or `p uvc <n> <m>` for undirected instances, optional `w <v>
// <weight>` lines (default weight 1), exactly m lines `a <u> <v>` (directed)
// or `e <u> <v>` (undirected), `c ...` comments anywhere. Vertices are
// 1-based in files and 0-based in memory.

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <variant>
#include <vector>

#include "vcut/graph.hpp"

namespace vcut {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

using Instance = std::variant<DirectedGraph, UndirectedGraph>;

namespace detail {

struct RawInstance {
  bool directed = false;
  int n = 0;
  std::vector<std::pair<VertexId, VertexId>> links;
  std::vector<Weight> weights;
};

inline RawInstance read_raw_instance(std::istream& in) {
  RawInstance raw;
  bool got_header = false;
  int declared_m = 0;
  std::vector<char> weight_seen;
  std::unordered_set<std::uint64_t> link_seen;  // u * n + v, pairs normalized if undirected
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream fields(line);
    std::string tag;
    fields >> tag;
    if (tag == "p") {
      if (got_header) throw ParseError(line_no, "duplicate header");
      std::string kind;
      if (!(fields >> kind >> raw.n >> declared_m) || !(fields >> std::ws).eof())
        throw ParseError(line_no, "malformed header, expected `p dvc|uvc <n> <m>`");
      if (kind != "dvc" && kind != "uvc")
        throw ParseError(line_no, "unknown instance kind `" + kind + "`");
      if (raw.n < 1) throw ParseError(line_no, "vertex count must be positive");
      if (declared_m < 0) throw ParseError(line_no, "negative edge count");
      raw.directed = kind == "dvc";
      raw.weights.assign(static_cast<std::size_t>(raw.n), 1);
      weight_seen.assign(static_cast<std::size_t>(raw.n), 0);
      link_seen.reserve(static_cast<std::size_t>(declared_m));
      got_header = true;
    } else if (tag == "w") {
      if (!got_header) throw ParseError(line_no, "weight line before header");
      long long v = 0, w = 0;
      if (!(fields >> v >> w) || !(fields >> std::ws).eof())
        throw ParseError(line_no, "malformed weight line, expected `w <v> <weight>`");
      if (v < 1 || v > raw.n) throw ParseError(line_no, "vertex index out of range");
      if (w < 1) throw ParseError(line_no, "weights must be positive");
      if (weight_seen[static_cast<std::size_t>(v - 1)])
        throw ParseError(line_no, "duplicate weight for vertex " + std::to_string(v));
      weight_seen[static_cast<std::size_t>(v - 1)] = 1;
      raw.weights[static_cast<std::size_t>(v - 1)] = w;
    } else if (tag == "a" || tag == "e") {
      if (!got_header) throw ParseError(line_no, "edge line before header");
      if ((tag == "a") != raw.directed)
        throw ParseError(line_no, raw.directed ? "expected arc line `a <u> <v>`"
                                               : "expected edge line `e <u> <v>`");
      long long u = 0, v = 0;
      if (!(fields >> u >> v) || !(fields >> std::ws).eof())
        throw ParseError(line_no, "malformed edge line");
      if (u < 1 || u > raw.n || v < 1 || v > raw.n)
        throw ParseError(line_no, "vertex index out of range");
      if (u == v) throw ParseError(line_no, "self-loop");
      VertexId a = static_cast<VertexId>(u - 1), b = static_cast<VertexId>(v - 1);
      std::uint64_t key =
          raw.directed
              ? static_cast<std::uint64_t>(a) * raw.n + b
              : static_cast<std::uint64_t>(std::min(a, b)) * raw.n + std::max(a, b);
      if (!link_seen.insert(key).second)
        throw ParseError(line_no, raw.directed ? "duplicate arc" : "duplicate edge");
      if (static_cast<int>(raw.links.size()) == declared_m)
        throw ParseError(line_no, "more edges than declared");
      raw.links.emplace_back(a, b);
    } else {
      throw ParseError(line_no, "unrecognized line `" + tag + "`");
    }
  }
  if (!got_header) throw ParseError(line_no + 1, "missing header");
  if (static_cast<int>(raw.links.size()) != declared_m)
    throw ParseError(line_no + 1, "declared " + std::to_string(declared_m) +
                                      " edges but found " +
                                      std::to_string(raw.links.size()));
  return raw;
}

}  // namespace detail

inline Instance parse_instance(std::istream& in) {
  detail::RawInstance raw = detail::read_raw_instance(in);
  if (raw.directed)
    return DirectedGraph(raw.n, std::move(raw.links), std::move(raw.weights));
  return UndirectedGraph(raw.n, std::move(raw.links), std::move(raw.weights));
}

inline DirectedGraph parse_directed(std::istream& in) {
  Instance inst = parse_instance(in);
  if (auto* g = std::get_if<DirectedGraph>(&inst)) return std::move(*g);
  throw ParseError(1, "expected a directed instance (header `p dvc ...`)");
}

inline UndirectedGraph parse_undirected(std::istream& in) {
  Instance inst = parse_instance(in);
  if (auto* g = std::get_if<UndirectedGraph>(&inst)) return std::move(*g);
  throw ParseError(1, "expected an undirected instance (header `p uvc ...`)");
}

inline void print_instance(std::ostream& out, const DirectedGraph& g) {
  out << "p dvc " << g.vertex_count() << ' ' << g.arc_count() << '\n';
  for (int v = 0; v < g.vertex_count(); ++v)
    out << "w " << v + 1 << ' ' << g.weight(v) << '\n';
  for (const auto& [u, v] : g.arcs()) out << "a " << u + 1 << ' ' << v + 1 << '\n';
}

inline void print_instance(std::ostream& out, const UndirectedGraph& g) {
  out << "p uvc " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (int v = 0; v < g.vertex_count(); ++v)
    out << "w " << v + 1 << ' ' << g.weight(v) << '\n';
  for (const auto& [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

}  // namespace vcut
