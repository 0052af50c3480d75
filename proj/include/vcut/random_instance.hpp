#pragma once

// Seeded G(n, p) instances, reproducible across platforms. All randomness
// comes from std::mt19937_64, whose output sequence the standard pins down
// exactly; we avoid std::uniform_*_distribution because their mappings are
// implementation-defined. Draw order: one draw per ordered pair in
// lexicographic order (unordered pairs for undirected graphs), then one
// weight draw per vertex in ascending order.

#include <cmath>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "vcut/graph.hpp"

namespace vcut {

struct GnpParams {
  int n = 1;
  double p = 0.5;
  Weight max_weight = 1;
  std::uint64_t seed = 1;
};

namespace detail {

// 53-bit draw compared against round(p * 2^53); p = 0 never hits, p = 1
// always does.
inline bool bernoulli_draw(std::mt19937_64& rng, std::uint64_t threshold) {
  return (rng() >> 11) < threshold;
}

inline std::uint64_t bernoulli_threshold(double p) {
  return static_cast<std::uint64_t>(std::llround(p * 9007199254740992.0));  // 2^53
}

inline Weight weight_draw(std::mt19937_64& rng, Weight max_weight) {
  return 1 + static_cast<Weight>(rng() % static_cast<std::uint64_t>(max_weight));
}

}  // namespace detail

inline DirectedGraph random_digraph(const GnpParams& params) {
  if (params.max_weight < 1)
    fail(ErrorCode::NonPositiveWeight, "max_weight must be at least 1");
  std::mt19937_64 rng(params.seed);
  std::uint64_t threshold = detail::bernoulli_threshold(params.p);
  std::vector<std::pair<VertexId, VertexId>> arcs;
  for (int u = 0; u < params.n; ++u)
    for (int v = 0; v < params.n; ++v)
      if (u != v && detail::bernoulli_draw(rng, threshold)) arcs.emplace_back(u, v);
  std::vector<Weight> weights(static_cast<std::size_t>(params.n));
  for (int v = 0; v < params.n; ++v) weights[static_cast<std::size_t>(v)] =
      detail::weight_draw(rng, params.max_weight);
  return DirectedGraph(params.n, std::move(arcs), std::move(weights));
}

inline UndirectedGraph random_ugraph(const GnpParams& params) {
  if (params.max_weight < 1)
    fail(ErrorCode::NonPositiveWeight, "max_weight must be at least 1");
  std::mt19937_64 rng(params.seed);
  std::uint64_t threshold = detail::bernoulli_threshold(params.p);
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int u = 0; u < params.n; ++u)
    for (int v = u + 1; v < params.n; ++v)
      if (detail::bernoulli_draw(rng, threshold)) edges.emplace_back(u, v);
  std::vector<Weight> weights(static_cast<std::size_t>(params.n));
  for (int v = 0; v < params.n; ++v) weights[static_cast<std::size_t>(v)] =
      detail::weight_draw(rng, params.max_weight);
  return UndirectedGraph(params.n, std::move(edges), std::move(weights));
}

}  // namespace vcut
