// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "mincut/graph.hpp"
#include "mincut/rng.hpp"

namespace testhelp {

using mincut::EdgeId;
using mincut::VertexId;

// All proper sides containing vertex 0, as sorted vertex lists. Independent
// of the library's cut machinery: crossings are counted straight off the edge
// list by the caller.
inline std::vector<std::vector<VertexId>> all_sides(std::size_t n) {
  std::vector<std::vector<VertexId>> sides;
  const std::uint32_t max_mask = (1u << (n - 1)) - 1;
  for (std::uint32_t mask = 0; mask + 1 <= max_mask; ++mask) {
    std::vector<VertexId> side{0};
    for (std::size_t v = 1; v < n; ++v) {
      if ((mask >> (v - 1)) & 1u) side.push_back(static_cast<VertexId>(v));
    }
    sides.push_back(std::move(side));
  }
  return sides;
}

// Crossing edge ids of a side, computed from first principles.
inline std::vector<EdgeId> brute_crossings(const mincut::SimpleGraph& g,
                                           const std::vector<VertexId>& side) {
  std::vector<bool> in(g.vertex_count(), false);
  for (const VertexId v : side) in[v] = true;
  std::vector<EdgeId> ids;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const mincut::Edge e = g.edge(static_cast<EdgeId>(i));
    if (in[e.u] != in[e.v]) ids.push_back(static_cast<EdgeId>(i));
  }
  return ids;
}

// Brute-force global min cut value of a simple graph (n <= 20).
inline std::size_t brute_min_cut(const mincut::SimpleGraph& g) {
  std::size_t best = g.edge_count() + 1;
  for (const auto& side : all_sides(g.vertex_count())) {
    best = std::min(best, brute_crossings(g, side).size());
  }
  return best;
}

// Crossing count of a supernode side in a multigraph, from first principles.
inline std::size_t multigraph_crossings(const mincut::MultiGraph& mg,
                                        const std::vector<VertexId>& side) {
  std::vector<bool> in(mg.supernode_count(), false);
  for (const VertexId v : side) in[v] = true;
  std::size_t crossings = 0;
  for (const mincut::MultiEdge& e : mg.edges()) {
    if (in[e.u] != in[e.v]) ++crossings;
  }
  return crossings;
}

// Random connected-ish multigraph for solver and certificate tests: random
// supernode pairs with parallel duplicates allowed, identity vertex map.
inline mincut::MultiGraph random_multigraph(mincut::Rng& rng, std::size_t max_nodes,
                                            std::size_t max_extra_edges) {
  const std::size_t n = 2 + rng.next_below(max_nodes - 1);
  std::vector<mincut::MultiEdge> edges;
  EdgeId next_id = 0;
  // Random spanning tree first so instances are usually connected.
  for (std::size_t v = 1; v < n; ++v) {
    const auto u = static_cast<VertexId>(rng.next_below(v));
    edges.push_back({u, static_cast<VertexId>(v), next_id++});
  }
  const std::size_t extra = rng.next_below(max_extra_edges + 1);
  for (std::size_t i = 0; i < extra; ++i) {
    const auto u = static_cast<VertexId>(rng.next_below(n));
    auto v = static_cast<VertexId>(rng.next_below(n));
    if (u == v) continue;
    edges.push_back({u, v, next_id++});
  }
  std::vector<VertexId> map(n);
  for (std::size_t v = 0; v < n; ++v) map[v] = static_cast<VertexId>(v);
  return mincut::MultiGraph(n, std::move(edges), std::move(map));
}

// Path graph 0-1-...-n-1 (handy tree instance; no generator kind for trees).
inline mincut::SimpleGraph path_graph(std::size_t n) {
  std::vector<mincut::Edge> edges;
  for (std::size_t v = 0; v + 1 < n; ++v) {
    edges.push_back({static_cast<VertexId>(v), static_cast<VertexId>(v + 1)});
  }
  return mincut::SimpleGraph(n, std::move(edges));
}

}  // namespace testhelp
