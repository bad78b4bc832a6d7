// SPDX-License-Identifier: Apache-2.0
#include "mincut/solver.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

#include "mincut/disjoint_sets.hpp"
#include "mincut/forest_oracle.hpp"
#include "mincut/rng.hpp"

namespace mincut {

std::string to_string(SolveMethod method) {
  switch (method) {
    case SolveMethod::PipelineAmplified: return "pipeline-amplified";
    case SolveMethod::PipelineDense: return "pipeline-dense";
    case SolveMethod::StoerWagnerDirect: return "stoer-wagner-direct";
    case SolveMethod::OracleExhaustive: return "oracle-exhaustive";
    case SolveMethod::OracleMaxflow: return "oracle-maxflow";
  }
  return "unknown";
}

MultiCut stoer_wagner(const MultiGraph& mg) {
  const std::size_t n = mg.supernode_count();
  if (n < 2) throw std::invalid_argument("stoer_wagner requires at least two supernodes");
  if (!mg.is_connected()) throw std::invalid_argument("stoer_wagner requires a connected multigraph");

  // Dense weight matrix; parallel edges accumulate.
  std::vector<std::vector<std::uint64_t>> weight(n, std::vector<std::uint64_t>(n, 0));
  for (const MultiEdge& e : mg.edges()) {
    ++weight[e.u][e.v];
    ++weight[e.v][e.u];
  }

  std::vector<VertexId> active(n);
  for (std::size_t v = 0; v < n; ++v) active[v] = static_cast<VertexId>(v);
  std::vector<std::vector<VertexId>> group(n);
  for (std::size_t v = 0; v < n; ++v) group[v] = {static_cast<VertexId>(v)};

  MultiCut best;
  best.value = std::numeric_limits<std::size_t>::max();

  std::vector<std::uint64_t> attach(n);
  std::vector<bool> added(n);
  while (active.size() > 1) {
    // Minimum cut phase: maximum-adjacency order starting at active[0].
    for (const VertexId v : active) {
      attach[v] = 0;
      added[v] = false;
    }
    VertexId prev = active[0];
    VertexId last = active[0];
    added[last] = true;
    for (const VertexId v : active) {
      if (v != last) attach[v] = weight[last][v];
    }
    for (std::size_t step = 1; step < active.size(); ++step) {
      VertexId pick = 0;
      std::uint64_t pick_weight = 0;
      bool found = false;
      for (const VertexId v : active) {
        if (!added[v] && (!found || attach[v] > pick_weight)) {
          pick = v;
          pick_weight = attach[v];
          found = true;
        }
      }
      prev = last;
      last = pick;
      added[pick] = true;
      for (const VertexId v : active) {
        if (!added[v]) attach[v] += weight[pick][v];
      }
    }
    // Cut of the phase: the last-added supernode against the rest.
    const std::uint64_t phase_cut = attach[last];
    if (phase_cut < best.value) {
      best.value = static_cast<std::size_t>(phase_cut);
      best.side = group[last];
    }
    // Merge last into prev.
    for (const VertexId v : active) {
      if (v != last && v != prev) {
        weight[prev][v] += weight[last][v];
        weight[v][prev] = weight[prev][v];
      }
    }
    weight[prev][last] = weight[last][prev] = 0;
    group[prev].insert(group[prev].end(), group[last].begin(), group[last].end());
    group[last].clear();
    active.erase(std::find(active.begin(), active.end(), last));
  }
  std::sort(best.side.begin(), best.side.end());
  return best;
}

MultiCut exhaustive_mincut(const MultiGraph& mg) {
  const std::size_t n = mg.supernode_count();
  if (n < 2) throw std::invalid_argument("exhaustive enumeration requires >= 2 supernodes");
  if (n > 16) throw std::invalid_argument("exhaustive enumeration supports at most 16 supernodes");

  MultiCut best;
  best.value = std::numeric_limits<std::size_t>::max();
  const std::uint32_t max_mask = (1u << (n - 1)) - 1;  // masks over supernodes 1..n-1
  for (std::uint32_t mask = 0; mask <= max_mask; ++mask) {
    // Side = {0} plus the masked supernodes; mask == max_mask would make the
    // side the full vertex set, so stop one short.
    if (mask == max_mask && max_mask != 0) break;
    std::size_t crossings = 0;
    for (const MultiEdge& e : mg.edges()) {
      const bool u_in = e.u == 0 || ((mask >> (e.u - 1)) & 1u) != 0;
      const bool v_in = e.v == 0 || ((mask >> (e.v - 1)) & 1u) != 0;
      if (u_in != v_in) ++crossings;
    }
    if (crossings < best.value) {
      best.value = crossings;
      best.side.clear();
      best.side.push_back(0);
      for (std::size_t v = 1; v < n; ++v) {
        if ((mask >> (v - 1)) & 1u) best.side.push_back(static_cast<VertexId>(v));
      }
    }
  }
  return best;
}

namespace {

struct FlowArc {
  std::uint32_t to;
  std::int64_t cap;
  std::uint32_t rev;
};

class FlowNetwork {
 public:
  explicit FlowNetwork(std::size_t n) : adjacency_(n) {}

  void add_undirected(std::uint32_t u, std::uint32_t v, std::int64_t cap) {
    adjacency_[u].push_back({v, cap, static_cast<std::uint32_t>(adjacency_[v].size())});
    adjacency_[v].push_back({u, cap, static_cast<std::uint32_t>(adjacency_[u].size() - 1)});
  }

  // Augments shortest paths until exhaustion or until flow reaches limit.
  // Returns (flow, exhausted); exhausted means flow == maxflow(s, t).
  std::pair<std::int64_t, bool> max_flow(std::uint32_t s, std::uint32_t t, std::int64_t limit) {
    std::int64_t flow = 0;
    while (flow < limit) {
      // BFS for an augmenting path.
      std::vector<std::int32_t> parent_vertex(adjacency_.size(), -1);
      std::vector<std::int32_t> parent_arc(adjacency_.size(), -1);
      std::queue<std::uint32_t> frontier;
      frontier.push(s);
      parent_vertex[s] = static_cast<std::int32_t>(s);
      while (!frontier.empty() && parent_vertex[t] < 0) {
        const std::uint32_t u = frontier.front();
        frontier.pop();
        for (std::size_t i = 0; i < adjacency_[u].size(); ++i) {
          const FlowArc& arc = adjacency_[u][i];
          if (arc.cap > 0 && parent_vertex[arc.to] < 0) {
            parent_vertex[arc.to] = static_cast<std::int32_t>(u);
            parent_arc[arc.to] = static_cast<std::int32_t>(i);
            frontier.push(arc.to);
          }
        }
      }
      if (parent_vertex[t] < 0) return {flow, true};
      std::int64_t bottleneck = limit - flow;
      for (std::uint32_t v = t; v != s; v = static_cast<std::uint32_t>(parent_vertex[v])) {
        const FlowArc& arc = adjacency_[parent_vertex[v]][parent_arc[v]];
        bottleneck = std::min(bottleneck, arc.cap);
      }
      for (std::uint32_t v = t; v != s; v = static_cast<std::uint32_t>(parent_vertex[v])) {
        FlowArc& arc = adjacency_[parent_vertex[v]][parent_arc[v]];
        arc.cap -= bottleneck;
        adjacency_[arc.to][arc.rev].cap += bottleneck;
      }
      flow += bottleneck;
    }
    return {flow, false};
  }

  // Supernodes reachable from s in the residual network.
  std::vector<VertexId> residual_side(std::uint32_t s) const {
    std::vector<bool> seen(adjacency_.size(), false);
    std::queue<std::uint32_t> frontier;
    frontier.push(s);
    seen[s] = true;
    while (!frontier.empty()) {
      const std::uint32_t u = frontier.front();
      frontier.pop();
      for (const FlowArc& arc : adjacency_[u]) {
        if (arc.cap > 0 && !seen[arc.to]) {
          seen[arc.to] = true;
          frontier.push(arc.to);
        }
      }
    }
    std::vector<VertexId> side;
    for (std::size_t v = 0; v < seen.size(); ++v) {
      if (seen[v]) side.push_back(static_cast<VertexId>(v));
    }
    return side;
  }

 private:
  std::vector<std::vector<FlowArc>> adjacency_;
};

std::vector<std::uint64_t> supernode_degrees(const MultiGraph& mg) {
  std::vector<std::uint64_t> degree(mg.supernode_count(), 0);
  for (const MultiEdge& e : mg.edges()) {
    ++degree[e.u];
    ++degree[e.v];
  }
  return degree;
}

MultiCut disconnected_component_cut(const MultiGraph& mg) {
  DisjointSets sets(mg.supernode_count());
  for (const MultiEdge& e : mg.edges()) sets.unite(e.u, e.v);
  const std::size_t root = sets.find(0);
  MultiCut cut;
  cut.value = 0;
  for (std::size_t v = 0; v < mg.supernode_count(); ++v) {
    if (sets.find(v) == root) cut.side.push_back(static_cast<VertexId>(v));
  }
  return cut;
}

}  // namespace

MultiCut maxflow_mincut(const MultiGraph& mg) {
  const std::size_t n = mg.supernode_count();
  if (n < 2) throw std::invalid_argument("maxflow oracle requires >= 2 supernodes");
  if (!mg.is_connected()) return disconnected_component_cut(mg);

  // Bundle parallel edges into capacities.
  std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> bundled(n);
  {
    std::vector<std::vector<std::int64_t>> cap;
    // Sparse accumulation via sort.
    std::vector<std::pair<std::uint64_t, std::int64_t>> pairs;
    pairs.reserve(mg.edge_count());
    for (const MultiEdge& e : mg.edges()) {
      const std::uint64_t key = (static_cast<std::uint64_t>(std::min(e.u, e.v)) << 32) |
                                static_cast<std::uint64_t>(std::max(e.u, e.v));
      pairs.emplace_back(key, 1);
    }
    std::sort(pairs.begin(), pairs.end());
    for (std::size_t i = 0; i < pairs.size();) {
      std::size_t j = i;
      std::int64_t total = 0;
      while (j < pairs.size() && pairs[j].first == pairs[i].first) {
        total += pairs[j].second;
        ++j;
      }
      const auto u = static_cast<std::uint32_t>(pairs[i].first >> 32);
      const auto v = static_cast<std::uint32_t>(pairs[i].first & 0xffffffffu);
      bundled[u].emplace_back(v, total);
      i = j;
    }
  }

  const std::vector<std::uint64_t> degree = supernode_degrees(mg);
  std::uint32_t source = 0;
  for (std::size_t v = 1; v < n; ++v) {
    if (degree[v] < degree[source]) source = static_cast<std::uint32_t>(v);
  }

  MultiCut best;
  best.value = static_cast<std::size_t>(degree[source]);
  best.side = {static_cast<VertexId>(source)};

  for (std::uint32_t target = 0; target < n; ++target) {
    if (target == source || best.value == 0) continue;
    FlowNetwork network(n);
    for (std::uint32_t u = 0; u < n; ++u) {
      for (const auto& [v, cap] : bundled[u]) network.add_undirected(u, v, cap);
    }
    const auto [flow, exhausted] =
        network.max_flow(source, target, static_cast<std::int64_t>(best.value));
    if (exhausted && static_cast<std::size_t>(flow) < best.value) {
      best.value = static_cast<std::size_t>(flow);
      best.side = network.residual_side(source);
    }
  }
  return best;
}

MultiCut oracle_mincut_multigraph(const MultiGraph& mg) {
  if (mg.supernode_count() < 2) {
    throw std::invalid_argument("min cut undefined for fewer than two supernodes");
  }
  if (!mg.is_connected()) return disconnected_component_cut(mg);
  if (mg.supernode_count() <= 16) return exhaustive_mincut(mg);
  return maxflow_mincut(mg);
}

namespace {

MinCutResult result_from_side(const SimpleGraph& g, std::vector<VertexId> side,
                              SolveMethod method) {
  MinCutResult result;
  result.witness = cut_from_side(g, side);
  result.value = result.witness.size();
  result.method = method;
  result.is_singleton = result.witness.is_singleton;
  return result;
}

MinCutResult disconnected_result(const SimpleGraph& g, SolveMethod method) {
  // Witness: the component of vertex 0 against the rest.
  std::vector<EdgeId> all(g.edge_count());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<EdgeId>(i);
  const ComponentLabeling full = connected_components(g, all);
  std::vector<VertexId> side;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (full.labels[v] == full.labels[0]) side.push_back(static_cast<VertexId>(v));
  }
  MinCutResult result = result_from_side(g, std::move(side), method);
  if (result.value != 0) throw std::logic_error("component witness must have an empty crossing");
  return result;
}

}  // namespace

MinCutResult oracle_mincut(const SimpleGraph& g) {
  if (g.vertex_count() < 2) {
    throw std::invalid_argument("edge connectivity undefined for fewer than two vertices");
  }
  const SolveMethod method = g.vertex_count() <= 16 ? SolveMethod::OracleExhaustive
                                                    : SolveMethod::OracleMaxflow;
  if (!g.is_connected()) return disconnected_result(g, method);
  const MultiGraph mg = MultiGraph::identity(g);
  const MultiCut cut =
      g.vertex_count() <= 16 ? exhaustive_mincut(mg) : maxflow_mincut(mg);
  MinCutResult result = result_from_side(g, cut.side, method);
  if (result.value != cut.value) throw std::logic_error("oracle witness does not match its value");
  return result;
}

MinCutResult stoer_wagner_mincut(const SimpleGraph& g) {
  if (g.vertex_count() < 2) {
    throw std::invalid_argument("edge connectivity undefined for fewer than two vertices");
  }
  if (!g.is_connected()) return disconnected_result(g, SolveMethod::StoerWagnerDirect);
  const MultiCut cut = stoer_wagner(MultiGraph::identity(g));
  MinCutResult result = result_from_side(g, cut.side, SolveMethod::StoerWagnerDirect);
  if (result.value != cut.value) throw std::logic_error("solver witness does not match its value");
  return result;
}

MinCutResult edge_connectivity(const SimpleGraph& g, const AmplificationConfig& cfg,
                               PipelineVariant variant, std::uint64_t seed,
                               unsigned threads) {
  if (g.vertex_count() < 2) {
    throw std::invalid_argument("edge connectivity undefined for fewer than two vertices");
  }
  const SolveMethod method = variant == PipelineVariant::Amplified
                                 ? SolveMethod::PipelineAmplified
                                 : SolveMethod::PipelineDense;
  if (!g.is_connected()) return disconnected_result(g, method);

  const MultiGraph contracted =
      variant == PipelineVariant::Amplified
          ? amplified_contraction(g, cfg, derive_seed(seed, 0xA), threads)
          : dense_contraction(g, cfg, derive_seed(seed, 0xD));

  const std::size_t delta = g.min_degree();
  if (contracted.supernode_count() >= 2) {
    const MultiCut candidate = stoer_wagner(contracted);
    if (candidate.value < delta) {
      MinCutResult result =
          result_from_side(g, contracted.preimage(candidate.side), method);
      if (result.value != candidate.value) {
        throw std::logic_error("contracted cut does not map back to an equal-size cut");
      }
      return result;
    }
  }
  MinCutResult result =
      result_from_side(g, {g.min_degree_vertex()}, method);
  if (result.value != delta) throw std::logic_error("singleton witness must have size delta");
  return result;
}

}  // namespace mincut
