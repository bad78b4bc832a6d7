// SPDX-License-Identifier: Apache-2.0
#include "mincut/graph.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "mincut/disjoint_sets.hpp"

namespace mincut {

namespace {

// Dense relabeling by first occurrence of each root, so component ids are
// canonical for a fixed graph and edge set.
ComponentLabeling labels_from_sets(DisjointSets& sets) {
  const std::size_t n = sets.element_count();
  ComponentLabeling out;
  out.labels.assign(n, std::numeric_limits<VertexId>::max());
  std::vector<VertexId> root_label(n, std::numeric_limits<VertexId>::max());
  VertexId next = 0;
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t root = sets.find(v);
    if (root_label[root] == std::numeric_limits<VertexId>::max()) {
      root_label[root] = next++;
    }
    out.labels[v] = root_label[root];
  }
  out.count = next;
  return out;
}

}  // namespace

SimpleGraph::SimpleGraph(std::size_t vertex_count, std::vector<Edge> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
  std::vector<std::uint32_t> degree(n_, 0);
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edges_.size() * 2);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge e = edges_[i];
    if (e.u >= n_ || e.v >= n_) {
      throw std::invalid_argument("edge " + std::to_string(i) + " endpoint out of range: (" +
                                  std::to_string(e.u) + ", " + std::to_string(e.v) + ")");
    }
    if (e.u == e.v) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u) +
                                  " violates simplicity");
    }
    const std::uint64_t key =
        (static_cast<std::uint64_t>(std::min(e.u, e.v)) << 32) | std::max(e.u, e.v);
    if (!seen.insert(key).second) {
      throw std::invalid_argument("duplicate edge (" + std::to_string(e.u) + ", " +
                                  std::to_string(e.v) + ") violates simplicity");
    }
    ++degree[e.u];
    ++degree[e.v];
  }

  adjacency_offset_.assign(n_ + 1, 0);
  for (std::size_t v = 0; v < n_; ++v) adjacency_offset_[v + 1] = adjacency_offset_[v] + degree[v];
  adjacency_.resize(edges_.size() * 2);
  std::vector<std::uint32_t> fill(adjacency_offset_.begin(), adjacency_offset_.end() - 1);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge e = edges_[i];
    adjacency_[fill[e.u]++] = {e.v, static_cast<EdgeId>(i)};
    adjacency_[fill[e.v]++] = {e.u, static_cast<EdgeId>(i)};
  }

  min_degree_vertex_ = 0;
  min_degree_ = n_ == 0 ? 0 : std::numeric_limits<std::size_t>::max();
  for (std::size_t v = 0; v < n_; ++v) {
    if (degree[v] < min_degree_) {
      min_degree_ = degree[v];
      min_degree_vertex_ = static_cast<VertexId>(v);
    }
  }

  DisjointSets sets(n_);
  for (const Edge& e : edges_) sets.unite(e.u, e.v);
  component_count_ = sets.set_count();
}

std::size_t SimpleGraph::min_degree() const {
  if (n_ == 0) throw std::logic_error("min_degree of an empty graph");
  return min_degree_;
}

VertexId SimpleGraph::min_degree_vertex() const {
  if (n_ == 0) throw std::logic_error("min_degree_vertex of an empty graph");
  return min_degree_vertex_;
}

MultiGraph::MultiGraph(std::size_t supernode_count, std::vector<MultiEdge> edges,
                       std::vector<VertexId> vertex_map)
    : supernode_count_(supernode_count),
      edges_(std::move(edges)),
      vertex_map_(std::move(vertex_map)) {
  for (const MultiEdge& e : edges_) {
    if (e.u == e.v) throw std::logic_error("self-loop in multigraph");
    if (e.u >= supernode_count_ || e.v >= supernode_count_) {
      throw std::logic_error("multigraph endpoint out of range");
    }
  }
  for (const VertexId s : vertex_map_) {
    if (s >= supernode_count_) throw std::logic_error("vertex_map target out of range");
  }
}

MultiGraph MultiGraph::identity(const SimpleGraph& g) {
  std::vector<MultiEdge> edges;
  edges.reserve(g.edge_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge e = g.edge(static_cast<EdgeId>(i));
    edges.push_back({e.u, e.v, static_cast<EdgeId>(i)});
  }
  std::vector<VertexId> map(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) map[v] = static_cast<VertexId>(v);
  return MultiGraph(g.vertex_count(), std::move(edges), std::move(map));
}

std::vector<VertexId> MultiGraph::preimage(std::span<const VertexId> supernodes) const {
  std::vector<bool> wanted(supernode_count_, false);
  for (const VertexId s : supernodes) wanted.at(s) = true;
  std::vector<VertexId> out;
  for (std::size_t v = 0; v < vertex_map_.size(); ++v) {
    if (wanted[vertex_map_[v]]) out.push_back(static_cast<VertexId>(v));
  }
  return out;
}

bool MultiGraph::is_connected() const {
  DisjointSets sets(supernode_count_);
  for (const MultiEdge& e : edges_) sets.unite(e.u, e.v);
  return sets.set_count() <= 1;
}

ComponentLabeling connected_components(const SimpleGraph& g,
                                       std::span<const EdgeId> edge_ids) {
  DisjointSets sets(g.vertex_count());
  for (const EdgeId id : edge_ids) {
    const Edge e = g.edge(id);
    sets.unite(e.u, e.v);
  }
  return labels_from_sets(sets);
}

ComponentLabeling multigraph_components(const MultiGraph& mg,
                                        std::span<const std::size_t> edge_indices) {
  DisjointSets sets(mg.supernode_count());
  for (const std::size_t i : edge_indices) {
    const MultiEdge& e = mg.edges()[i];
    sets.unite(e.u, e.v);
  }
  return labels_from_sets(sets);
}

namespace {

// Compacts arbitrary labels to 0..count-1 by first occurrence. Dense table
// when label values are small, hash map for sparse label spaces.
std::vector<VertexId> compact_labels(std::span<const VertexId> labels, std::size_t& count) {
  std::vector<VertexId> dense(labels.size());
  VertexId max_label = 0;
  for (const VertexId l : labels) max_label = std::max(max_label, l);
  VertexId next = 0;
  if (labels.empty() || static_cast<std::size_t>(max_label) <= labels.size() * 4) {
    std::vector<VertexId> table(static_cast<std::size_t>(max_label) + 1,
                                std::numeric_limits<VertexId>::max());
    for (std::size_t v = 0; v < labels.size(); ++v) {
      if (table[labels[v]] == std::numeric_limits<VertexId>::max()) table[labels[v]] = next++;
      dense[v] = table[labels[v]];
    }
  } else {
    std::unordered_map<VertexId, VertexId> table;
    table.reserve(labels.size());
    for (std::size_t v = 0; v < labels.size(); ++v) {
      const auto [it, inserted] = table.try_emplace(labels[v], next);
      if (inserted) ++next;
      dense[v] = it->second;
    }
  }
  count = next;
  return dense;
}

}  // namespace

MultiGraph contract_by_labels(const SimpleGraph& g, std::span<const VertexId> labels) {
  if (labels.size() != g.vertex_count()) {
    throw std::invalid_argument("labeling must cover every vertex");
  }
  std::size_t count = 0;
  std::vector<VertexId> dense = compact_labels(labels, count);
  std::vector<MultiEdge> edges;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge e = g.edge(static_cast<EdgeId>(i));
    if (dense[e.u] != dense[e.v]) {
      edges.push_back({dense[e.u], dense[e.v], static_cast<EdgeId>(i)});
    }
  }
  return MultiGraph(count, std::move(edges), std::move(dense));
}

MultiGraph contract_multigraph(const MultiGraph& mg, std::span<const VertexId> labels) {
  if (labels.size() != mg.supernode_count()) {
    throw std::invalid_argument("labeling must cover every supernode");
  }
  std::size_t count = 0;
  std::vector<VertexId> dense = compact_labels(labels, count);
  std::vector<MultiEdge> edges;
  for (const MultiEdge& e : mg.edges()) {
    if (dense[e.u] != dense[e.v]) edges.push_back({dense[e.u], dense[e.v], e.original_edge});
  }
  std::vector<VertexId> map(mg.vertex_map().size());
  for (std::size_t v = 0; v < map.size(); ++v) map[v] = dense[mg.vertex_map()[v]];
  return MultiGraph(count, std::move(edges), std::move(map));
}

Cut cut_from_side(const SimpleGraph& g, std::span<const VertexId> side) {
  if (side.empty() || side.size() >= g.vertex_count()) {
    throw std::invalid_argument("cut side must be a proper nonempty vertex subset");
  }
  std::vector<bool> in_side(g.vertex_count(), false);
  for (const VertexId v : side) {
    if (v >= g.vertex_count()) throw std::invalid_argument("cut side vertex out of range");
    if (in_side[v]) throw std::invalid_argument("cut side contains a duplicate vertex");
    in_side[v] = true;
  }
  Cut cut;
  cut.side.assign(side.begin(), side.end());
  std::sort(cut.side.begin(), cut.side.end());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge e = g.edge(static_cast<EdgeId>(i));
    if (in_side[e.u] != in_side[e.v]) cut.edge_ids.push_back(static_cast<EdgeId>(i));
  }
  cut.is_singleton = side.size() == 1 || side.size() + 1 == g.vertex_count();
  return cut;
}

}  // namespace mincut
