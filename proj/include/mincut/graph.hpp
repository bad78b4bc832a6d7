// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace mincut {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
  VertexId u;
  VertexId v;
};

struct AdjacencyEntry {
  VertexId neighbor;
  EdgeId edge;
};

// Immutable simple undirected graph. Edge identity is positional: the edge at
// index i of edges() has id i, and ids are stable through every contraction
// downstream. Construction rejects self-loops and duplicate vertex pairs.
class SimpleGraph {
 public:
  SimpleGraph(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  Edge edge(EdgeId id) const { return edges_[id]; }

  std::span<const AdjacencyEntry> neighbors(VertexId v) const {
    return {adjacency_.data() + adjacency_offset_[v],
            adjacency_.data() + adjacency_offset_[v + 1]};
  }
  std::size_t degree(VertexId v) const {
    return adjacency_offset_[v + 1] - adjacency_offset_[v];
  }

  // delta; requires at least one vertex.
  std::size_t min_degree() const;
  VertexId min_degree_vertex() const;

  std::size_t component_count() const { return component_count_; }
  bool is_connected() const { return component_count_ == 1; }

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<std::uint32_t> adjacency_offset_;
  std::vector<AdjacencyEntry> adjacency_;
  std::size_t min_degree_ = 0;
  VertexId min_degree_vertex_ = 0;
  std::size_t component_count_ = 0;
};

struct MultiEdge {
  VertexId u;                // supernode endpoints, u != v
  VertexId v;
  EdgeId original_edge;      // id in the source SimpleGraph
};

// Contraction quotient of a SimpleGraph: parallel edges are kept individually
// so edge-id provenance survives; self-loops are dropped at contraction time.
// vertex_map sends each original vertex to its supernode.
class MultiGraph {
 public:
  MultiGraph(std::size_t supernode_count, std::vector<MultiEdge> edges,
             std::vector<VertexId> vertex_map);

  static MultiGraph identity(const SimpleGraph& g);

  std::size_t supernode_count() const { return supernode_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<MultiEdge>& edges() const { return edges_; }
  const std::vector<VertexId>& vertex_map() const { return vertex_map_; }

  // Original vertices mapped into the given supernode set.
  std::vector<VertexId> preimage(std::span<const VertexId> supernodes) const;

  bool is_connected() const;

 private:
  std::size_t supernode_count_;
  std::vector<MultiEdge> edges_;
  std::vector<VertexId> vertex_map_;
};

struct ComponentLabeling {
  std::vector<VertexId> labels;  // dense, 0..count-1, by first occurrence
  std::size_t count = 0;
};

// Components of the spanning subgraph (V, edge_ids).
ComponentLabeling connected_components(const SimpleGraph& g,
                                       std::span<const EdgeId> edge_ids);

// Components over supernodes of mg induced by the edges at the given indices
// into mg.edges().
ComponentLabeling multigraph_components(const MultiGraph& mg,
                                        std::span<const std::size_t> edge_indices);

// Quotient by an arbitrary per-vertex labeling: supernodes are label classes,
// an edge survives iff its endpoints' labels differ, surviving edges keep
// their original ids.
MultiGraph contract_by_labels(const SimpleGraph& g, std::span<const VertexId> labels);

// Further contraction of a multigraph by a per-supernode labeling; the
// vertex_map composes so the result still maps original vertices.
MultiGraph contract_multigraph(const MultiGraph& mg, std::span<const VertexId> labels);

struct Cut {
  std::vector<VertexId> side;      // sorted original vertex ids, proper nonempty
  std::vector<EdgeId> edge_ids;    // sorted crossing edge ids
  bool is_singleton = false;       // |side| == 1 or n-1

  std::size_t size() const { return edge_ids.size(); }
};

// Exact crossing set of a proper nonempty vertex side.
Cut cut_from_side(const SimpleGraph& g, std::span<const VertexId> side);

}  // namespace mincut
