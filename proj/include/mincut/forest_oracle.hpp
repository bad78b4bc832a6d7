// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "mincut/contraction.hpp"
#include "mincut/disjoint_sets.hpp"
#include "mincut/graph.hpp"
#include "mincut/rng.hpp"

namespace mincut {

// Online preserve/contract data structure: a 2-out contraction colors the
// vertices, and 4 * delta edge-disjoint forests grow over the colors. Each
// distinct edge may be queried once; the answer sequence may be adaptive.
// Guarantees: at most 4 * delta * (colors - 1) Preserve answers overall, and
// for an edge of a preserved (2 - eps)-small cut, Preserve with probability
// at least half the cut's 2-out preservation rate.
class ForestOracle {
 public:
  enum class Answer { Preserve, Contract };

  // Draws one 2-out sample and colors its components. If the component count
  // exceeds supernode_budget the oracle degrades to trivial mode, where every
  // answer is Contract (it then contributes zero Preserve votes upstream).
  // record_forests enables the per-forest edge log used by audits.
  ForestOracle(const SimpleGraph& g, std::size_t supernode_budget, std::uint64_t seed,
               bool record_forests = false);

  Answer query(VertexId u, VertexId v, EdgeId id);

  bool trivial_mode() const { return trivial_; }
  std::size_t color_count() const { return colors_; }
  VertexId color(VertexId v) const { return color_[v]; }
  std::size_t forest_count() const { return forest_count_; }
  std::size_t preserve_count() const { return preserve_count_; }
  const std::vector<std::vector<EdgeId>>& forest_edges() const { return forest_edges_; }

 private:
  std::vector<VertexId> color_;
  std::size_t colors_ = 0;
  std::size_t forest_count_ = 0;         // ell = 4 * delta
  DisjointSets forests_;                 // flat: element (f, c) at f * colors + c
  std::vector<std::vector<EdgeId>> forest_edges_;
  std::vector<bool> queried_;
  std::size_t preserve_count_ = 0;
  bool trivial_ = false;
  bool record_forests_ = false;
  SmallRng rng_;
};

std::size_t default_supernode_budget(const SimpleGraph& g);  // ceil(8 n / delta)

struct DenseStats {
  std::size_t query_rounds = 0;    // edges actually put to the oracles
  std::size_t preserve_voted = 0;  // edges with >= r Preserve answers
  std::size_t merges = 0;          // voted-contract merges
};

// Repetition and voting over cfg.q independent forest oracles: edges are
// scanned in ascending id order, edges whose endpoints are already identified
// are skipped, and an edge merging fewer than cfg.r Preserve votes is
// contracted in a top-level union-find. Whp preserves all non-singleton
// (2 - eps)-small cuts while keeping O(n) edges.
MultiGraph dense_contraction(const SimpleGraph& g, const AmplificationConfig& cfg,
                             std::uint64_t seed, DenseStats* stats = nullptr);

}  // namespace mincut
