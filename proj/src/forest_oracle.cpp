// SPDX-License-Identifier: Apache-2.0
#include "mincut/forest_oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace mincut {

ForestOracle::ForestOracle(const SimpleGraph& g, std::size_t supernode_budget,
                           std::uint64_t seed, bool record_forests)
    : forests_(0), record_forests_(record_forests), rng_(derive_seed(seed, 2)) {
  const std::size_t delta = g.min_degree();
  if (delta < 1) throw std::invalid_argument("forest oracle requires delta >= 1");
  forest_count_ = 4 * delta;

  const KOutSample sample = sample_k_out(g, 2, derive_seed(seed, 1));
  const ComponentLabeling components = connected_components(g, sample.edge_id_set);
  color_ = components.labels;
  colors_ = components.count;
  queried_.assign(g.edge_count(), false);

  if (colors_ > supernode_budget) {
    trivial_ = true;
    return;
  }
  forests_ = DisjointSets(forest_count_ * colors_);
  if (record_forests_) forest_edges_.resize(forest_count_);
}

ForestOracle::Answer ForestOracle::query(VertexId u, VertexId v, EdgeId id) {
  if (id >= queried_.size()) throw std::invalid_argument("query with unknown edge id");
  if (queried_[id]) {
    throw std::invalid_argument("edge " + std::to_string(id) + " queried twice");
  }
  queried_[id] = true;
  if (trivial_) return Answer::Contract;
  const VertexId cu = color_[u];
  const VertexId cv = color_[v];
  if (cu == cv) return Answer::Contract;
  const std::size_t forest = rng_.next_below(forest_count_);
  const std::size_t base = forest * colors_;
  if (forests_.unite(base + cu, base + cv)) {
    ++preserve_count_;
    if (record_forests_) forest_edges_[forest].push_back(id);
    return Answer::Preserve;
  }
  return Answer::Contract;
}

std::size_t default_supernode_budget(const SimpleGraph& g) {
  const double delta = static_cast<double>(g.min_degree());
  return static_cast<std::size_t>(
      std::ceil(8.0 * static_cast<double>(g.vertex_count()) / std::max(delta, 1.0)));
}

MultiGraph dense_contraction(const SimpleGraph& g, const AmplificationConfig& cfg,
                             std::uint64_t seed, DenseStats* stats) {
  cfg.validate();
  if (!g.is_connected()) {
    throw std::invalid_argument("dense contraction requires a connected graph");
  }
  if (g.min_degree() < 1) throw std::invalid_argument("dense contraction requires delta >= 1");

  const std::size_t budget = default_supernode_budget(g);
  std::vector<ForestOracle> oracles;
  oracles.reserve(cfg.q);
  for (std::size_t i = 0; i < cfg.q; ++i) {
    oracles.emplace_back(g, budget, derive_seed(seed, i));
  }

  DenseStats local;
  DisjointSets identified(g.vertex_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge e = g.edge(static_cast<EdgeId>(i));
    if (identified.same(e.u, e.v)) continue;  // contracting it would have no effect
    ++local.query_rounds;
    std::size_t preserve_votes = 0;
    for (ForestOracle& oracle : oracles) {
      if (oracle.query(e.u, e.v, static_cast<EdgeId>(i)) == ForestOracle::Answer::Preserve) {
        ++preserve_votes;
      }
    }
    if (preserve_votes < cfg.r) {
      identified.unite(e.u, e.v);
      ++local.merges;
    } else {
      ++local.preserve_voted;
    }
  }
  if (stats != nullptr) *stats = local;

  std::vector<VertexId> labels(g.vertex_count());
  for (std::size_t v = 0; v < labels.size(); ++v) {
    labels[v] = static_cast<VertexId>(identified.find(v));
  }
  return contract_by_labels(g, labels);
}

}  // namespace mincut
