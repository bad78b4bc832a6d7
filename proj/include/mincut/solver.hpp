// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mincut/contraction.hpp"
#include "mincut/graph.hpp"

namespace mincut {

enum class SolveMethod {
  PipelineAmplified,
  PipelineDense,
  StoerWagnerDirect,
  OracleExhaustive,
  OracleMaxflow,
};

std::string to_string(SolveMethod method);

struct MinCutResult {
  std::size_t value = 0;
  Cut witness;          // original-graph coordinates; witness.size() == value
  SolveMethod method = SolveMethod::OracleExhaustive;
  bool is_singleton = false;
};

// Min cut of a multigraph given as (value, supernode side).
struct MultiCut {
  std::size_t value = 0;
  std::vector<VertexId> side;
};

// Exact global min cut with parallel edges counted by multiplicity. Requires
// a connected multigraph with at least two supernodes.
MultiCut stoer_wagner(const MultiGraph& mg);

// Independent ground truths. exhaustive_mincut enumerates the 2^(n-1) - 1
// sides containing supernode 0 and requires supernode_count <= 16;
// maxflow_mincut runs unit-capacity augmenting-path flows from a fixed source
// to every other supernode. oracle_mincut_multigraph picks by size and
// returns value 0 with a component side on disconnected input.
MultiCut exhaustive_mincut(const MultiGraph& mg);
MultiCut maxflow_mincut(const MultiGraph& mg);
MultiCut oracle_mincut_multigraph(const MultiGraph& mg);

// Ground-truth edge connectivity of a simple graph; exact in both regimes.
MinCutResult oracle_mincut(const SimpleGraph& g);

// Stoer-Wagner applied directly to the (uncontracted) graph.
MinCutResult stoer_wagner_mincut(const SimpleGraph& g);

// The three-step pipeline: contract (amplified or dense variant), solve the
// contracted multigraph, and return the smaller of the contracted-graph cut
// mapped back to original coordinates and the minimum-degree singleton cut.
// Disconnected input short-circuits to value 0 with a component witness.
MinCutResult edge_connectivity(const SimpleGraph& g, const AmplificationConfig& cfg,
                               PipelineVariant variant, std::uint64_t seed,
                               unsigned threads = 1);

}  // namespace mincut
