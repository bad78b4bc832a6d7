// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "mincut/graph.hpp"

namespace mincut {

// Sparse k-edge-connectivity certificate: a forest decomposition with fewer
// than k * supernode_count edges that crosses every cut of size c at least
// min(k, c) times.
struct CertificateForests {
  std::size_t k = 0;
  std::vector<EdgeId> retained_edge_ids;     // ascending original edge ids
  std::vector<std::uint32_t> forest_index;   // aligned with retained_edge_ids, 1..k
};

// Scan-based forest decomposition: vertices are visited in maximum-adjacency
// (legal) order, each scanned edge joins the lowest-index forest in which its
// endpoints are still disconnected, and edges connected in all k forests are
// discarded. Ties between parallel edges break by edge id. Deterministic.
CertificateForests sparse_certificate(const MultiGraph& mg, std::size_t k);

// Contracts every edge not in the certificate. The result has fewer than
// k * supernode_count edges and preserves every cut of size at most k with
// identical edge ids.
MultiGraph reduce_edges_certificate(const MultiGraph& mg, std::size_t k);

}  // namespace mincut
