// SPDX-License-Identifier: Apache-2.0
#include "mincut/certificate.hpp"

#include <algorithm>
#include <stdexcept>

#include "mincut/disjoint_sets.hpp"

namespace mincut {

namespace {

struct IncidentEdge {
  VertexId other;
  std::uint32_t index;  // into mg.edges()
};

}  // namespace

CertificateForests sparse_certificate(const MultiGraph& mg, std::size_t k) {
  if (k < 1) throw std::invalid_argument("certificate requires k >= 1");
  const std::size_t n = mg.supernode_count();

  // Adjacency with incident edges sorted by edge id per vertex.
  std::vector<std::vector<IncidentEdge>> adjacency(n);
  for (std::size_t i = 0; i < mg.edge_count(); ++i) {
    const MultiEdge& e = mg.edges()[i];
    adjacency[e.u].push_back({e.v, static_cast<std::uint32_t>(i)});
    adjacency[e.v].push_back({e.u, static_cast<std::uint32_t>(i)});
  }
  for (auto& list : adjacency) {
    std::sort(list.begin(), list.end(), [&](const IncidentEdge& a, const IncidentEdge& b) {
      return mg.edges()[a.index].original_edge < mg.edges()[b.index].original_edge;
    });
  }

  std::vector<DisjointSets> forests(k, DisjointSets(n));
  std::vector<std::uint32_t> adjacency_count(n, 0);  // scanned edges into each unscanned vertex
  std::vector<bool> scanned(n, false);

  std::vector<std::pair<EdgeId, std::uint32_t>> retained;  // (original id, forest index)
  retained.reserve(std::min(mg.edge_count(), k * n));

  for (std::size_t round = 0; round < n; ++round) {
    // Max-adjacency choice; ties break toward the smallest supernode id.
    std::size_t u = n;
    std::uint32_t best = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (!scanned[v] && (u == n || adjacency_count[v] > best)) {
        u = v;
        best = adjacency_count[v];
      }
    }
    scanned[u] = true;
    for (const IncidentEdge& inc : adjacency[u]) {
      if (scanned[inc.other]) continue;
      ++adjacency_count[inc.other];
      for (std::size_t f = 0; f < k; ++f) {
        if (forests[f].unite(u, inc.other)) {
          retained.emplace_back(mg.edges()[inc.index].original_edge,
                                static_cast<std::uint32_t>(f + 1));
          break;
        }
      }
    }
  }

  std::sort(retained.begin(), retained.end());
  CertificateForests cert;
  cert.k = k;
  cert.retained_edge_ids.reserve(retained.size());
  cert.forest_index.reserve(retained.size());
  for (const auto& [id, forest] : retained) {
    cert.retained_edge_ids.push_back(id);
    cert.forest_index.push_back(forest);
  }
  return cert;
}

MultiGraph reduce_edges_certificate(const MultiGraph& mg, std::size_t k) {
  const CertificateForests cert = sparse_certificate(mg, k);
  // Mark retained by original edge id; ids are unique within the multigraph.
  std::vector<bool> keep;
  {
    EdgeId max_id = 0;
    for (const MultiEdge& e : mg.edges()) max_id = std::max(max_id, e.original_edge);
    keep.assign(mg.edge_count() == 0 ? 0 : static_cast<std::size_t>(max_id) + 1, false);
    for (const EdgeId id : cert.retained_edge_ids) keep[id] = true;
  }
  DisjointSets sets(mg.supernode_count());
  for (const MultiEdge& e : mg.edges()) {
    if (!keep[e.original_edge]) sets.unite(e.u, e.v);
  }
  std::vector<VertexId> labels(mg.supernode_count());
  for (std::size_t v = 0; v < labels.size(); ++v) {
    labels[v] = static_cast<VertexId>(sets.find(v));
  }
  return contract_multigraph(mg, labels);
}

}  // namespace mincut
