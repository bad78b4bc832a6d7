// SPDX-License-Identifier: Apache-2.0
#include "mincut/contraction.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "mincut/certificate.hpp"
#include "mincut/disjoint_sets.hpp"
#include "mincut/rng.hpp"

namespace mincut {

namespace {

// Single source of truth for the sampling order: vertex-major, k consecutive
// draws per vertex. Both the materialized sample and the contraction fast
// path consume the stream identically.
template <typename Visitor>
void for_each_sampled_edge(const SimpleGraph& g, std::size_t k, std::uint64_t seed,
                           Visitor&& visit) {
  Rng rng(seed);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const auto incident = g.neighbors(static_cast<VertexId>(v));
    if (incident.empty()) {
      throw std::invalid_argument("k-out sampling requires minimum degree >= 1 (vertex " +
                                  std::to_string(v) + " is isolated)");
    }
    for (std::size_t j = 0; j < k; ++j) {
      const auto& pick = incident[rng.next_below(incident.size())];
      visit(static_cast<VertexId>(v), pick);
    }
  }
}

std::vector<VertexId> component_labels(DisjointSets& sets) {
  std::vector<VertexId> labels(sets.element_count());
  for (std::size_t v = 0; v < labels.size(); ++v) {
    labels[v] = static_cast<VertexId>(sets.find(v));
  }
  return labels;
}

}  // namespace

AmplificationConfig AmplificationConfig::defaults(std::size_t n, PipelineVariant variant,
                                                  double eps, double gamma, double p_hat) {
  AmplificationConfig cfg;
  cfg.eps = eps;
  cfg.gamma = gamma;
  cfg.p_hat = p_hat;
  const double ln_n = std::log(static_cast<double>(std::max<std::size_t>(n, 2)));
  const double p_rep = variant == PipelineVariant::Dense ? p_hat / 2.0 : p_hat;
  cfg.q = static_cast<std::size_t>(std::ceil(kRepetitionFactor * gamma * ln_n / p_rep));
  cfg.q = std::max<std::size_t>(cfg.q, 1);
  cfg.r = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(p_rep * cfg.q / 2.0)));
  cfg.validate();
  return cfg;
}

void AmplificationConfig::validate() const {
  if (!(eps > 0.0 && eps <= 1.0)) throw std::invalid_argument("eps must be in (0, 1]");
  if (!(gamma > 0.0)) throw std::invalid_argument("gamma must be positive");
  if (q < 1) throw std::invalid_argument("q must be positive");
  if (r < 1 || r > q) throw std::invalid_argument("r must satisfy 1 <= r <= q");
  if (!(p_hat > 0.0 && p_hat < 1.0)) throw std::invalid_argument("p_hat must be in (0, 1)");
  if (!(certificate_multiplier > 0.0)) {
    throw std::invalid_argument("certificate_multiplier must be positive");
  }
  if (!(edge_sample_rate_denominator > 0.0)) {
    throw std::invalid_argument("edge_sample_rate_denominator must be positive");
  }
}

KOutSample sample_k_out(const SimpleGraph& g, std::size_t k, std::uint64_t seed) {
  if (k < 1) throw std::invalid_argument("k-out sampling requires k >= 1");
  KOutSample sample;
  sample.k = k;
  sample.chosen.resize(g.vertex_count());
  for (auto& list : sample.chosen) list.reserve(k);
  for_each_sampled_edge(g, k, seed, [&](VertexId v, const AdjacencyEntry& pick) {
    sample.chosen[v].push_back(pick.edge);
  });
  for (const auto& list : sample.chosen) {
    sample.edge_id_set.insert(sample.edge_id_set.end(), list.begin(), list.end());
  }
  std::sort(sample.edge_id_set.begin(), sample.edge_id_set.end());
  sample.edge_id_set.erase(std::unique(sample.edge_id_set.begin(), sample.edge_id_set.end()),
                           sample.edge_id_set.end());
  return sample;
}

MultiGraph k_out_contraction(const SimpleGraph& g, std::size_t k, std::uint64_t seed) {
  DisjointSets sets(g.vertex_count());
  for_each_sampled_edge(g, k, seed, [&](VertexId v, const AdjacencyEntry& pick) {
    sets.unite(v, pick.neighbor);
  });
  return contract_by_labels(g, component_labels(sets));
}

MultiGraph reduce_edges_random(const MultiGraph& mg, std::size_t delta,
                               double rate_denominator, std::uint64_t seed) {
  if (delta < 1) throw std::invalid_argument("edge reduction requires delta >= 1");
  if (!(rate_denominator > 0.0)) {
    throw std::invalid_argument("rate denominator must be positive");
  }
  const double p = 1.0 / (rate_denominator * static_cast<double>(delta));
  Rng rng(seed);
  DisjointSets sets(mg.supernode_count());
  for (const MultiEdge& e : mg.edges()) {
    if (rng.next_double() < p) sets.unite(e.u, e.v);
  }
  std::vector<VertexId> labels(mg.supernode_count());
  for (std::size_t v = 0; v < labels.size(); ++v) {
    labels[v] = static_cast<VertexId>(sets.find(v));
  }
  return contract_multigraph(mg, labels);
}

MultiGraph single_contraction(const SimpleGraph& g, const AmplificationConfig& cfg,
                              Reducer reducer, std::uint64_t seed) {
  cfg.validate();
  if (!g.is_connected()) {
    throw std::invalid_argument("single contraction requires a connected graph");
  }
  const std::size_t delta = g.min_degree();
  if (delta < 1) throw std::invalid_argument("single contraction requires delta >= 1");

  MultiGraph contracted = k_out_contraction(g, 2, derive_seed(seed, 1));
  if (reducer == Reducer::Certificate) {
    const auto k = static_cast<std::size_t>(
        std::ceil(cfg.certificate_multiplier * static_cast<double>(delta)));
    return reduce_edges_certificate(contracted, std::max<std::size_t>(k, 1));
  }
  return reduce_edges_random(contracted, delta, cfg.edge_sample_rate_denominator,
                             derive_seed(seed, 2));
}

std::vector<std::uint32_t> contraction_votes(const SimpleGraph& g,
                                             const AmplificationConfig& cfg,
                                             std::uint64_t seed, unsigned threads) {
  cfg.validate();
  const std::size_t m = g.edge_count();
  const unsigned worker_count =
      std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(cfg.q)));

  auto run_range = [&](std::size_t begin, std::size_t end, std::vector<std::uint32_t>& votes) {
    for (std::size_t rep = begin; rep < end; ++rep) {
      const MultiGraph result = single_contraction(g, cfg, cfg.reducer, derive_seed(seed, rep));
      for (const MultiEdge& e : result.edges()) ++votes[e.original_edge];
    }
  };

  std::vector<std::uint32_t> votes(m, 0);
  if (worker_count == 1) {
    run_range(0, cfg.q, votes);
    return votes;
  }

  std::vector<std::vector<std::uint32_t>> partial(worker_count,
                                                  std::vector<std::uint32_t>(m, 0));
  std::vector<std::thread> workers;
  const std::size_t chunk = (cfg.q + worker_count - 1) / worker_count;
  for (unsigned w = 0; w < worker_count; ++w) {
    const std::size_t begin = std::min<std::size_t>(w * chunk, cfg.q);
    const std::size_t end = std::min<std::size_t>(begin + chunk, cfg.q);
    workers.emplace_back(run_range, begin, end, std::ref(partial[w]));
  }
  for (auto& worker : workers) worker.join();
  for (const auto& local : partial) {
    for (std::size_t i = 0; i < m; ++i) votes[i] += local[i];
  }
  return votes;
}

MultiGraph amplified_contraction(const SimpleGraph& g, const AmplificationConfig& cfg,
                                 std::uint64_t seed, unsigned threads) {
  const std::vector<std::uint32_t> votes = contraction_votes(g, cfg, seed, threads);
  DisjointSets sets(g.vertex_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (votes[i] < cfg.r) {
      const Edge e = g.edge(static_cast<EdgeId>(i));
      sets.unite(e.u, e.v);
    }
  }
  std::vector<VertexId> labels(g.vertex_count());
  for (std::size_t v = 0; v < labels.size(); ++v) {
    labels[v] = static_cast<VertexId>(sets.find(v));
  }
  return contract_by_labels(g, labels);
}

}  // namespace mincut
