// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "mincut/graph.hpp"

namespace mincut {

// Random k-out sample: for each vertex, k incident edges drawn uniformly with
// replacement (across draws and across vertices).
struct KOutSample {
  std::size_t k = 0;
  std::vector<std::vector<EdgeId>> chosen;  // per-vertex, k entries each
  std::vector<EdgeId> edge_id_set;          // sorted, deduplicated union
};

enum class Reducer { Certificate, RandomSample };
enum class PipelineVariant { Amplified, Dense };

// Repetition-and-voting parameters plus every constant the analysis leaves
// symbolic. Defaults derive q and r from (gamma, p_hat):
//   q = ceil(c_q * gamma * ln(n) / p_rep),  r = max(1, ceil(p_rep * q / 2)),
// with p_rep = p_hat for the amplified variant and p_hat / 2 for the dense
// variant (its per-repetition oracle halves the success rate).
struct AmplificationConfig {
  double eps = 1.0;          // target cut class (2 - eps), in (0, 1]
  double gamma = 2.0;        // failure exponent of the 1 - O(n^-gamma) goal
  std::size_t q = 1;         // repetition count
  std::size_t r = 1;         // vote threshold, 1 <= r <= q
  double p_hat = 0.02;       // assumed per-repetition preservation rate
  double certificate_multiplier = 2.0;       // certificate strength k = mult * delta
  double edge_sample_rate_denominator = 2.0; // sampling rate 1 / (denom * delta)
  Reducer reducer = Reducer::Certificate;

  static AmplificationConfig defaults(std::size_t n,
                                      PipelineVariant variant = PipelineVariant::Amplified,
                                      double eps = 1.0, double gamma = 2.0,
                                      double p_hat = 0.02);
  void validate() const;
};

inline constexpr double kRepetitionFactor = 8.0;  // c_q in the q formula

KOutSample sample_k_out(const SimpleGraph& g, std::size_t k, std::uint64_t seed);

// Contracts the connected components of the k-out subgraph. A cut survives
// exactly when the sample misses all of its edges.
MultiGraph k_out_contraction(const SimpleGraph& g, std::size_t k, std::uint64_t seed);

// Marks each edge independently with probability 1 / (rate_denominator * delta)
// and contracts the components of the marked set. A fixed cut of size c
// survives with probability (1 - 1/(rate_denominator * delta))^c.
MultiGraph reduce_edges_random(const MultiGraph& mg, std::size_t delta,
                               double rate_denominator, std::uint64_t seed);

// One two-part contraction: 2-out contraction followed by the chosen edge
// reduction. Requires a connected graph with delta >= 1.
MultiGraph single_contraction(const SimpleGraph& g, const AmplificationConfig& cfg,
                              Reducer reducer, std::uint64_t seed);

// Per-edge survival counts over cfg.q independent single contractions
// (repetition i uses derive_seed(seed, i)). Exposed so vote bookkeeping is
// auditable.
std::vector<std::uint32_t> contraction_votes(const SimpleGraph& g,
                                             const AmplificationConfig& cfg,
                                             std::uint64_t seed, unsigned threads = 1);

// Repetition and voting: contracts every edge that survives fewer than cfg.r
// of cfg.q single contractions. With default parameters this preserves all
// non-singleton (2 - eps)-small cuts whp while keeping O(n) edges and
// O(n / delta) supernodes.
MultiGraph amplified_contraction(const SimpleGraph& g, const AmplificationConfig& cfg,
                                 std::uint64_t seed, unsigned threads = 1);

}  // namespace mincut
