// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mincut/contraction.hpp"
#include "mincut/generators.hpp"
#include "mincut/graph.hpp"

namespace mincut {

struct TrialRecord {
  std::uint64_t seed = 0;
  std::vector<double> values;  // aligned with TrialBatch::value_names
};

struct BatchSummary {
  double mean = 0.0;
  double median = 0.0;
  double p90 = 0.0;
  double max = 0.0;
};

// One experiment batch: the instance descriptor, the per-trial records, and
// order-independent summaries. All measured quantities are finite and
// non-negative; trial i uses derive_seed(master_seed, i + 1) and the instance
// itself is built from derive_seed(master_seed, 0).
struct TrialBatch {
  std::string experiment;
  std::string instance;
  std::uint64_t master_seed = 0;
  std::size_t trial_count = 0;
  std::vector<std::string> value_names;
  std::vector<TrialRecord> trials;
  std::map<std::string, BatchSummary> summaries;  // per value name
  std::map<std::string, double> ratios;           // experiment-specific statistics
};

// Component count of a random k-out subgraph per trial; ratios report
// max(count * delta / n).
TrialBatch measure_component_count(const GeneratorSpec& family, std::size_t k,
                                   std::size_t trials, std::uint64_t seed);

// Sum over 2-out components of exact BFS diameters; ratios report
// max(sum * delta / (n * ln delta)). Requires delta >= 2.
TrialBatch measure_diameter_sum(const GeneratorSpec& family, std::size_t trials,
                                std::uint64_t seed);

// Frequency with which a 2-out sample misses every edge of the family's
// planted cut. The planted cut is verified (2 - eps)-minimum and non-singleton
// against the exact oracle before the batch; ratios report the exact
// per-instance product prod (1 - c(v)/d(v))^2 and the analytic floor
// exp(-8 (2 - eps) / eps).
TrialBatch measure_preservation(const GeneratorSpec& family, double eps,
                                std::size_t trials, std::uint64_t seed);

// Edge and supernode counts of amplified_contraction per trial; ratios report
// max(edges / n) and max(supernodes * delta / n).
TrialBatch measure_edge_budget(const GeneratorSpec& family, const AmplificationConfig& cfg,
                               std::size_t trials, std::uint64_t seed);

// Wall-clock seconds of the contraction pipeline across an instance grid;
// ratios report the worst step-to-step growth factor. Informational.
TrialBatch measure_runtime_scaling(const std::vector<GeneratorSpec>& grid,
                                   PipelineVariant variant, std::uint64_t seed);

// Exact 1-out preservation probability of a cut: prod over cut-incident
// vertices of (1 - c(v)/d(v)).
double one_out_preservation_product(const SimpleGraph& g, const Cut& cut);

}  // namespace mincut
