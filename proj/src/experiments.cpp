// SPDX-License-Identifier: Apache-2.0
#include "mincut/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <queue>
#include <stdexcept>

#include "mincut/forest_oracle.hpp"
#include "mincut/rng.hpp"
#include "mincut/solver.hpp"

namespace mincut {

namespace {

BatchSummary summarize(std::vector<double> values) {
  BatchSummary summary;
  if (values.empty()) return summary;
  std::sort(values.begin(), values.end());
  double total = 0.0;
  for (const double v : values) total += v;
  summary.mean = total / static_cast<double>(values.size());
  summary.median = values[values.size() / 2];
  summary.p90 = values[std::min(values.size() - 1,
                                static_cast<std::size_t>(0.9 * static_cast<double>(values.size())))];
  summary.max = values.back();
  return summary;
}

void finalize(TrialBatch& batch) {
  batch.trial_count = batch.trials.size();
  for (std::size_t column = 0; column < batch.value_names.size(); ++column) {
    std::vector<double> values;
    values.reserve(batch.trials.size());
    for (const TrialRecord& record : batch.trials) {
      const double v = record.values.at(column);
      if (!std::isfinite(v) || v < 0.0) {
        throw std::logic_error("measured quantity must be finite and non-negative");
      }
      values.push_back(v);
    }
    batch.summaries[batch.value_names[column]] = summarize(std::move(values));
  }
}

// Exact diameter of one component of the sampled subgraph: BFS from every
// component vertex. Desk scale permits it.
std::size_t component_diameter(const std::vector<std::vector<VertexId>>& adjacency,
                               const std::vector<VertexId>& members,
                               std::vector<std::int32_t>& distance) {
  std::size_t diameter = 0;
  for (const VertexId start : members) {
    std::queue<VertexId> frontier;
    frontier.push(start);
    distance[start] = 0;
    std::size_t eccentricity = 0;
    while (!frontier.empty()) {
      const VertexId u = frontier.front();
      frontier.pop();
      for (const VertexId w : adjacency[u]) {
        if (distance[w] < 0) {
          distance[w] = distance[u] + 1;
          eccentricity = std::max(eccentricity, static_cast<std::size_t>(distance[w]));
          frontier.push(w);
        }
      }
    }
    for (const VertexId v : members) distance[v] = -1;
    diameter = std::max(diameter, eccentricity);
  }
  return diameter;
}

}  // namespace

double one_out_preservation_product(const SimpleGraph& g, const Cut& cut) {
  std::vector<std::size_t> incident(g.vertex_count(), 0);
  for (const EdgeId id : cut.edge_ids) {
    const Edge e = g.edge(id);
    ++incident[e.u];
    ++incident[e.v];
  }
  double product = 1.0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (incident[v] > 0) {
      product *= 1.0 - static_cast<double>(incident[v]) / static_cast<double>(g.degree(
                           static_cast<VertexId>(v)));
    }
  }
  return product;
}

TrialBatch measure_component_count(const GeneratorSpec& family, std::size_t k,
                                   std::size_t trials, std::uint64_t seed) {
  TrialBatch batch;
  batch.experiment = "component_count";
  batch.instance = family.to_string();
  batch.master_seed = seed;
  batch.value_names = {"components"};

  const SimpleGraph g = generate(family, derive_seed(seed, 0));
  const double delta = static_cast<double>(g.min_degree());
  if (delta < 1) throw std::invalid_argument("component count experiment requires delta >= 1");

  double max_ratio = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    const std::uint64_t trial_seed = derive_seed(seed, t + 1);
    const KOutSample sample = sample_k_out(g, k, trial_seed);
    const ComponentLabeling components = connected_components(g, sample.edge_id_set);
    const auto count = static_cast<double>(components.count);
    max_ratio = std::max(max_ratio, count * delta / static_cast<double>(g.vertex_count()));
    batch.trials.push_back({trial_seed, {count}});
  }
  batch.ratios["max_count_delta_over_n"] = max_ratio;
  finalize(batch);
  return batch;
}

TrialBatch measure_diameter_sum(const GeneratorSpec& family, std::size_t trials,
                                std::uint64_t seed) {
  TrialBatch batch;
  batch.experiment = "diameter_sum";
  batch.instance = family.to_string();
  batch.master_seed = seed;
  batch.value_names = {"diameter_sum"};

  const SimpleGraph g = generate(family, derive_seed(seed, 0));
  const double delta = static_cast<double>(g.min_degree());
  if (delta < 1) throw std::invalid_argument("diameter experiment requires delta >= 1");
  // The n ln(delta) / delta ratio is meaningful only for delta >= 2.
  const double scale =
      delta >= 2 ? static_cast<double>(g.vertex_count()) * std::log(delta) / delta : 0.0;

  std::vector<std::vector<VertexId>> adjacency(g.vertex_count());
  std::vector<std::int32_t> distance(g.vertex_count(), -1);
  double max_ratio = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    const std::uint64_t trial_seed = derive_seed(seed, t + 1);
    const KOutSample sample = sample_k_out(g, 2, trial_seed);
    for (auto& list : adjacency) list.clear();
    for (const EdgeId id : sample.edge_id_set) {
      const Edge e = g.edge(id);
      adjacency[e.u].push_back(e.v);
      adjacency[e.v].push_back(e.u);
    }
    const ComponentLabeling components = connected_components(g, sample.edge_id_set);
    std::vector<std::vector<VertexId>> members(components.count);
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      members[components.labels[v]].push_back(static_cast<VertexId>(v));
    }
    std::size_t total = 0;
    for (const auto& component : members) {
      if (component.size() > 1) total += component_diameter(adjacency, component, distance);
    }
    if (scale > 0.0) max_ratio = std::max(max_ratio, static_cast<double>(total) / scale);
    batch.trials.push_back({trial_seed, {static_cast<double>(total)}});
  }
  if (scale > 0.0) batch.ratios["max_sum_over_n_log_delta_over_delta"] = max_ratio;
  finalize(batch);
  return batch;
}

TrialBatch measure_preservation(const GeneratorSpec& family, double eps,
                                std::size_t trials, std::uint64_t seed) {
  if (!(eps > 0.0 && eps <= 1.0)) throw std::invalid_argument("eps must be in (0, 1]");
  TrialBatch batch;
  batch.experiment = "preservation";
  batch.instance = family.to_string();
  batch.master_seed = seed;
  batch.value_names = {"preserved"};

  const SimpleGraph g = generate(family, derive_seed(seed, 0));
  const auto side = planted_cut_side(family);
  if (!side.has_value()) {
    throw std::invalid_argument("family " + family.kind + " has no planted cut");
  }
  const Cut planted = cut_from_side(g, *side);
  if (planted.is_singleton) {
    throw std::invalid_argument("planted cut must be non-singleton");
  }
  const MinCutResult truth = oracle_mincut(g);
  if (static_cast<double>(planted.size()) >
      (2.0 - eps) * static_cast<double>(truth.value)) {
    throw std::invalid_argument("planted cut fails (2 - eps)-minimum verification");
  }

  std::vector<bool> in_cut(g.edge_count(), false);
  for (const EdgeId id : planted.edge_ids) in_cut[id] = true;

  std::size_t preserved = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    const std::uint64_t trial_seed = derive_seed(seed, t + 1);
    const KOutSample sample = sample_k_out(g, 2, trial_seed);
    bool hit = false;
    for (const EdgeId id : sample.edge_id_set) {
      if (in_cut[id]) {
        hit = true;
        break;
      }
    }
    if (!hit) ++preserved;
    batch.trials.push_back({trial_seed, {hit ? 0.0 : 1.0}});
  }

  const double product = one_out_preservation_product(g, planted);
  batch.ratios["exact_product_squared"] = product * product;
  batch.ratios["analytic_floor"] = std::exp(-8.0 * (2.0 - eps) / eps);
  batch.ratios["empirical_frequency"] =
      trials == 0 ? 0.0 : static_cast<double>(preserved) / static_cast<double>(trials);
  finalize(batch);
  return batch;
}

TrialBatch measure_edge_budget(const GeneratorSpec& family, const AmplificationConfig& cfg,
                               std::size_t trials, std::uint64_t seed) {
  TrialBatch batch;
  batch.experiment = "edge_budget";
  batch.instance = family.to_string();
  batch.master_seed = seed;
  batch.value_names = {"edges", "supernodes"};

  const SimpleGraph g = generate(family, derive_seed(seed, 0));
  const double n = static_cast<double>(g.vertex_count());
  const double delta = static_cast<double>(g.min_degree());

  double max_edges = 0.0;
  double max_supernodes = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    const std::uint64_t trial_seed = derive_seed(seed, t + 1);
    const MultiGraph contracted = amplified_contraction(g, cfg, trial_seed);
    const auto edges = static_cast<double>(contracted.edge_count());
    const auto supernodes = static_cast<double>(contracted.supernode_count());
    max_edges = std::max(max_edges, edges / n);
    max_supernodes = std::max(max_supernodes, supernodes * delta / n);
    batch.trials.push_back({trial_seed, {edges, supernodes}});
  }
  batch.ratios["max_edges_over_n"] = max_edges;
  batch.ratios["max_supernodes_delta_over_n"] = max_supernodes;
  finalize(batch);
  return batch;
}

TrialBatch measure_runtime_scaling(const std::vector<GeneratorSpec>& grid,
                                   PipelineVariant variant, std::uint64_t seed) {
  TrialBatch batch;
  batch.experiment = "runtime_scaling";
  batch.instance = grid.empty() ? std::string("empty") : grid.front().kind + "-grid";
  batch.master_seed = seed;
  batch.value_names = {"seconds", "edges", "vertices"};

  double worst_growth = 0.0;
  double previous = -1.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const std::uint64_t trial_seed = derive_seed(seed, i + 1);
    const SimpleGraph g = generate(grid[i], derive_seed(trial_seed, 0));
    const AmplificationConfig cfg = AmplificationConfig::defaults(g.vertex_count(), variant);
    // Median of three runs damps scheduler noise.
    std::vector<double> times;
    for (int repeat = 0; repeat < 3; ++repeat) {
      const auto start = std::chrono::steady_clock::now();
      if (variant == PipelineVariant::Amplified) {
        (void)amplified_contraction(g, cfg, derive_seed(trial_seed, repeat + 1));
      } else {
        (void)dense_contraction(g, cfg, derive_seed(trial_seed, repeat + 1));
      }
      const auto stop = std::chrono::steady_clock::now();
      times.push_back(std::chrono::duration<double>(stop - start).count());
    }
    std::sort(times.begin(), times.end());
    const double seconds = times[1];
    if (previous > 0.0) worst_growth = std::max(worst_growth, seconds / previous);
    previous = seconds;
    batch.trials.push_back({trial_seed,
                            {seconds, static_cast<double>(g.edge_count()),
                             static_cast<double>(g.vertex_count())}});
  }
  batch.ratios["max_step_growth"] = worst_growth;
  finalize(batch);
  return batch;
}

}  // namespace mincut
