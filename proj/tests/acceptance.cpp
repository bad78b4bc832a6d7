// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite: one pass/fail line per criterion, thresholds pinned in
// config/acceptance.json. Pilot-calibrated constants carry their pilot seed in
// the config; this binary runs the fresh-seed confirmation phase. Run with
// --pilot to reproduce the calibration measurements.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "mincut/certificate.hpp"
#include "mincut/contraction.hpp"
#include "mincut/experiments.hpp"
#include "mincut/forest_oracle.hpp"
#include "mincut/generators.hpp"
#include "mincut/graph.hpp"
#include "mincut/rng.hpp"
#include "mincut/solver.hpp"

using namespace mincut;
using Json = nlohmann::json;

namespace {

struct Outcome {
  bool pass = true;
  bool gating = true;
  std::string detail;
};

double seconds_since(const std::chrono::steady_clock::time_point& start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// Independent witness validation: recount crossings straight off the edge list.
bool witness_valid(const SimpleGraph& g, const MinCutResult& result) {
  std::vector<bool> in(g.vertex_count(), false);
  for (const VertexId v : result.witness.side) {
    if (v >= g.vertex_count() || in[v]) return false;
    in[v] = true;
  }
  if (result.witness.side.empty() || result.witness.side.size() >= g.vertex_count()) return false;
  std::vector<EdgeId> crossings;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge e = g.edge(static_cast<EdgeId>(i));
    if (in[e.u] != in[e.v]) crossings.push_back(static_cast<EdgeId>(i));
  }
  return crossings == result.witness.edge_ids && crossings.size() == result.value;
}

std::vector<GeneratorSpec> build_corpus(const Json& cfg, std::uint64_t seed) {
  std::vector<GeneratorSpec> corpus;
  Rng rng(derive_seed(seed, 0xC0));

  const std::size_t cycles = cfg.at("cycles").get<std::size_t>();
  for (std::size_t i = 0; i < cycles; ++i) {
    const std::size_t n = 3 + (i * 197) / std::max<std::size_t>(cycles - 1, 1);
    corpus.push_back(GeneratorSpec::parse("cycle:" + std::to_string(n)));
  }
  const std::size_t tc = cfg.at("two_cliques").get<std::size_t>();
  for (std::size_t i = 0; i < tc; ++i) {
    const std::size_t k = 5 + rng.next_below(16);          // [5, 20]
    const std::size_t lambda = 1 + rng.next_below(k - 2);  // [1, k-2]
    corpus.push_back(
        GeneratorSpec::parse("two_cliques:" + std::to_string(k) + "," + std::to_string(lambda)));
  }
  const std::size_t gnp = cfg.at("gnp").get<std::size_t>();
  for (std::size_t i = 0; i < gnp; ++i) {
    const std::size_t n = 20 + rng.next_below(481);  // [20, 500]
    const double p = std::min(0.9, 2.5 * std::log(static_cast<double>(n)) /
                                       static_cast<double>(n));
    std::ostringstream spec;
    spec << "gnp:" << n << "," << p;
    corpus.push_back(GeneratorSpec::parse(spec.str()));
  }
  const std::size_t chains = cfg.at("clique_chain").get<std::size_t>();
  for (std::size_t i = 0; i < chains; ++i) {
    const std::size_t count = 2 + rng.next_below(5);   // [2, 6]
    const std::size_t size = 4 + rng.next_below(9);    // [4, 12]
    const std::size_t bridge = 1 + rng.next_below(size - 2);
    corpus.push_back(GeneratorSpec::parse("clique_chain:" + std::to_string(count) + "," +
                                          std::to_string(size) + "," + std::to_string(bridge)));
  }
  return corpus;
}

// Criterion 1: pipeline exactness against the oracle over the whole corpus.
Outcome criterion_exactness(const Json& cfg) {
  const auto seed = cfg.at("seed").get<std::uint64_t>();
  const std::vector<GeneratorSpec> corpus = build_corpus(cfg, seed);
  std::size_t runs = 0;
  std::size_t failures = 0;
  std::ostringstream log;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const std::uint64_t instance_seed = derive_seed(seed, i);
    const SimpleGraph g = generate(corpus[i], instance_seed);
    const MinCutResult truth = oracle_mincut(g);
    for (const PipelineVariant variant : {PipelineVariant::Amplified, PipelineVariant::Dense}) {
      const AmplificationConfig config = AmplificationConfig::defaults(g.vertex_count(), variant);
      const MinCutResult result =
          edge_connectivity(g, config, variant, derive_seed(instance_seed, 7));
      ++runs;
      if (result.value != truth.value || !witness_valid(g, result)) {
        ++failures;
        if (failures <= 5) {
          log << " [" << corpus[i].to_string() << " seed=" << instance_seed
              << " variant=" << (variant == PipelineVariant::Amplified ? "amplified" : "dense")
              << " got=" << result.value << " want=" << truth.value << "]";
        }
      }
    }
  }
  Outcome outcome;
  outcome.pass = failures == 0;
  std::ostringstream detail;
  detail << corpus.size() << " instances, " << runs << " runs, " << failures << " mismatches"
         << log.str();
  outcome.detail = detail.str();
  return outcome;
}

// Criterion 2: certificate soundness by exhaustive cut enumeration.
Outcome criterion_certificate(const Json& cfg) {
  const auto seed = cfg.at("seed").get<std::uint64_t>();
  const auto instances = cfg.at("instances").get<std::size_t>();
  Rng rng(seed);
  std::size_t violations = 0;
  for (std::size_t i = 0; i < instances; ++i) {
    const std::size_t n = 2 + rng.next_below(9);  // n_M <= 10
    std::vector<MultiEdge> edges;
    EdgeId next = 0;
    for (std::size_t v = 1; v < n; ++v) {
      edges.push_back({static_cast<VertexId>(rng.next_below(v)), static_cast<VertexId>(v), next++});
    }
    const std::size_t extra = rng.next_below(25);
    for (std::size_t j = 0; j < extra; ++j) {
      const auto u = static_cast<VertexId>(rng.next_below(n));
      const auto v = static_cast<VertexId>(rng.next_below(n));
      if (u != v) edges.push_back({u, v, next++});
    }
    std::vector<VertexId> map(n);
    std::iota(map.begin(), map.end(), 0);
    const MultiGraph mg(n, edges, map);
    const std::size_t k = 1 + rng.next_below(6);
    const CertificateForests cert = sparse_certificate(mg, k);
    if (cert.retained_edge_ids.size() >= k * n) {
      ++violations;
      continue;
    }
    const std::set<EdgeId> retained(cert.retained_edge_ids.begin(),
                                    cert.retained_edge_ids.end());
    const std::uint32_t max_mask = (1u << (n - 1)) - 1;
    for (std::uint32_t mask = 0;; ++mask) {
      if (max_mask != 0 && mask >= max_mask) break;
      std::vector<bool> in(n, false);
      in[0] = true;
      for (std::size_t v = 1; v < n; ++v) in[v] = (mask >> (v - 1)) & 1u;
      std::size_t original = 0;
      std::size_t kept = 0;
      for (const MultiEdge& e : mg.edges()) {
        if (in[e.u] != in[e.v]) {
          ++original;
          if (retained.count(e.original_edge) > 0) ++kept;
        }
      }
      if (kept < std::min(k, original)) {
        ++violations;
        break;
      }
      if (max_mask == 0) break;
    }
  }
  Outcome outcome;
  outcome.pass = violations == 0;
  outcome.detail = std::to_string(instances) + " multigraphs, " + std::to_string(violations) +
                   " violations";
  return outcome;
}

// Criterion 3: 2-out preservation floor and exact product on two_cliques(8,3).
Outcome criterion_preservation(const Json& cfg) {
  const auto seed = cfg.at("seed").get<std::uint64_t>();
  const auto trials = cfg.at("trials").get<std::size_t>();
  const double eps = 1.0;  // the planted cut is the min cut, so eps calibrates to 1
  const TrialBatch batch =
      measure_preservation(GeneratorSpec::parse("two_cliques:8,3"), eps, trials, seed);
  const double freq = batch.ratios.at("empirical_frequency");
  const double exact = batch.ratios.at("exact_product_squared");
  const double floor = batch.ratios.at("analytic_floor");
  const double sigma = std::sqrt(exact * (1.0 - exact) / static_cast<double>(trials));
  Outcome outcome;
  outcome.pass = freq >= floor && std::abs(freq - exact) <= 3.0 * sigma;
  std::ostringstream detail;
  detail << "freq=" << freq << " exact=" << exact << " floor=" << floor << " 3sigma="
         << 3.0 * sigma;
  outcome.detail = detail.str();
  return outcome;
}

// Criterion 4: amplified compression budgets under pilot-calibrated constants.
Outcome criterion_budgets(const Json& cfg, bool pilot) {
  const auto seed = cfg.at(pilot ? "pilot_seed" : "seed").get<std::uint64_t>();
  const auto trials = cfg.at("trials").get<std::size_t>();
  std::size_t violations = 0;
  std::ostringstream detail;
  for (const Json& family : cfg.at("families")) {
    const GeneratorSpec spec = GeneratorSpec::parse(family.at("spec").get<std::string>());
    const SimpleGraph g = generate(spec, derive_seed(seed, 0));
    const AmplificationConfig config = AmplificationConfig::defaults(g.vertex_count());
    const TrialBatch batch = measure_edge_budget(spec, config, trials, seed);
    const double edges_ratio = batch.ratios.at("max_edges_over_n");
    const double supernode_ratio = batch.ratios.at("max_supernodes_delta_over_n");
    if (pilot) {
      detail << " [" << spec.to_string() << " edges/n=" << edges_ratio
             << " supernodes*delta/n=" << supernode_ratio << "]";
      continue;
    }
    const double edge_cap = family.at("max_edges_over_n").get<double>();
    const double supernode_cap = family.at("max_supernodes_delta_over_n").get<double>();
    const bool ok = edges_ratio <= edge_cap && supernode_ratio <= supernode_cap;
    if (!ok) ++violations;
    detail << " [" << spec.to_string() << " edges/n=" << edges_ratio << "<=" << edge_cap
           << (edges_ratio <= edge_cap ? " ok" : " VIOLATION")
           << ", supernodes*delta/n=" << supernode_ratio << "<=" << supernode_cap
           << (supernode_ratio <= supernode_cap ? " ok" : " VIOLATION") << "]";
  }
  Outcome outcome;
  outcome.pass = pilot || violations == 0;
  outcome.detail = detail.str();
  return outcome;
}

// Criterion 5: forest-oracle preserve budget and edge-disjointness audit.
Outcome criterion_forest_budget(const Json& cfg) {
  const auto seed = cfg.at("seed").get<std::uint64_t>();
  const auto runs = cfg.at("runs").get<std::size_t>();
  const GeneratorSpec spec = GeneratorSpec::parse(cfg.at("spec").get<std::string>());
  const SimpleGraph g = generate(spec, derive_seed(seed, 0));
  std::size_t violations = 0;
  std::size_t max_preserved = 0;
  for (std::size_t run = 0; run < runs; ++run) {
    ForestOracle oracle(g, default_supernode_budget(g), derive_seed(seed, run + 1),
                        /*record_forests=*/true);
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
      const Edge e = g.edge(static_cast<EdgeId>(i));
      (void)oracle.query(e.u, e.v, static_cast<EdgeId>(i));
    }
    const std::size_t colors = oracle.color_count();
    const std::size_t budget = oracle.forest_count() * (colors - 1);
    max_preserved = std::max(max_preserved, oracle.preserve_count());
    if (oracle.preserve_count() > budget) ++violations;

    // Post-hoc audit: forests edge-disjoint (each edge logged once) and
    // acyclic over the colors.
    std::set<EdgeId> seen;
    std::size_t logged = 0;
    for (const auto& forest : oracle.forest_edges()) {
      DisjointSets shadow(colors);
      for (const EdgeId id : forest) {
        ++logged;
        if (!seen.insert(id).second) ++violations;
        const Edge e = g.edge(id);
        if (!shadow.unite(oracle.color(e.u), oracle.color(e.v))) ++violations;
      }
    }
    if (logged != oracle.preserve_count()) ++violations;
  }
  Outcome outcome;
  outcome.pass = violations == 0;
  outcome.detail = std::to_string(runs) + " runs on " + spec.to_string() + ", " +
                   std::to_string(violations) + " violations, max preserve count " +
                   std::to_string(max_preserved);
  return outcome;
}

// Criterion 6: 2-out diameter-sum ratio inside the pilot band.
Outcome criterion_diameter(const Json& cfg, bool pilot) {
  const auto seed = cfg.at(pilot ? "pilot_seed" : "seed").get<std::uint64_t>();
  const auto trials = cfg.at("trials").get<std::size_t>();
  std::size_t violations = 0;
  std::ostringstream detail;
  for (const Json& family : cfg.at("families")) {
    const GeneratorSpec spec = GeneratorSpec::parse(family.at("spec").get<std::string>());
    const TrialBatch batch = measure_diameter_sum(spec, trials, seed);
    const SimpleGraph g = generate(spec, derive_seed(seed, 0));
    const double delta = static_cast<double>(g.min_degree());
    const double scale =
        static_cast<double>(g.vertex_count()) * std::log(delta) / delta;
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (const TrialRecord& record : batch.trials) {
      const double ratio = record.values[0] / scale;
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
    if (pilot) {
      detail << " [" << spec.to_string() << " ratio range " << lo << ".." << hi << "]";
      continue;
    }
    const double band_lo = family.at("band").at(0).get<double>();
    const double band_hi = family.at("band").at(1).get<double>();
    const bool ok = lo >= band_lo && hi <= band_hi;
    if (!ok) ++violations;
    detail << " [" << spec.to_string() << " " << lo << ".." << hi << " in " << band_lo << ".."
           << band_hi << (ok ? " ok" : " VIOLATION") << "]";
  }
  Outcome outcome;
  outcome.pass = pilot || violations == 0;
  outcome.detail = detail.str();
  return outcome;
}

// Criterion 7: substitute solver vs exhaustive enumeration.
Outcome criterion_solver_equivalence(const Json& cfg) {
  const auto seed = cfg.at("seed").get<std::uint64_t>();
  const auto instances = cfg.at("instances").get<std::size_t>();
  Rng rng(seed);
  std::size_t mismatches = 0;
  for (std::size_t i = 0; i < instances; ++i) {
    const std::size_t n = 2 + rng.next_below(8);  // n_M <= 9
    std::vector<MultiEdge> edges;
    EdgeId next = 0;
    for (std::size_t v = 1; v < n; ++v) {
      edges.push_back({static_cast<VertexId>(rng.next_below(v)), static_cast<VertexId>(v), next++});
    }
    const std::size_t extra = rng.next_below(22);
    for (std::size_t j = 0; j < extra; ++j) {
      const auto u = static_cast<VertexId>(rng.next_below(n));
      const auto v = static_cast<VertexId>(rng.next_below(n));
      if (u != v) edges.push_back({u, v, next++});
    }
    std::vector<VertexId> map(n);
    std::iota(map.begin(), map.end(), 0);
    const MultiGraph mg(n, edges, map);
    if (stoer_wagner(mg).value != exhaustive_mincut(mg).value) ++mismatches;
  }
  Outcome outcome;
  outcome.pass = mismatches == 0;
  outcome.detail =
      std::to_string(instances) + " multigraphs, " + std::to_string(mismatches) + " mismatches";
  return outcome;
}

// Criterion 8 (informational): wall-clock growth per doubling of m.
Outcome criterion_scaling(const Json& cfg) {
  const auto seed = cfg.at("seed").get<std::uint64_t>();
  std::vector<GeneratorSpec> grid;
  for (const Json& spec : cfg.at("grid")) {
    grid.push_back(GeneratorSpec::parse(spec.get<std::string>()));
  }
  const double cap = cfg.at("max_growth").get<double>();
  const TrialBatch batch = measure_runtime_scaling(grid, PipelineVariant::Amplified, seed);
  const double growth = batch.ratios.at("max_step_growth");
  Outcome outcome;
  outcome.gating = false;
  outcome.pass = growth <= cap;
  std::ostringstream detail;
  detail << "max growth per m-doubling " << growth << " (cap " << cap << ");";
  for (const TrialRecord& record : batch.trials) {
    detail << " m=" << record.values[1] << ": " << record.values[0] << "s";
  }
  outcome.detail = detail.str();
  return outcome;
}

}  // namespace

int main(int argc, char** argv) {
  std::string config_path = ACCEPTANCE_CONFIG_PATH;
  bool pilot = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--pilot") == 0) {
      pilot = true;
    } else {
      config_path = argv[i];
    }
  }
  std::ifstream config_in(config_path);
  if (!config_in) {
    std::cerr << "cannot open acceptance config: " << config_path << '\n';
    return 1;
  }
  Json config;
  config_in >> config;

  struct Entry {
    int id;
    const char* name;
    Outcome outcome;
    double seconds;
  };
  std::vector<Entry> entries;
  const auto run = [&](int id, const char* name, auto&& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome = body();
    entries.push_back({id, name, std::move(outcome), seconds_since(start)});
  };

  run(1, "exactness vs oracle (both variants, default config)",
      [&] { return criterion_exactness(config.at("criterion1")); });
  run(2, "certificate soundness (exhaustive cuts)",
      [&] { return criterion_certificate(config.at("criterion2")); });
  run(3, "2-out preservation floor on two_cliques(8,3)",
      [&] { return criterion_preservation(config.at("criterion3")); });
  run(4, "amplified compression budgets (pilot constants)",
      [&] { return criterion_budgets(config.at("criterion4"), pilot); });
  run(5, "forest-oracle preserve budget and audit",
      [&] { return criterion_forest_budget(config.at("criterion5")); });
  run(6, "2-out diameter-sum band on disjoint cliques",
      [&] { return criterion_diameter(config.at("criterion6"), pilot); });
  run(7, "stoer-wagner vs exhaustive enumeration",
      [&] { return criterion_solver_equivalence(config.at("criterion7")); });
  run(8, "scaling sanity (informational, non-gating)",
      [&] { return criterion_scaling(config.at("criterion8")); });

  int gating_failures = 0;
  for (const Entry& entry : entries) {
    const bool counts = entry.outcome.gating && !entry.outcome.pass;
    if (counts) ++gating_failures;
    std::cout << (entry.outcome.pass ? "PASS" : (entry.outcome.gating ? "FAIL" : "INFO-FAIL"))
              << " criterion " << entry.id << ": " << entry.name << " -- " << entry.outcome.detail
              << " (" << entry.seconds << "s)\n";
  }
  std::cout << (gating_failures == 0 ? "ACCEPTANCE: all gating criteria passed"
                                     : "ACCEPTANCE: " + std::to_string(gating_failures) +
                                           " gating criteria failed")
            << (pilot ? " [pilot mode: budgets/diameter reported, not gated]" : "") << '\n';
  return gating_failures == 0 ? 0 : 1;
}
