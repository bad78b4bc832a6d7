// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: graph generation, contraction, certificates, exact
// and pipeline min-cut solving, and statistical experiment batches.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "mincut/certificate.hpp"
#include "mincut/contraction.hpp"
#include "mincut/experiments.hpp"
#include "mincut/forest_oracle.hpp"
#include "mincut/generators.hpp"
#include "mincut/graph_io.hpp"
#include "mincut/report.hpp"
#include "mincut/rng.hpp"
#include "mincut/solver.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInput = 2;

struct CommonOptions {
  std::string input_path;
  std::string generator_spec;
  std::string output_path;
  std::string format = "edge-list";
  std::uint64_t seed = 0;
};

void add_input_options(CLI::App& cmd, CommonOptions& opt) {
  auto* input = cmd.add_option("--input", opt.input_path, "path to a graph file");
  auto* gen = cmd.add_option("--gen", opt.generator_spec,
                             "inline generator spec, e.g. two_cliques:10,4");
  input->excludes(gen);
  gen->excludes(input);
  cmd.add_option("--format", opt.format, "graph file format: edge-list or dimacs")
      ->check(CLI::IsMember({"edge-list", "dimacs"}));
  cmd.add_option("--seed", opt.seed, "64-bit master seed (default 0)");
}

mincut::SimpleGraph resolve_input(const CommonOptions& opt) {
  if (!opt.generator_spec.empty()) {
    return mincut::generate(opt.generator_spec, opt.seed);
  }
  if (!opt.input_path.empty()) {
    return mincut::load_graph_file(opt.input_path, mincut::parse_format(opt.format));
  }
  throw std::invalid_argument("exactly one of --input or --gen is required");
}

void emit_report(const mincut::Report& report, const std::string& path) {
  if (path.empty()) {
    mincut::write_report(report, std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  mincut::write_report(report, out);
}

unsigned thread_count_from_env() {
  const char* value = std::getenv("MINCUT_THREADS");
  if (value == nullptr) return 1;
  const long parsed = std::strtol(value, nullptr, 10);
  if (parsed < 1 || parsed > 256) {
    throw std::invalid_argument("MINCUT_THREADS must be an integer in [1, 256]");
  }
  return static_cast<unsigned>(parsed);
}

struct PipelineOptions {
  std::string variant = "amplified";
  std::string reducer = "certificate";
  double eps = 1.0;
  double gamma = 2.0;
  double p_hat = 0.02;
  std::uint64_t q_override = 0;
  std::uint64_t r_override = 0;
};

void add_pipeline_options(CLI::App& cmd, PipelineOptions& opt) {
  cmd.add_option("--variant", opt.variant, "contraction variant")
      ->check(CLI::IsMember({"amplified", "dense"}));
  cmd.add_option("--reducer", opt.reducer, "edge reduction inside each repetition")
      ->check(CLI::IsMember({"certificate", "random_sample"}));
  cmd.add_option("--eps", opt.eps, "target cut class (2 - eps), eps in (0, 1]");
  cmd.add_option("--gamma", opt.gamma, "failure exponent for the whp goal");
  cmd.add_option("--p-hat", opt.p_hat, "assumed per-repetition success probability");
  cmd.add_option("--q", opt.q_override, "override the repetition count");
  cmd.add_option("--r", opt.r_override, "override the vote threshold");
}

mincut::PipelineVariant parse_variant(const std::string& name) {
  return name == "dense" ? mincut::PipelineVariant::Dense
                         : mincut::PipelineVariant::Amplified;
}

mincut::AmplificationConfig build_config(const PipelineOptions& opt, std::size_t n) {
  mincut::AmplificationConfig cfg = mincut::AmplificationConfig::defaults(
      n, parse_variant(opt.variant), opt.eps, opt.gamma, opt.p_hat);
  if (opt.q_override > 0) cfg.q = opt.q_override;
  if (opt.r_override > 0) cfg.r = opt.r_override;
  cfg.reducer = opt.reducer == "random_sample" ? mincut::Reducer::RandomSample
                                               : mincut::Reducer::Certificate;
  cfg.validate();
  return cfg;
}

void print_result_line(const mincut::MinCutResult& result) {
  std::cout << "lambda = " << result.value << (result.is_singleton ? " (singleton)" : "")
            << '\n';
}

int run(int argc, char** argv) {
  CLI::App app{"edge connectivity of simple graphs via random 2-out contractions"};
  app.require_subcommand(1);

  // gen
  CommonOptions gen_opt;
  std::string gen_spec;
  auto* gen_cmd = app.add_subcommand("gen", "generate a graph and write it to a file");
  gen_cmd->add_option("spec", gen_spec, "generator spec, e.g. cycle:50")->required();
  gen_cmd->add_option("--seed", gen_opt.seed, "64-bit master seed (default 0)");
  gen_cmd->add_option("--out", gen_opt.output_path, "output path (default stdout)");
  gen_cmd->add_option("--format", gen_opt.format, "edge-list or dimacs")
      ->check(CLI::IsMember({"edge-list", "dimacs"}));

  // mincut
  CommonOptions mincut_opt;
  PipelineOptions mincut_pipeline;
  std::string mincut_report_path = "mincut_report.json";
  auto* mincut_cmd = app.add_subcommand("mincut", "pipeline edge connectivity");
  add_input_options(*mincut_cmd, mincut_opt);
  add_pipeline_options(*mincut_cmd, mincut_pipeline);
  mincut_cmd->add_option("--out", mincut_report_path,
                         "witness report path (default mincut_report.json)");

  // oracle
  CommonOptions oracle_opt;
  std::string oracle_report_path;
  auto* oracle_cmd = app.add_subcommand("oracle", "ground-truth edge connectivity");
  add_input_options(*oracle_cmd, oracle_opt);
  oracle_cmd->add_option("--out", oracle_report_path, "witness report path (default stdout off)");

  // contract
  CommonOptions contract_opt;
  PipelineOptions contract_pipeline;
  std::string contract_out;
  auto* contract_cmd =
      app.add_subcommand("contract", "write the contracted multigraph and vertex map");
  add_input_options(*contract_cmd, contract_opt);
  add_pipeline_options(*contract_cmd, contract_pipeline);
  contract_cmd->add_option("--out", contract_out, "multigraph report path (default stdout)");

  // certificate
  CommonOptions cert_opt;
  std::uint64_t cert_k = 1;
  std::string cert_out;
  auto* cert_cmd = app.add_subcommand("certificate", "sparse k-edge-connectivity certificate");
  add_input_options(*cert_cmd, cert_opt);
  cert_cmd->add_option("--k", cert_k, "certificate strength")->required();
  cert_cmd->add_option("--out", cert_out, "certificate report path (default stdout)");

  // stats
  CommonOptions stats_opt;
  std::string stats_name;
  std::uint64_t stats_trials = 100;
  std::uint64_t stats_k = 2;
  double stats_eps = 1.0;
  std::string stats_out;
  std::string stats_grid;
  std::string stats_variant = "amplified";
  auto* stats_cmd = app.add_subcommand("stats", "run a named experiment batch");
  stats_cmd
      ->add_option("--name", stats_name,
                   "component_count | diameter_sum | preservation | edge_budget | runtime_scaling")
      ->required()
      ->check(CLI::IsMember({"component_count", "diameter_sum", "preservation", "edge_budget",
                             "runtime_scaling"}));
  stats_cmd->add_option("--gen", stats_opt.generator_spec, "instance family spec");
  stats_cmd->add_option("--grid", stats_grid,
                        "semicolon-separated specs for runtime_scaling, e.g. 'gnp:256,0.04;gnp:256,0.08'");
  stats_cmd->add_option("--trials", stats_trials, "trial count (default 100)");
  stats_cmd->add_option("--seed", stats_opt.seed, "64-bit master seed (default 0)");
  stats_cmd->add_option("--k", stats_k, "k for component_count (default 2)");
  stats_cmd->add_option("--eps", stats_eps, "eps for preservation (default 1)");
  stats_cmd->add_option("--variant", stats_variant, "variant for runtime_scaling")
      ->check(CLI::IsMember({"amplified", "dense"}));
  stats_cmd->add_option("--out", stats_out, "batch report path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // one-line diagnostic naming the flag
    return kExitInput;
  }
  const unsigned threads = thread_count_from_env();

  if (gen_cmd->parsed()) {
    const mincut::SimpleGraph g = mincut::generate(gen_spec, gen_opt.seed);
    const mincut::GraphFormat format = mincut::parse_format(gen_opt.format);
    if (gen_opt.output_path.empty()) {
      mincut::write_graph(g, format, std::cout);
    } else {
      std::ofstream out(gen_opt.output_path);
      if (!out) throw std::runtime_error("cannot open output file: " + gen_opt.output_path);
      mincut::write_graph(g, format, out);
    }
    return kExitOk;
  }

  if (mincut_cmd->parsed()) {
    const mincut::SimpleGraph g = resolve_input(mincut_opt);
    const mincut::AmplificationConfig cfg = build_config(mincut_pipeline, g.vertex_count());
    const mincut::MinCutResult result = mincut::edge_connectivity(
        g, cfg, parse_variant(mincut_pipeline.variant), mincut_opt.seed, threads);
    print_result_line(result);
    emit_report(mincut::to_report(result, mincut_opt.seed), mincut_report_path);
    return kExitOk;
  }

  if (oracle_cmd->parsed()) {
    const mincut::SimpleGraph g = resolve_input(oracle_opt);
    const mincut::MinCutResult result = mincut::oracle_mincut(g);
    print_result_line(result);
    if (!oracle_report_path.empty()) {
      emit_report(mincut::to_report(result, oracle_opt.seed), oracle_report_path);
    }
    return kExitOk;
  }

  if (contract_cmd->parsed()) {
    const mincut::SimpleGraph g = resolve_input(contract_opt);
    const mincut::AmplificationConfig cfg = build_config(contract_pipeline, g.vertex_count());
    const mincut::MultiGraph contracted =
        parse_variant(contract_pipeline.variant) == mincut::PipelineVariant::Amplified
            ? mincut::amplified_contraction(g, cfg, contract_opt.seed, threads)
            : mincut::dense_contraction(g, cfg, contract_opt.seed);
    std::cout << "supernodes = " << contracted.supernode_count()
              << ", edges = " << contracted.edge_count() << '\n';
    emit_report(mincut::to_report(contracted), contract_out);
    return kExitOk;
  }

  if (cert_cmd->parsed()) {
    const mincut::SimpleGraph g = resolve_input(cert_opt);
    const mincut::MultiGraph mg = mincut::MultiGraph::identity(g);
    const mincut::CertificateForests cert = mincut::sparse_certificate(mg, cert_k);
    std::cout << "retained = " << cert.retained_edge_ids.size() << " of " << g.edge_count()
              << '\n';
    emit_report(mincut::to_report(cert), cert_out);
    return kExitOk;
  }

  if (stats_cmd->parsed()) {
    mincut::TrialBatch batch;
    if (stats_name == "runtime_scaling") {
      if (stats_grid.empty()) throw std::invalid_argument("--grid is required for runtime_scaling");
      std::vector<mincut::GeneratorSpec> grid;
      std::size_t start = 0;
      while (start <= stats_grid.size()) {
        const std::size_t split = stats_grid.find(';', start);
        const std::string token = stats_grid.substr(
            start, split == std::string::npos ? std::string::npos : split - start);
        if (!token.empty()) grid.push_back(mincut::GeneratorSpec::parse(token));
        if (split == std::string::npos) break;
        start = split + 1;
      }
      batch = mincut::measure_runtime_scaling(grid, parse_variant(stats_variant), stats_opt.seed);
    } else {
      if (stats_opt.generator_spec.empty()) {
        throw std::invalid_argument("--gen is required for experiment " + stats_name);
      }
      const mincut::GeneratorSpec family = mincut::GeneratorSpec::parse(stats_opt.generator_spec);
      if (stats_name == "component_count") {
        batch = mincut::measure_component_count(family, stats_k, stats_trials, stats_opt.seed);
      } else if (stats_name == "diameter_sum") {
        batch = mincut::measure_diameter_sum(family, stats_trials, stats_opt.seed);
      } else if (stats_name == "preservation") {
        batch = mincut::measure_preservation(family, stats_eps, stats_trials, stats_opt.seed);
      } else {
        const auto g = mincut::generate(family, mincut::derive_seed(stats_opt.seed, 0));
        const auto cfg = mincut::AmplificationConfig::defaults(g.vertex_count());
        batch = mincut::measure_edge_budget(family, cfg, stats_trials, stats_opt.seed);
      }
    }
    std::cout << "experiment " << batch.experiment << " on " << batch.instance << ": "
              << batch.trial_count << " trials\n";
    emit_report(mincut::to_report(batch), stats_out);
    return kExitOk;
  }

  return kExitInput;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
}
