// SPDX-License-Identifier: Apache-2.0
#include "mincut/report.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace mincut {

namespace {

void require_finite(const Report& node, const std::string& path) {
  if (node.is_number_float() && !std::isfinite(node.get<double>())) {
    throw std::invalid_argument("non-finite statistic at " + path +
                                "; report fields must be finite");
  }
  if (node.is_object()) {
    for (const auto& [key, value] : node.items()) require_finite(value, path + "." + key);
  } else if (node.is_array()) {
    std::size_t index = 0;
    for (const auto& value : node) require_finite(value, path + "[" + std::to_string(index++) + "]");
  }
}

}  // namespace

void write_report(const Report& report, std::ostream& sink) {
  require_finite(report, "$");
  sink << report.dump(2) << '\n';
  if (!sink) throw std::runtime_error("failed writing report to sink");
}

Report read_report(std::istream& source) {
  Report report;
  try {
    source >> report;
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(std::string("malformed report: ") + e.what());
  }
  return report;
}

Report to_report(const Cut& cut) {
  Report report;
  report["record"] = "cut";
  report["value"] = cut.size();
  report["singleton"] = cut.is_singleton;
  report["side"] = cut.side;
  report["edge_ids"] = cut.edge_ids;
  return report;
}

Report to_report(const MultiGraph& mg) {
  Report report;
  report["record"] = "multigraph";
  report["supernodes"] = mg.supernode_count();
  report["edge_count"] = mg.edge_count();
  Report edges = Report::array();
  for (const MultiEdge& e : mg.edges()) {
    edges.push_back(Report::array({e.u, e.v, e.original_edge}));
  }
  report["edges"] = std::move(edges);
  report["vertex_map"] = mg.vertex_map();
  return report;
}

Report to_report(const CertificateForests& cert) {
  Report report;
  report["record"] = "certificate";
  report["k"] = cert.k;
  report["retained_count"] = cert.retained_edge_ids.size();
  report["retained_edge_ids"] = cert.retained_edge_ids;
  report["forest_index"] = cert.forest_index;
  return report;
}

Report to_report(const MinCutResult& result, std::uint64_t seed) {
  Report report;
  report["record"] = "mincut_result";
  report["lambda"] = result.value;
  report["singleton"] = result.is_singleton;
  report["method"] = to_string(result.method);
  report["seed"] = seed;
  report["witness"] = to_report(result.witness);
  return report;
}

Report to_report(const TrialBatch& batch) {
  Report report;
  report["record"] = "trial_batch";
  report["experiment"] = batch.experiment;
  report["instance"] = batch.instance;
  report["seed"] = batch.master_seed;
  report["trials"] = batch.trial_count;
  report["value_names"] = batch.value_names;
  Report trials = Report::array();
  for (const TrialRecord& record : batch.trials) {
    Report row;
    row["seed"] = record.seed;
    row["values"] = record.values;
    trials.push_back(std::move(row));
  }
  report["per_trial"] = std::move(trials);
  Report summaries;
  for (const auto& [name, summary] : batch.summaries) {
    Report s;
    s["mean"] = summary.mean;
    s["median"] = summary.median;
    s["p90"] = summary.p90;
    s["max"] = summary.max;
    summaries[name] = std::move(s);
  }
  report["summary"] = std::move(summaries);
  report["ratios"] = batch.ratios;
  return report;
}

}  // namespace mincut
