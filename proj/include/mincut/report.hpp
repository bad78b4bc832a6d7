// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>

#include <json.hpp>

#include "mincut/certificate.hpp"
#include "mincut/experiments.hpp"
#include "mincut/graph.hpp"
#include "mincut/solver.hpp"

namespace mincut {

// Machine-readable report record: UTF-8 JSON with insertion-ordered keys so
// field order is stable for golden-file comparisons. One top-level record per
// invocation.
using Report = nlohmann::ordered_json;

// Serializes with a trailing newline. Rejects non-finite numbers anywhere in
// the record and fails on sink errors.
void write_report(const Report& report, std::ostream& sink);

Report read_report(std::istream& source);

Report to_report(const Cut& cut);
Report to_report(const MultiGraph& mg);
Report to_report(const CertificateForests& cert);
Report to_report(const MinCutResult& result, std::uint64_t seed);
Report to_report(const TrialBatch& batch);

}  // namespace mincut
