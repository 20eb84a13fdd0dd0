#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "decycle/constructions.hpp"
#include "decycle/fvs.hpp"
#include "decycle/suites.hpp"

namespace decycle {

struct ReportSummary {
  int pass = 0;
  int fail = 0;
  int report_only = 0;
  int findings = 0;  // report-only records flagged as violations
};

ReportSummary summarize(const std::vector<CheckRecord>& records);

/// Columns: claim_id, instance, expected, computed ("k=v;..."), verdict,
/// wall_time, note. Without timing the wall_time column is left empty, which
/// makes the body reproducible run to run.
std::string render_csv(const std::vector<CheckRecord>& records, bool include_timing = true);

nlohmann::json record_json(const CheckRecord& r, bool include_timing = true);
nlohmann::json render_json(const std::vector<CheckRecord>& records, const nlohmann::json& meta,
                           bool include_timing = true);

/// Certificate schema: graph identity, value, sorted vertices, method,
/// optimality, node count, wall time.
nlohmann::json certificate_json(const nlohmann::json& graph_identity, const DecyclingCertificate& c);
/// Sidecar for a product exported as graph6: factor descriptors plus the
/// row-major index convention.
nlohmann::json product_sidecar(const Instance& a, const Instance& b);

nlohmann::json construction_json(const Construction& c, const std::vector<std::string>& factors);

}  // namespace decycle
