#include "decycle/report.hpp"

#include <cstdio>

#include "decycle/graph_io.hpp"
#include "decycle/product.hpp"

namespace decycle {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string computed_string(const ValueMap& m) {
  std::string out;
  for (const auto& [k, v] : m) {
    if (!out.empty()) out += ';';
    out += k + "=" + std::to_string(v);
  }
  return out;
}

std::string seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", s);
  return buf;
}

}  // namespace

ReportSummary summarize(const std::vector<CheckRecord>& records) {
  ReportSummary s;
  for (const auto& r : records) {
    switch (r.verdict) {
      case Verdict::pass: ++s.pass; break;
      case Verdict::fail: ++s.fail; break;
      case Verdict::report_only:
        ++s.report_only;
        if (auto it = r.computed.find("violation"); it != r.computed.end() && it->second) ++s.findings;
        break;
    }
  }
  return s;
}

std::string render_csv(const std::vector<CheckRecord>& records, bool include_timing) {
  std::string out = "claim_id,instance,expected,computed,verdict,wall_time,note\n";
  for (const auto& r : records) {
    out += csv_field(r.claim_id) + ',' + csv_field(r.instance) + ',' + csv_field(r.expected) + ',' +
           csv_field(computed_string(r.computed)) + ',' + to_string(r.verdict) + ',' +
           (include_timing ? seconds(r.wall_seconds) : std::string()) + ',' + csv_field(r.note) + '\n';
  }
  return out;
}

nlohmann::json record_json(const CheckRecord& r, bool include_timing) {
  nlohmann::json j;
  j["claim_id"] = r.claim_id;
  j["instance"] = r.instance;
  j["expected"] = r.expected;
  j["computed"] = r.computed;
  j["verdict"] = to_string(r.verdict);
  if (include_timing) j["wall_time"] = r.wall_seconds;
  j["note"] = r.note;
  j["certificate"] = r.certificate;
  return j;
}

nlohmann::json render_json(const std::vector<CheckRecord>& records, const nlohmann::json& meta,
                           bool include_timing) {
  const auto s = summarize(records);
  nlohmann::json j;
  j["meta"] = meta;
  j["summary"] = {{"pass", s.pass}, {"fail", s.fail}, {"report_only", s.report_only}, {"findings", s.findings}};
  j["records"] = nlohmann::json::array();
  for (const auto& r : records) j["records"].push_back(record_json(r, include_timing));
  return j;
}

nlohmann::json certificate_json(const nlohmann::json& graph_identity, const DecyclingCertificate& c) {
  return {{"graph", graph_identity},
          {"value", c.value},
          {"vertices", c.set.to_vector()},
          {"method", to_string(c.method)},
          {"optimality", to_string(c.optimality)},
          {"nodes", c.nodes},
          {"wall_time", c.wall_seconds}};
}

nlohmann::json product_sidecar(const Instance& a, const Instance& b) {
  return {{"factors", {a.key, b.key}},
          {"orders", {a.graph.order(), b.graph.order()}},
          {"index", "row-major: (g, h) -> g * n2 + h"},
          {"graph6", to_graph6(cartesian_product(a.graph, b.graph))}};
}

nlohmann::json construction_json(const Construction& c, const std::vector<std::string>& factors) {
  nlohmann::json identity = {{"factors", factors}, {"index", "row-major: (g, h) -> g * n2 + h"},
                             {"graph6", to_graph6(c.graph)}};
  auto j = certificate_json(identity, c.certificate);
  j["construction"] = c.tag;
  return j;
}

}  // namespace decycle
