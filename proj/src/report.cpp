#include "evgraph/report.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>
#include <ostream>

#include "csv.hpp"

namespace evgraph {

Evaluator evaluator_for(EncodingKind kind) {
  switch (kind) {
    case EncodingKind::kBM: return Evaluator::kBM;
    case EncodingKind::kEP: return Evaluator::kEP;
    case EncodingKind::kUA: return Evaluator::kUA;
  }
  return Evaluator::kOracle;
}

std::string_view to_string(Evaluator evaluator) {
  switch (evaluator) {
    case Evaluator::kBM: return "BM";
    case Evaluator::kEP: return "EP";
    case Evaluator::kUA: return "UA";
    case Evaluator::kOracle: return "oracle";
  }
  return "?";
}

void ViolationReport::finalize() {
  std::sort(violations.begin(), violations.end(), [](const Witness& x, const Witness& y) {
    if (x.case_id != y.case_id) return x.case_id < y.case_id;
    return x.trigger.position < y.trigger.position;
  });
  case_ids.clear();
  for (const auto& w : violations) {
    if (case_ids.empty() || case_ids.back() != w.case_id) case_ids.push_back(w.case_id);
  }
}

bool same_result(const ViolationReport& a, const ViolationReport& b) {
  return a.rule == b.rule && a.violations == b.violations && a.case_ids == b.case_ids;
}

namespace {

nlohmann::json event_json(const EventRef& e) {
  return {{"activity", e.activity}, {"position", e.position}, {"timestamp", e.timestamp}};
}

}  // namespace

std::string report_json(const ViolationReport& report) {
  nlohmann::json witnesses = nlohmann::json::array();
  for (const auto& w : report.violations) {
    nlohmann::json j{{"case_id", w.case_id}, {"trigger", event_json(w.trigger)}};
    j["detail"] = w.detail ? event_json(*w.detail) : nlohmann::json(nullptr);
    witnesses.push_back(std::move(j));
  }
  nlohmann::json out{
      {"rule", format_rule(report.rule)},
      {"evaluator", to_string(report.evaluator)},
      {"case_ids", report.case_ids},
      {"violations", std::move(witnesses)},
      {"elapsed_seconds", report.elapsed.count()},
  };
  return out.dump();
}

void write_report_csv_header(std::ostream& out) {
  out << "case_id,rule,trigger_activity,trigger_position\n";
}

void write_report_csv(std::ostream& out, const ViolationReport& report) {
  const std::string rule = format_rule(report.rule);
  for (const auto& w : report.violations) {
    csv::write_field(out, w.case_id);
    out << ',';
    csv::write_field(out, rule);
    out << ',';
    csv::write_field(out, w.trigger.activity);
    out << ',' << w.trigger.position << '\n';
  }
}

}  // namespace evgraph
