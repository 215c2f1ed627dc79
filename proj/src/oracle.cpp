#include "evgraph/oracle.hpp"

#include <algorithm>
#include <chrono>

namespace evgraph {

namespace {

EventRef ref(const Event& e) { return {e.activity, e.position, e.timestamp}; }

bool excluded(const Rule& rule, const std::string& activity) {
  return std::find(rule.excluded.begin(), rule.excluded.end(), activity) != rule.excluded.end();
}

void response(const Trace& trace, const Rule& rule, std::vector<Witness>& out) {
  for (const Event& ei : trace.events) {
    if (ei.activity != rule.a) continue;
    bool answered = false;
    const Event* nearest = nullptr;
    for (const Event& ej : trace.events) {
      if (ej.activity != rule.b || ej.position <= ei.position) continue;
      if (nearest == nullptr || ej.position < nearest->position) nearest = &ej;
      if (ej.timestamp >= ei.timestamp &&
          theta_satisfied(rule.window.theta, ej.timestamp - ei.timestamp, rule.window.delta)) {
        answered = true;
      }
    }
    if (!answered) {
      out.push_back({trace.case_id, ref(ei),
                     nearest ? std::optional<EventRef>(ref(*nearest)) : std::nullopt});
    }
  }
}

void precedes(const Trace& trace, const Rule& rule, std::vector<Witness>& out) {
  for (const Event& ei : trace.events) {
    if (ei.activity != rule.b) continue;
    bool preceded = false;
    const Event* nearest = nullptr;
    for (const Event& ej : trace.events) {
      if (ej.activity != rule.a || ej.position >= ei.position) continue;
      if (nearest == nullptr || ej.position > nearest->position) nearest = &ej;
      if (ej.timestamp <= ei.timestamp &&
          theta_satisfied(rule.window.theta, ei.timestamp - ej.timestamp, rule.window.delta)) {
        preceded = true;
      }
    }
    if (!preceded) {
      out.push_back({trace.case_id, ref(ei),
                     nearest ? std::optional<EventRef>(ref(*nearest)) : std::nullopt});
    }
  }
}

void exclude(const Trace& trace, const Rule& rule, std::vector<Witness>& out) {
  for (const Event& ei : trace.events) {
    if (ei.activity != rule.a) continue;
    const Event* first_between = nullptr;
    for (const Event& ej : trace.events) {
      if (ej.activity != rule.b || ej.position <= ei.position) continue;
      if (!theta_satisfied(rule.window.theta, ej.timestamp - ei.timestamp, rule.window.delta)) {
        continue;
      }
      for (const Event& ek : trace.events) {
        if (!excluded(rule, ek.activity)) continue;
        if (ek.position <= ei.position || ek.position >= ej.position) continue;
        if (first_between == nullptr || ek.position < first_between->position) first_between = &ek;
      }
    }
    if (first_between != nullptr) out.push_back({trace.case_id, ref(ei), ref(*first_between)});
  }
}

}  // namespace

ViolationReport oracle_check(const EventLog& log, const Rule& rule) {
  validate(rule);
  const auto start = std::chrono::steady_clock::now();
  ViolationReport report;
  report.rule = rule;
  report.evaluator = Evaluator::kOracle;
  for (const auto& [_, trace] : log.traces()) {
    switch (rule.kind) {
      case RuleKind::kResponse: response(trace, rule, report.violations); break;
      case RuleKind::kPrecedes: precedes(trace, rule, report.violations); break;
      case RuleKind::kExclude: exclude(trace, rule, report.violations); break;
    }
  }
  report.finalize();
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

}  // namespace evgraph
