#pragma once

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "evgraph/error.hpp"
#include "evgraph/encoders.hpp"
#include "evgraph/event_log.hpp"
#include "evgraph/rules.hpp"

namespace evgraph {

struct EventRef {
  std::string activity;
  std::uint32_t position = 0;
  Timestamp timestamp = 0;
  friend bool operator==(const EventRef&, const EventRef&) = default;
};

// One violating event instance.
//
// The trigger is the a-event for Response and Exclude and the b-event for
// Precedes. `detail` is, per kind:
//   Response  the nearest later b-event (which failed the time check)
//   Precedes  the nearest earlier a-event (which failed the time check)
//   Exclude   the first excluded event after the trigger
struct Witness {
  std::string case_id;
  EventRef trigger;
  std::optional<EventRef> detail;
  friend bool operator==(const Witness&, const Witness&) = default;
};

// Where a report came from. The oracle is not a graph encoding.
enum class Evaluator { kBM, kEP, kUA, kOracle };

Evaluator evaluator_for(EncodingKind kind);
std::string_view to_string(Evaluator evaluator);

struct ViolationReport {
  Rule rule;
  Evaluator evaluator = Evaluator::kOracle;
  // Sorted by (case_id, trigger position).
  std::vector<Witness> violations;
  // Distinct case ids of `violations`, sorted.
  std::vector<std::string> case_ids;
  std::chrono::duration<double> elapsed{0};

  // Sorts violations and derives case_ids.
  void finalize();
};

// Reports compare equal when rule, violations and case ids match; evaluator
// and elapsed time are ignored.
bool same_result(const ViolationReport& a, const ViolationReport& b);

std::string report_json(const ViolationReport& report);
// case_id,rule,trigger_activity,trigger_position
void write_report_csv_header(std::ostream& out);
void write_report_csv(std::ostream& out, const ViolationReport& report);

}  // namespace evgraph
