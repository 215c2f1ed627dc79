#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "evgraph/error.hpp"

namespace evgraph {

// Seconds since the Unix epoch.
using Timestamp = std::int64_t;

struct Event {
  std::string case_id;
  std::string activity;
  Timestamp timestamp = 0;
  // 1-based rank within the case, assigned when the log is built.
  std::uint32_t position = 0;
  std::optional<std::string> resource;
  std::optional<std::string> lifecycle;
  std::map<std::string, std::string> extra;

  friend bool operator==(const Event&, const Event&) = default;
};

struct Trace {
  std::string case_id;
  std::vector<Event> events;

  std::size_t size() const noexcept { return events.size(); }
  friend bool operator==(const Trace&, const Trace&) = default;
};

// An immutable collection of traces keyed by case id.
//
// Build one with `EventLog::from_events`: events are grouped by case, stably
// sorted by timestamp (ties keep their input order) and numbered 1..n.
class EventLog {
 public:
  EventLog() = default;

  static EventLog from_events(std::vector<Event> events);

  const std::map<std::string, Trace>& traces() const noexcept { return traces_; }
  const std::set<std::string>& activities() const noexcept { return activities_; }
  const std::set<std::string>& cases() const noexcept { return cases_; }
  std::size_t num_events() const noexcept { return num_events_; }
  bool empty() const noexcept { return traces_.empty(); }

  const Trace* find(std::string_view case_id) const;

  friend bool operator==(const EventLog& a, const EventLog& b) {
    return a.traces_ == b.traces_;
  }

 private:
  std::map<std::string, Trace> traces_;
  std::set<std::string> activities_;
  std::set<std::string> cases_;
  std::size_t num_events_ = 0;
};

enum class TimeSource { kStart, kComplete };

// Column names are matched case-insensitively against the header row.
//
// `timestamp` wins when present. Otherwise the start/complete pair is used,
// with `prefer` choosing between them when both exist.
struct ColumnConfig {
  std::string case_id = "case";
  std::string activity = "activity";
  std::string timestamp = "timestamp";
  std::string start_time = "StartTime";
  std::string complete_time = "CompleteTime";
  TimeSource prefer = TimeSource::kComplete;
  std::string resource = "resource";
  std::string lifecycle = "lifecycle";
};

// Parses a CSV event log. Throws ConfigError when a required column is
// missing and RowError (carrying the 1-based line number) for bad rows.
EventLog parse_event_log(std::istream& in, const ColumnConfig& config = {});
EventLog parse_event_log(std::string_view csv, const ColumnConfig& config = {});
EventLog load_event_log(const std::string& path, const ColumnConfig& config = {});

// Writes the canonical CSV form: case,activity,timestamp[,resource][,lifecycle]
// [,extras...],position. Re-parsing it with default columns yields an equal log.
void write_event_log(std::ostream& out, const EventLog& log);

// Accepts integer epoch seconds or an ISO-8601 date/datetime. Datetimes without
// an offset are read as UTC; fractional seconds are truncated.
std::optional<Timestamp> parse_timestamp(std::string_view text);

struct LogSummary {
  std::size_t num_cases = 0;
  std::size_t num_events = 0;
  std::size_t num_activities = 0;
  std::size_t min_trace_length = 0;
  std::size_t max_trace_length = 0;
  double mean_trace_length = 0.0;

  friend bool operator==(const LogSummary&, const LogSummary&) = default;
};

LogSummary log_summary(const EventLog& log);

}  // namespace evgraph
