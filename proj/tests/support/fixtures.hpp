#pragma once

#include <random>
#include <string>
#include <vector>

#include "evgraph/encoders.hpp"
#include "evgraph/event_log.hpp"
#include "evgraph/rules.hpp"

namespace evgraph::testing {

// The 13-row sample log with resources and start/complete Unix times, rows in
// their original order.
inline constexpr const char* kSampleLogCsv =
    "case,activity,resource,StartTime,CompleteTime\n"
    "1,A,Jack,1612172052,1612373652\n"
    "1,B,John,1612360812,1612458012\n"
    "2,A,Mark,1609491612,1609866012\n"
    "1,E,Smith,1612602012,1612778412\n"
    "3,A,George,1614589212,1614682812\n"
    "2,C,Albert,1609678812,1609866012\n"
    "1,D,Mark,1612954800,1613131200\n"
    "2,E,Smith,1611838812,1612026012\n"
    "3,E,Albert,1614934800,1615374000\n"
    "3,C,Jack,1615107612,1615374012\n"
    "2,D,John,1612256400,1612346400\n"
    "3,E,Mark,1615539600,1615719600\n"
    "3,D,George,1615546812,1615640412\n";

// Position column of the sample log, row by row.
inline constexpr int kSamplePositions[] = {1, 2, 1, 3, 1, 2, 4, 3, 2, 3, 4, 4, 5};

inline EventLog sample_log(TimeSource source = TimeSource::kComplete) {
  ColumnConfig config;
  config.prefer = source;
  return parse_event_log(std::string_view(kSampleLogCsv), config);
}

inline constexpr EncodingKind kAllEncodings[] = {EncodingKind::kBM, EncodingKind::kEP,
                                                 EncodingKind::kUA};

struct RandomLogShape {
  std::size_t max_cases = 50;
  std::size_t max_length = 20;
  std::size_t max_activities = 8;
};

// Small random logs with frequent timestamp ties and short gaps so that time
// windows in the 0..20 s range actually discriminate.
inline EventLog random_log(std::mt19937_64& rng, const RandomLogShape& shape = {}) {
  static const char* kNames[] = {"A", "B", "C", "D", "E", "F", "G", "H"};
  std::uniform_int_distribution<std::size_t> n_cases(0, shape.max_cases);
  std::uniform_int_distribution<std::size_t> n_acts(1, std::min<std::size_t>(shape.max_activities, 8));
  std::uniform_int_distribution<std::size_t> length(1, shape.max_length);
  const std::int64_t gaps[] = {0, 0, 1, 2, 3, 5, 8, 13};
  std::uniform_int_distribution<std::size_t> gap(0, std::size(gaps) - 1);

  const std::size_t cases = n_cases(rng);
  const std::size_t acts = n_acts(rng);
  std::uniform_int_distribution<std::size_t> pick(0, acts - 1);
  std::vector<Event> events;
  for (std::size_t c = 0; c < cases; ++c) {
    std::int64_t t = 1000;
    const std::size_t len = length(rng);
    std::vector<Event> trace;
    for (std::size_t i = 0; i < len; ++i) {
      t += gaps[gap(rng)];
      Event e;
      e.case_id = "k" + std::to_string(c);
      e.activity = kNames[pick(rng)];
      e.timestamp = t;
      trace.push_back(std::move(e));
    }
    // Feed events out of order; the log sorts them back.
    std::shuffle(trace.begin(), trace.end(), rng);
    std::stable_sort(trace.begin(), trace.end(),
                     [](const Event& x, const Event& y) { return x.timestamp < y.timestamp; });
    for (auto& e : trace) events.push_back(std::move(e));
  }
  std::shuffle(events.begin(), events.end(), rng);
  return EventLog::from_events(std::move(events));
}

// Random rule over labels A..H plus the absent label Z.
inline Rule random_rule(std::mt19937_64& rng) {
  static const char* kLabels[] = {"A", "B", "C", "D", "E", "F", "G", "H", "Z"};
  std::uniform_int_distribution<int> label(0, 8);
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_int_distribution<int> theta(0, 4);
  std::uniform_int_distribution<int> percent(0, 99);
  std::uniform_int_distribution<std::int64_t> delta(0, 20);

  Rule r;
  r.kind = static_cast<RuleKind>(kind(rng));
  r.a = kLabels[label(rng)];
  r.b = kLabels[label(rng)];
  if (r.kind == RuleKind::kExclude) {
    const int n = percent(rng) < 70 ? 1 : 2;
    for (int i = 0; i < n; ++i) r.excluded.emplace_back(kLabels[label(rng)]);
  }
  r.window.theta = static_cast<Theta>(theta(rng));
  if (percent(rng) >= 30) r.window.delta = delta(rng);
  return r;
}

}  // namespace evgraph::testing
