#pragma once

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>

#include "evgraph/error.hpp"
#include "evgraph/event_log.hpp"
#include "evgraph/lpg.hpp"

namespace evgraph {

// BM: event and case nodes, Event_to_case and Directly_follows edges.
// EP: BM without Directly_follows; ordering comes from the `position` property.
// UA: one node per case and per distinct activity; event data lives on the
//     Activity -> Case edges.
enum class EncodingKind { kBM, kEP, kUA };

std::string_view to_string(EncodingKind kind);
// Accepts "bm", "ep", "ua" in any case.
std::optional<EncodingKind> parse_encoding(std::string_view text);

namespace labels {
inline constexpr std::string_view kCase = "Case";
inline constexpr std::string_view kEvent = "Event";
inline constexpr std::string_view kActivity = "Activity";
inline constexpr std::string_view kEventToCase = "Event_to_case";
inline constexpr std::string_view kDirectlyFollows = "Directly_follows";
}  // namespace labels

namespace keys {
inline constexpr std::string_view kId = "ID";
inline constexpr std::string_view kName = "name";
inline constexpr std::string_view kActivity = "activity";
inline constexpr std::string_view kTimestamp = "timestamp";
inline constexpr std::string_view kPosition = "position";
inline constexpr std::string_view kResource = "resource";
inline constexpr std::string_view kLifecycle = "lifecycle";
}  // namespace keys

struct LoadTimings {
  using Clock = std::chrono::steady_clock;
  Clock::time_point node_pass_start;
  Clock::time_point node_pass_end;
  Clock::time_point edge_pass_start;
  Clock::time_point edge_pass_end;

  std::chrono::duration<double> node_pass() const { return node_pass_end - node_pass_start; }
  std::chrono::duration<double> edge_pass() const { return edge_pass_end - edge_pass_start; }
};

// A frozen graph plus the encoding it was built with.
class EncodedLog {
 public:
  EncodingKind kind() const noexcept { return kind_; }
  const Graph& graph() const noexcept { return graph_; }
  const LoadTimings& timings() const noexcept { return timings_; }

  std::optional<NodeId> case_node(std::string_view case_id) const;
  // UA only; nullopt for other encodings or unknown activities.
  std::optional<NodeId> activity_node(std::string_view activity) const;

 private:
  friend EncodedLog encode(const EventLog& log, EncodingKind kind);

  explicit EncodedLog(EncodingKind kind);

  EncodingKind kind_;
  Graph graph_;
  LoadTimings timings_{};
  std::unordered_map<std::string, NodeId> case_nodes_;
  std::unordered_map<std::string, NodeId> activity_nodes_;
};

// Two passes over the log: every node first, then every edge. The returned
// graph is frozen.
EncodedLog encode(const EventLog& log, EncodingKind kind);

struct SizeForecast {
  std::int64_t nodes = 0;
  std::int64_t edges = 0;
  friend bool operator==(const SizeForecast&, const SizeForecast&) = default;
};

// Closed-form graph size for a log with `cases` cases, `events` events and
// `activities` distinct activities:
//   BM  nodes = E + C, edges = 2E - C
//   EP  nodes = E + C, edges = E
//   UA  nodes = C + A, edges = E
// Throws InvalidArgument on negative counts or when E < C.
SizeForecast expected_sizes(std::int64_t cases, std::int64_t events, std::int64_t activities,
                            EncodingKind kind);

struct LoadingReport {
  EncodingKind kind = EncodingKind::kBM;
  std::size_t cases = 0;
  SizeForecast forecast;
  GraphStats actual;
  LoadTimings timings;

  double loading_seconds() const {
    return timings.node_pass().count() + timings.edge_pass().count();
  }
};

LoadingReport loading_report(const EventLog& log, EncodingKind kind);
LoadingReport loading_report(const EventLog& log, const EncodedLog& encoded);

// kind,cases,lt_seconds,nodes,edges
void write_loading_csv_header(std::ostream& out);
void write_loading_csv(std::ostream& out, const LoadingReport& report);
std::string loading_json(const LoadingReport& report);

}  // namespace evgraph
