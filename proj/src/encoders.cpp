#include "evgraph/encoders.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <nlohmann/json.hpp>
#include <ostream>

#include "evgraph/error.hpp"

namespace evgraph {

std::string_view to_string(EncodingKind kind) {
  switch (kind) {
    case EncodingKind::kBM: return "BM";
    case EncodingKind::kEP: return "EP";
    case EncodingKind::kUA: return "UA";
  }
  return "?";
}

std::optional<EncodingKind> parse_encoding(std::string_view text) {
  std::string lowered(text);
  std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lowered == "bm") return EncodingKind::kBM;
  if (lowered == "ep") return EncodingKind::kEP;
  if (lowered == "ua") return EncodingKind::kUA;
  return std::nullopt;
}

EncodedLog::EncodedLog(EncodingKind kind)
    : kind_(kind),
      graph_(std::vector<std::string>{std::string(keys::kId), std::string(keys::kName),
                                      std::string(keys::kActivity)}) {}

std::optional<NodeId> EncodedLog::case_node(std::string_view case_id) const {
  if (auto it = case_nodes_.find(std::string(case_id)); it != case_nodes_.end()) return it->second;
  return std::nullopt;
}

std::optional<NodeId> EncodedLog::activity_node(std::string_view activity) const {
  if (auto it = activity_nodes_.find(std::string(activity)); it != activity_nodes_.end()) {
    return it->second;
  }
  return std::nullopt;
}

namespace {

using Props = std::vector<std::pair<Symbol, PropertyValue>>;

// Symbols for the fixed vocabulary, interned once per graph.
struct Vocabulary {
  explicit Vocabulary(Graph& g)
      : graph(g),
        case_label(g.intern(labels::kCase)),
        event_label(g.intern(labels::kEvent)),
        activity_label(g.intern(labels::kActivity)),
        event_to_case(g.intern(labels::kEventToCase)),
        directly_follows(g.intern(labels::kDirectlyFollows)),
        id(g.intern(keys::kId)),
        name(g.intern(keys::kName)),
        activity(g.intern(keys::kActivity)),
        timestamp(g.intern(keys::kTimestamp)),
        position(g.intern(keys::kPosition)),
        resource(g.intern(keys::kResource)),
        lifecycle(g.intern(keys::kLifecycle)) {}

  Symbol extra_key(const std::string& key) {
    static constexpr std::array reserved{keys::kId, keys::kName, keys::kActivity,
                                         keys::kTimestamp, keys::kPosition, keys::kResource,
                                         keys::kLifecycle};
    if (std::find(reserved.begin(), reserved.end(), key) != reserved.end()) {
      return graph.intern("extra." + key);
    }
    return graph.intern(key);
  }

  // Every attribute of the event, used for Event nodes (BM/EP) and
  // Event_to_case edges (UA).
  Props event_props(const Event& e) {
    Props props;
    props.reserve(3 + e.extra.size() + 2);
    props.emplace_back(activity, e.activity);
    props.emplace_back(timestamp, e.timestamp);
    props.emplace_back(position, e.position);
    if (e.resource) props.emplace_back(resource, *e.resource);
    if (e.lifecycle) props.emplace_back(lifecycle, *e.lifecycle);
    for (const auto& [k, v] : e.extra) props.emplace_back(extra_key(k), v);
    return props;
  }

  Graph& graph;
  Symbol case_label, event_label, activity_label, event_to_case, directly_follows;
  Symbol id, name, activity, timestamp, position, resource, lifecycle;
};

}  // namespace

EncodedLog encode(const EventLog& log, EncodingKind kind) {
  using Clock = LoadTimings::Clock;
  EncodedLog out(kind);
  Graph& g = out.graph_;
  Vocabulary v(g);

  const std::array case_labels{v.case_label};
  const std::array event_labels{v.event_label};
  const std::array activity_labels{v.activity_label};
  const std::array e2c_labels{v.event_to_case};
  const std::array df_labels{v.directly_follows};

  // Pass 1: nodes.
  out.timings_.node_pass_start = Clock::now();
  std::vector<NodeId> event_nodes;
  if (kind != EncodingKind::kUA) event_nodes.reserve(log.num_events());
  for (const auto& [case_id, trace] : log.traces()) {
    out.case_nodes_.emplace(case_id, g.add_node(case_labels, Props{{v.id, case_id}}));
    if (kind == EncodingKind::kUA) continue;
    for (const auto& e : trace.events) {
      event_nodes.push_back(g.add_node(event_labels, v.event_props(e)));
    }
  }
  if (kind == EncodingKind::kUA) {
    for (const auto& activity : log.activities()) {
      out.activity_nodes_.emplace(activity,
                                  g.add_node(activity_labels, Props{{v.name, activity}}));
    }
  }
  out.timings_.node_pass_end = Clock::now();

  // Pass 2: edges.
  out.timings_.edge_pass_start = Clock::now();
  std::size_t next_event = 0;
  for (const auto& [case_id, trace] : log.traces()) {
    const NodeId case_node = out.case_nodes_.at(case_id);
    if (kind == EncodingKind::kUA) {
      for (const auto& e : trace.events) {
        g.add_edge(out.activity_nodes_.at(e.activity), case_node, e2c_labels, v.event_props(e));
      }
      continue;
    }
    const std::size_t first = next_event;
    for (std::size_t i = 0; i < trace.events.size(); ++i) {
      g.add_edge(event_nodes[first + i], case_node, e2c_labels, {});
    }
    if (kind == EncodingKind::kBM) {
      for (std::size_t i = 1; i < trace.events.size(); ++i) {
        g.add_edge(event_nodes[first + i - 1], event_nodes[first + i], df_labels, {});
      }
    }
    next_event += trace.events.size();
  }
  out.timings_.edge_pass_end = Clock::now();

  g.freeze();
  return out;
}

SizeForecast expected_sizes(std::int64_t cases, std::int64_t events, std::int64_t activities,
                            EncodingKind kind) {
  if (cases < 0 || events < 0 || activities < 0) {
    throw InvalidArgument("expected_sizes: counts must be nonnegative");
  }
  if (cases > 0 && events < cases) {
    throw InvalidArgument("expected_sizes: every case needs at least one event (E >= C)");
  }
  switch (kind) {
    case EncodingKind::kBM: return {events + cases, 2 * events - cases};
    case EncodingKind::kEP: return {events + cases, events};
    case EncodingKind::kUA: return {cases + activities, events};
  }
  return {};
}

LoadingReport loading_report(const EventLog& log, const EncodedLog& encoded) {
  const LogSummary s = log_summary(log);
  LoadingReport r;
  r.kind = encoded.kind();
  r.cases = s.num_cases;
  r.forecast = expected_sizes(static_cast<std::int64_t>(s.num_cases),
                              static_cast<std::int64_t>(s.num_events),
                              static_cast<std::int64_t>(s.num_activities), encoded.kind());
  r.actual = encoded.graph().stats();
  r.timings = encoded.timings();
  return r;
}

LoadingReport loading_report(const EventLog& log, EncodingKind kind) {
  return loading_report(log, encode(log, kind));
}

void write_loading_csv_header(std::ostream& out) { out << "kind,cases,lt_seconds,nodes,edges\n"; }

void write_loading_csv(std::ostream& out, const LoadingReport& r) {
  out << to_string(r.kind) << ',' << r.cases << ',' << r.loading_seconds() << ','
      << r.actual.num_nodes << ',' << r.actual.num_edges << '\n';
}

std::string loading_json(const LoadingReport& r) {
  nlohmann::json j{
      {"kind", to_string(r.kind)},
      {"cases", r.cases},
      {"lt_seconds", r.loading_seconds()},
      {"node_pass_seconds", r.timings.node_pass().count()},
      {"edge_pass_seconds", r.timings.edge_pass().count()},
      {"nodes", r.actual.num_nodes},
      {"edges", r.actual.num_edges},
      {"avg_degree", r.actual.avg_degree},
      {"forecast_nodes", r.forecast.nodes},
      {"forecast_edges", r.forecast.edges},
  };
  return j.dump();
}

}  // namespace evgraph
