// EP and UA strategies: fetch the occurrences of the rule's activities from
// the index, group them by case and compare positions and timestamps.

#include <algorithm>

#include "engine_internal.hpp"

namespace evgraph::detail {

namespace {

enum class Role : std::uint8_t { kA, kB, kExcluded };

struct Occurrence {
  NodeId case_node;
  std::uint32_t position;
  Timestamp timestamp;
  Role role;
  // Index into Rule::excluded for kExcluded.
  std::uint32_t tag;
};

struct Point {
  std::uint32_t position;
  Timestamp timestamp;
  std::uint32_t tag;
};

struct CaseGroup {
  NodeId case_node;
  std::vector<Point> a, b, excluded;
};

// Appends every occurrence of `activity` with the given role.
void fetch(const EncodedLog& encoded, const QuerySymbols& syms, const std::string& activity,
           Role role, std::uint32_t tag, std::vector<Occurrence>& out) {
  const Graph& g = encoded.graph();
  if (!syms.event_to_case) return;
  if (encoded.kind() == EncodingKind::kUA) {
    // One Activity node per label; its Event_to_case edges carry the events.
    for (NodeId node : g.find_nodes(labels::kActivity, keys::kName, PropertyValue(activity))) {
      for (EdgeId e : g.out_edges(node, *syms.event_to_case)) {
        out.push_back({g.edge(e).dst,
                       static_cast<std::uint32_t>(g.property(e, *syms.position)->as_int()),
                       g.property(e, *syms.timestamp)->as_int(), role, tag});
      }
    }
    return;
  }
  for (NodeId node : g.find_nodes(labels::kEvent, keys::kActivity, PropertyValue(activity))) {
    const EdgeId to_case = g.out_edges(node, *syms.event_to_case).front();
    out.push_back({g.edge(to_case).dst,
                   static_cast<std::uint32_t>(g.property(node, *syms.position)->as_int()),
                   g.property(node, *syms.timestamp)->as_int(), role, tag});
  }
}

std::vector<CaseGroup> group_by_case(std::vector<Occurrence>& occurrences) {
  std::sort(occurrences.begin(), occurrences.end(), [](const Occurrence& x, const Occurrence& y) {
    if (x.case_node != y.case_node) return x.case_node < y.case_node;
    return x.position < y.position;
  });
  std::vector<CaseGroup> groups;
  for (const Occurrence& o : occurrences) {
    if (groups.empty() || groups.back().case_node != o.case_node) {
      groups.push_back(CaseGroup{o.case_node, {}, {}, {}});
    }
    CaseGroup& group = groups.back();
    const Point p{o.position, o.timestamp, o.tag};
    switch (o.role) {
      case Role::kA: group.a.push_back(p); break;
      case Role::kB: group.b.push_back(p); break;
      case Role::kExcluded: group.excluded.push_back(p); break;
    }
  }
  return groups;
}

class CaseEvaluator {
 public:
  CaseEvaluator(const Graph& g, const QuerySymbols& syms, const Rule& rule)
      : g_(g), syms_(syms), rule_(rule) {}

  void evaluate(const CaseGroup& group, std::vector<Witness>& out) const {
    switch (rule_.kind) {
      case RuleKind::kResponse: response(group, out); break;
      case RuleKind::kPrecedes: precedes(group, out); break;
      case RuleKind::kExclude: exclude(group, out); break;
    }
  }

 private:
  static auto first_after(const std::vector<Point>& points, std::uint32_t position) {
    return std::upper_bound(points.begin(), points.end(), position,
                            [](std::uint32_t pos, const Point& p) { return pos < p.position; });
  }

  bool window_ok(Timestamp elapsed) const {
    return theta_satisfied(rule_.window.theta, elapsed, rule_.window.delta);
  }
  bool past_window(Timestamp elapsed) const {
    return bounded_above(rule_.window) && elapsed > *rule_.window.delta;
  }

  void response(const CaseGroup& group, std::vector<Witness>& out) const {
    for (const Point& trigger : group.a) {
      const auto begin = first_after(group.b, trigger.position);
      bool answered = false;
      for (auto it = begin; it != group.b.end(); ++it) {
        const Timestamp elapsed = it->timestamp - trigger.timestamp;
        if (window_ok(elapsed)) {
          answered = true;
          break;
        }
        if (past_window(elapsed)) break;
      }
      if (answered) continue;
      std::optional<EventRef> nearest;
      if (begin != group.b.end()) nearest = EventRef{rule_.b, begin->position, begin->timestamp};
      emit(group, rule_.a, trigger, std::move(nearest), out);
    }
  }

  void precedes(const CaseGroup& group, std::vector<Witness>& out) const {
    for (const Point& trigger : group.b) {
      // Candidates are the a-points strictly before the trigger, scanned
      // backwards so elapsed time grows.
      const auto end = std::lower_bound(
          group.a.begin(), group.a.end(), trigger.position,
          [](const Point& p, std::uint32_t pos) { return p.position < pos; });
      bool preceded = false;
      for (auto it = end; it != group.a.begin();) {
        --it;
        const Timestamp elapsed = trigger.timestamp - it->timestamp;
        if (window_ok(elapsed)) {
          preceded = true;
          break;
        }
        if (past_window(elapsed)) break;
      }
      if (preceded) continue;
      std::optional<EventRef> nearest;
      if (end != group.a.begin()) {
        const Point& p = *std::prev(end);
        nearest = EventRef{rule_.a, p.position, p.timestamp};
      }
      emit(group, rule_.b, trigger, std::move(nearest), out);
    }
  }

  void exclude(const CaseGroup& group, std::vector<Witness>& out) const {
    if (group.excluded.empty() || group.b.empty()) return;
    for (const Point& trigger : group.a) {
      const auto blocker = first_after(group.excluded, trigger.position);
      if (blocker == group.excluded.end()) continue;
      for (auto it = first_after(group.b, blocker->position); it != group.b.end(); ++it) {
        const Timestamp elapsed = it->timestamp - trigger.timestamp;
        if (window_ok(elapsed)) {
          emit(group, rule_.a, trigger,
               EventRef{rule_.excluded[blocker->tag], blocker->position, blocker->timestamp}, out);
          break;
        }
        if (past_window(elapsed)) break;
      }
    }
  }

  void emit(const CaseGroup& group, const std::string& activity, const Point& trigger,
            std::optional<EventRef> detail, std::vector<Witness>& out) const {
    out.push_back(Witness{case_id_of(g_, syms_, group.case_node),
                          EventRef{activity, trigger.position, trigger.timestamp},
                          std::move(detail)});
  }

  const Graph& g_;
  const QuerySymbols& syms_;
  const Rule& rule_;
};

}  // namespace

std::vector<Witness> check_positional(const EncodedLog& encoded, const Rule& rule,
                                      unsigned threads) {
  const Graph& g = encoded.graph();
  const QuerySymbols syms(g);

  std::vector<Occurrence> occurrences;
  switch (rule.kind) {
    case RuleKind::kResponse:
    case RuleKind::kExclude:
      fetch(encoded, syms, rule.a, Role::kA, 0, occurrences);
      if (occurrences.empty()) return {};
      fetch(encoded, syms, rule.b, Role::kB, 0, occurrences);
      break;
    case RuleKind::kPrecedes:
      fetch(encoded, syms, rule.b, Role::kB, 0, occurrences);
      if (occurrences.empty()) return {};
      fetch(encoded, syms, rule.a, Role::kA, 0, occurrences);
      break;
  }
  for (std::uint32_t i = 0; i < rule.excluded.size(); ++i) {
    // A label listed twice would only duplicate points.
    if (std::find(rule.excluded.begin(), rule.excluded.begin() + i, rule.excluded[i]) !=
        rule.excluded.begin() + i) {
      continue;
    }
    fetch(encoded, syms, rule.excluded[i], Role::kExcluded, i, occurrences);
  }

  const std::vector<CaseGroup> groups = group_by_case(occurrences);
  const CaseEvaluator evaluator(g, syms, rule);
  std::vector<Witness> out;
  run_partitioned(
      groups.size(), threads,
      [&](std::size_t begin, std::size_t end, std::vector<Witness>& part) {
        for (std::size_t i = begin; i < end; ++i) evaluator.evaluate(groups[i], part);
      },
      out);
  return out;
}

}  // namespace evgraph::detail
