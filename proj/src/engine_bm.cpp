// Baseline strategy: transitive walks over Directly_follows.

#include <algorithm>

#include "engine_internal.hpp"

namespace evgraph::detail {

namespace {

class ChainWalker {
 public:
  ChainWalker(const Graph& g, const QuerySymbols& syms, const Rule& rule)
      : g_(g), syms_(syms), rule_(rule) {}

  EventRef event(NodeId n) const {
    return {activity(n), static_cast<std::uint32_t>(g_.property(n, *syms_.position)->as_int()),
            g_.property(n, *syms_.timestamp)->as_int()};
  }

  const std::string& activity(NodeId n) const {
    return g_.property(n, *syms_.activity)->as_string();
  }

  Timestamp time(NodeId n) const { return g_.property(n, *syms_.timestamp)->as_int(); }

  std::optional<NodeId> next(NodeId n) const {
    if (!syms_.directly_follows) return std::nullopt;
    auto out = g_.out_edges(n, *syms_.directly_follows);
    if (out.empty()) return std::nullopt;
    return g_.edge(out.front()).dst;
  }

  std::optional<NodeId> prev(NodeId n) const {
    if (!syms_.directly_follows) return std::nullopt;
    auto in = g_.in_edges(n, *syms_.directly_follows);
    if (in.empty()) return std::nullopt;
    return g_.edge(in.front()).src;
  }

  const std::string& case_id(NodeId event_node) const {
    const EdgeId e = g_.out_edges(event_node, *syms_.event_to_case).front();
    return case_id_of(g_, syms_, g_.edge(e).dst);
  }

  bool window_ok(Timestamp elapsed) const {
    return theta_satisfied(rule_.window.theta, elapsed, rule_.window.delta);
  }
  bool past_window(Timestamp elapsed) const {
    return bounded_above(rule_.window) && elapsed > *rule_.window.delta;
  }

  // Forward walk looking for a b that satisfies the window.
  std::optional<Witness> response(NodeId trigger) const {
    const Timestamp t0 = time(trigger);
    std::optional<NodeId> nearest;
    bool searching = true;
    for (auto cur = next(trigger); cur; cur = next(*cur)) {
      if (activity(*cur) != rule_.b) continue;
      if (!nearest) nearest = cur;
      const Timestamp elapsed = time(*cur) - t0;
      if (searching && window_ok(elapsed)) return std::nullopt;
      if (past_window(elapsed)) searching = false;
      if (!searching && nearest) break;
    }
    return witness(trigger, nearest);
  }

  // Backward walk looking for an a that satisfies the window.
  std::optional<Witness> precedes(NodeId trigger) const {
    const Timestamp t0 = time(trigger);
    std::optional<NodeId> nearest;
    bool searching = true;
    for (auto cur = prev(trigger); cur; cur = prev(*cur)) {
      if (activity(*cur) != rule_.a) continue;
      if (!nearest) nearest = cur;
      const Timestamp elapsed = t0 - time(*cur);
      if (searching && window_ok(elapsed)) return std::nullopt;
      if (past_window(elapsed)) searching = false;
      if (!searching && nearest) break;
    }
    return witness(trigger, nearest);
  }

  // Forward walk: after the first excluded activity, any b inside the window
  // closes a violating pair.
  std::optional<Witness> exclude(NodeId trigger) const {
    const Timestamp t0 = time(trigger);
    std::optional<NodeId> first_excluded;
    for (auto cur = next(trigger); cur; cur = next(*cur)) {
      const std::string& act = activity(*cur);
      const Timestamp elapsed = time(*cur) - t0;
      if (past_window(elapsed)) break;
      if (first_excluded && act == rule_.b && window_ok(elapsed)) {
        return witness(trigger, first_excluded);
      }
      if (!first_excluded &&
          std::find(rule_.excluded.begin(), rule_.excluded.end(), act) != rule_.excluded.end()) {
        first_excluded = cur;
      }
    }
    return std::nullopt;
  }

 private:
  Witness witness(NodeId trigger, std::optional<NodeId> detail) const {
    Witness w{case_id(trigger), event(trigger), std::nullopt};
    if (detail) w.detail = event(*detail);
    return w;
  }

  const Graph& g_;
  const QuerySymbols& syms_;
  const Rule& rule_;
};

}  // namespace

std::vector<Witness> check_bm(const EncodedLog& encoded, const Rule& rule, unsigned threads) {
  const Graph& g = encoded.graph();
  const QuerySymbols syms(g);
  const std::string& trigger_activity = rule.kind == RuleKind::kPrecedes ? rule.b : rule.a;
  const std::vector<NodeId> triggers =
      g.find_nodes(labels::kEvent, keys::kActivity, PropertyValue(trigger_activity));

  std::vector<Witness> out;
  if (triggers.empty()) return out;
  const ChainWalker walker(g, syms, rule);
  run_partitioned(
      triggers.size(), threads,
      [&](std::size_t begin, std::size_t end, std::vector<Witness>& part) {
        for (std::size_t i = begin; i < end; ++i) {
          std::optional<Witness> w;
          switch (rule.kind) {
            case RuleKind::kResponse: w = walker.response(triggers[i]); break;
            case RuleKind::kPrecedes: w = walker.precedes(triggers[i]); break;
            case RuleKind::kExclude: w = walker.exclude(triggers[i]); break;
          }
          if (w) part.push_back(std::move(*w));
        }
      },
      out);
  return out;
}

}  // namespace evgraph::detail
