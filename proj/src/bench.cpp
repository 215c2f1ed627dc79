#include "evgraph/bench.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <map>
#include <nlohmann/json.hpp>
#include <numeric>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "csv.hpp"
#include "evgraph/engine.hpp"

namespace evgraph {

namespace {

std::string padded(std::size_t value, std::size_t width) {
  std::string s = std::to_string(value);
  if (s.size() < width) s.insert(0, width - s.size(), '0');
  return s;
}

std::size_t parse_count(std::string_view key, std::string_view text) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw InvalidArgument("generator spec: bad value for '" + std::string(key) + "': '" +
                          std::string(text) + "'");
  }
  return value;
}

}  // namespace

EventLog gen_log(const GenParams& p) {
  if (p.activities < 1) throw InvalidArgument("gen_log: need at least one activity");
  if (p.total_events) {
    if (p.cases == 0 && *p.total_events > 0) throw InvalidArgument("gen_log: events without cases");
    if (*p.total_events < p.cases) {
      throw InvalidArgument("gen_log: total events must be at least the number of cases");
    }
  } else if (p.min_length < 1 || p.min_length > p.max_length) {
    throw InvalidArgument("gen_log: trace length bounds must satisfy 1 <= min <= max");
  }

  std::mt19937_64 rng(p.seed);
  std::uniform_int_distribution<std::size_t> pick_activity(0, p.activities - 1);
  std::uniform_int_distribution<std::size_t> pick_length(p.min_length, std::max(p.min_length, p.max_length));
  std::uniform_int_distribution<Timestamp> pick_gap(60, 86400);
  std::uniform_int_distribution<Timestamp> pick_start(0, 365LL * 86400);
  constexpr Timestamp kBase = 1'600'000'000;

  std::vector<std::string> names(p.activities);
  for (std::size_t i = 0; i < p.activities; ++i) names[i] = "a" + std::to_string(i);
  const std::size_t width = std::to_string(p.cases).size();

  std::vector<Event> events;
  if (p.total_events) events.reserve(*p.total_events);
  for (std::size_t c = 0; c < p.cases; ++c) {
    std::size_t length = 0;
    if (p.total_events) {
      length = *p.total_events / p.cases + (c < *p.total_events % p.cases ? 1 : 0);
    } else {
      length = pick_length(rng);
    }
    const std::string case_id = "c" + padded(c + 1, width);
    Timestamp t = kBase + pick_start(rng);
    for (std::size_t i = 0; i < length; ++i) {
      if (i > 0) t += pick_gap(rng);
      Event e;
      e.case_id = case_id;
      e.activity = names[pick_activity(rng)];
      e.timestamp = t;
      events.push_back(std::move(e));
    }
  }
  return EventLog::from_events(std::move(events));
}

GenParams parse_gen_spec(std::string_view spec) {
  GenParams p;
  std::size_t start = 0;
  while (start <= spec.size()) {
    const std::size_t end = std::min(spec.find(',', start), spec.size());
    const std::string_view item = spec.substr(start, end - start);
    start = end + 1;
    if (item.empty()) continue;
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw InvalidArgument("generator spec: expected key=value, got '" + std::string(item) + "'");
    }
    const std::string_view key = item.substr(0, eq);
    const std::string_view value = item.substr(eq + 1);
    if (key == "cases") {
      p.cases = parse_count(key, value);
    } else if (key == "len") {
      const std::size_t dots = value.find("..");
      if (dots == std::string_view::npos) {
        p.min_length = p.max_length = parse_count(key, value);
      } else {
        p.min_length = parse_count(key, value.substr(0, dots));
        p.max_length = parse_count(key, value.substr(dots + 2));
      }
    } else if (key == "acts") {
      p.activities = parse_count(key, value);
    } else if (key == "seed") {
      p.seed = parse_count(key, value);
    } else if (key == "events") {
      p.total_events = parse_count(key, value);
    } else {
      throw InvalidArgument("generator spec: unknown key '" + std::string(key) + "'");
    }
  }
  return p;
}

std::vector<Rule> six_variant_suite(const std::string& a, const std::string& b,
                                    const std::string& c, std::int64_t delta) {
  const TimeWindow lt{delta, Theta::kLT};
  const TimeWindow gt{delta, Theta::kGT};
  return {
      Rule{RuleKind::kPrecedes, a, b, {}, lt},
      Rule{RuleKind::kPrecedes, a, b, {}, gt},
      Rule{RuleKind::kResponse, a, b, {}, lt},
      Rule{RuleKind::kResponse, a, b, {}, gt},
      Rule{RuleKind::kExclude, a, b, {c}, lt},
      Rule{RuleKind::kExclude, a, b, {c}, TimeWindow::unrestricted()},
  };
}

void assert_agreement(const std::vector<ViolationReport>& reports) {
  if (reports.size() < 2) return;
  const auto& reference = reports.front();
  for (std::size_t i = 1; i < reports.size(); ++i) {
    if (reports[i].case_ids == reference.case_ids) continue;
    std::vector<std::string> divergent;
    std::set_symmetric_difference(reference.case_ids.begin(), reference.case_ids.end(),
                                  reports[i].case_ids.begin(), reports[i].case_ids.end(),
                                  std::back_inserter(divergent));
    std::ostringstream msg;
    msg << "encodings disagree on " << format_rule(reference.rule) << ": "
        << to_string(reference.evaluator) << " vs " << to_string(reports[i].evaluator)
        << ", divergent cases:";
    for (const auto& id : divergent) msg << ' ' << id;
    throw EncodingDisagreement(msg.str(), std::move(divergent));
  }
}

namespace {

RuleTiming time_rule(const EncodedLog& encoded, const Rule& rule, unsigned repetitions,
                     unsigned threads, ViolationReport& last) {
  const CheckOptions options{threads};
  last = check(encoded, rule, options);  // warm-up, discarded
  std::vector<double> samples;
  for (unsigned r = 0; r < repetitions; ++r) {
    last = check(encoded, rule, options);
    samples.push_back(last.elapsed.count());
  }
  std::sort(samples.begin(), samples.end());
  RuleTiming t{rule};
  const std::size_t n = samples.size();
  t.median_seconds = n % 2 == 1 ? samples[n / 2] : 0.5 * (samples[n / 2 - 1] + samples[n / 2]);
  t.mean_seconds = std::accumulate(samples.begin(), samples.end(), 0.0) / static_cast<double>(n);
  t.violating_cases = last.case_ids.size();
  t.witnesses = last.violations.size();
  return t;
}

}  // namespace

std::vector<BenchRow> run_bench(const EventLog& log, const BenchConfig& config) {
  if (config.repetitions < 1) throw InvalidArgument("bench: repetitions must be at least 1");
  for (const auto& rule : config.rules) validate(rule);
  const unsigned threads =
      config.threads > 0 ? config.threads : std::max(1u, std::thread::hardware_concurrency());

  std::vector<BenchRow> rows;
  // reports[rule] collects one report per encoding for the agreement check.
  std::vector<std::vector<ViolationReport>> reports(config.rules.size());
  for (EncodingKind kind : config.encodings) {
    const EncodedLog encoded = encode(log, kind);
    const LoadingReport load = loading_report(log, encoded);

    for (bool parallel : {false, true}) {
      if (parallel && !config.parallel) continue;
      BenchRow row;
      row.log_name = config.log_name;
      row.encoding = kind;
      row.parallel = parallel;
      row.cases = load.cases;
      row.nodes = load.actual.num_nodes;
      row.edges = load.actual.num_edges;
      row.avg_degree = load.actual.avg_degree;
      row.node_pass_seconds = load.timings.node_pass().count();
      row.edge_pass_seconds = load.timings.edge_pass().count();
      for (std::size_t i = 0; i < config.rules.size(); ++i) {
        ViolationReport last;
        row.queries.push_back(
            time_rule(encoded, config.rules[i], config.repetitions, parallel ? threads : 1, last));
        reports[i].push_back(std::move(last));
      }
      rows.push_back(std::move(row));
    }
  }
  for (const auto& per_rule : reports) assert_agreement(per_rule);
  return rows;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << "log,encoding,parallel,cases,nodes,edges,avg_degree,load_s,node_pass_s,edge_pass_s,"
         "rule,median_ms,mean_ms,violating_cases\n";
  for (const auto& row : rows) {
    auto prefix = [&] {
      csv::write_field(out, row.log_name);
      out << ',' << to_string(row.encoding) << ',' << (row.parallel ? 1 : 0) << ',' << row.cases
          << ',' << row.nodes << ',' << row.edges << ',' << row.avg_degree << ','
          << row.load_seconds() << ',' << row.node_pass_seconds << ',' << row.edge_pass_seconds
          << ',';
    };
    if (row.queries.empty()) {
      prefix();
      out << ",,,\n";
      continue;
    }
    for (const auto& q : row.queries) {
      prefix();
      csv::write_field(out, format_rule(q.rule));
      out << ',' << q.median_seconds * 1e3 << ',' << q.mean_seconds * 1e3 << ','
          << q.violating_cases << '\n';
    }
  }
}

std::string bench_json(const std::vector<BenchRow>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& row : rows) {
    nlohmann::json queries = nlohmann::json::array();
    for (const auto& q : row.queries) {
      queries.push_back({{"rule", format_rule(q.rule)},
                         {"median_ms", q.median_seconds * 1e3},
                         {"mean_ms", q.mean_seconds * 1e3},
                         {"violating_cases", q.violating_cases},
                         {"witnesses", q.witnesses}});
    }
    out.push_back({{"log", row.log_name},
                   {"encoding", to_string(row.encoding)},
                   {"parallel", row.parallel},
                   {"cases", row.cases},
                   {"nodes", row.nodes},
                   {"edges", row.edges},
                   {"avg_degree", row.avg_degree},
                   {"load_s", row.load_seconds()},
                   {"node_pass_s", row.node_pass_seconds},
                   {"edge_pass_s", row.edge_pass_seconds},
                   {"queries", std::move(queries)}});
  }
  return out.dump(2);
}

}  // namespace evgraph
