#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "evgraph/encoders.hpp"
#include "evgraph/error.hpp"
#include "evgraph/event_log.hpp"
#include "evgraph/report.hpp"
#include "evgraph/rules.hpp"

namespace evgraph {

// Synthetic log parameters. Activities are named a0..a{n-1}; case ids are
// zero-padded so lexicographic order matches generation order.
struct GenParams {
  std::size_t cases = 100;
  std::size_t min_length = 10;
  std::size_t max_length = 10;
  std::size_t activities = 5;
  std::uint64_t seed = 1;
  // When set, trace lengths are spread as evenly as possible so that they sum
  // to exactly this many events (min/max_length are ignored).
  std::optional<std::size_t> total_events;
};

// Uniformly random activity sequences; timestamps strictly increase within a
// case by gaps drawn from [60, 86400] seconds. Deterministic for a seed.
EventLog gen_log(const GenParams& params);

// Parses "cases=100,len=5..20,acts=8,seed=3[,events=N]". `len` accepts a
// single value or a min..max range.
GenParams parse_gen_spec(std::string_view spec);

// The six time-window variants run against every log:
//   PRECEDES(a, b)  TIME < delta   (within)   and TIME > delta (before)
//   RESPONSE(a, b)  TIME < delta   (within)   and TIME > delta (after)
//   EXCLUDE(a, b, [c]) TIME < delta           and without a window
std::vector<Rule> six_variant_suite(const std::string& a, const std::string& b,
                                    const std::string& c, std::int64_t delta);

struct BenchConfig {
  std::string log_name = "log";
  std::vector<EncodingKind> encodings{EncodingKind::kBM, EncodingKind::kEP, EncodingKind::kUA};
  std::vector<Rule> rules;
  // Timed runs per query; one extra warm-up run precedes them.
  unsigned repetitions = 5;
  // Adds a case-partitioned row per encoding, evaluated with `threads` workers.
  bool parallel = false;
  unsigned threads = 0;  // 0 = hardware concurrency
};

struct RuleTiming {
  Rule rule;
  double median_seconds = 0;
  double mean_seconds = 0;
  std::size_t violating_cases = 0;
  std::size_t witnesses = 0;
};

struct BenchRow {
  std::string log_name;
  EncodingKind encoding = EncodingKind::kBM;
  bool parallel = false;
  std::size_t cases = 0;
  std::size_t nodes = 0;
  std::size_t edges = 0;
  double avg_degree = 0;
  double node_pass_seconds = 0;
  double edge_pass_seconds = 0;
  std::vector<RuleTiming> queries;

  double load_seconds() const { return node_pass_seconds + edge_pass_seconds; }
};

// Two encodings returned different case sets for the same rule.
class EncodingDisagreement : public Error {
 public:
  EncodingDisagreement(const std::string& what, std::vector<std::string> divergent)
      : Error(what), divergent_(std::move(divergent)) {}
  const std::vector<std::string>& divergent_cases() const noexcept { return divergent_; }

 private:
  std::vector<std::string> divergent_;
};

// Throws EncodingDisagreement, naming the case ids in the symmetric
// difference, unless every report has the same case ids.
void assert_agreement(const std::vector<ViolationReport>& reports);

// Encodes the log once per configured encoding, times each rule and asserts
// that all encodings agree on the violating cases.
std::vector<BenchRow> run_bench(const EventLog& log, const BenchConfig& config);

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);
std::string bench_json(const std::vector<BenchRow>& rows);

}  // namespace evgraph
