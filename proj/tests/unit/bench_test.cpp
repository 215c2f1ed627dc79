#include <gtest/gtest.h>

#include <sstream>

#include "evgraph/bench.hpp"
#include "fixtures.hpp"

namespace evgraph {
namespace {

TEST(GenLog, ShapeAndDeterminism) {
  GenParams p;
  p.cases = 30;
  p.min_length = 2;
  p.max_length = 7;
  p.activities = 4;
  p.seed = 9;
  const EventLog log = gen_log(p);
  EXPECT_EQ(log.cases().size(), 30u);
  EXPECT_LE(log.activities().size(), 4u);
  for (const auto& [id, trace] : log.traces()) {
    EXPECT_GE(trace.size(), 2u);
    EXPECT_LE(trace.size(), 7u);
    for (std::size_t i = 1; i < trace.size(); ++i) {
      const Timestamp gap = trace.events[i].timestamp - trace.events[i - 1].timestamp;
      EXPECT_GE(gap, 60);
      EXPECT_LE(gap, 86400);
    }
  }
  EXPECT_EQ(gen_log(p), log);
  p.seed = 10;
  EXPECT_NE(gen_log(p), log);
}

TEST(GenLog, ExactEventTotal) {
  GenParams p;
  p.cases = 15000;
  p.total_events = 133883;
  p.activities = 9;
  const EventLog log = gen_log(p);
  EXPECT_EQ(log.num_events(), 133883u);
  EXPECT_EQ(log.cases().size(), 15000u);
  EXPECT_EQ(log.activities().size(), 9u);
}

TEST(GenLog, InvalidParams) {
  GenParams p;
  p.activities = 0;
  EXPECT_THROW(gen_log(p), InvalidArgument);
  p = GenParams{};
  p.min_length = 5;
  p.max_length = 4;
  EXPECT_THROW(gen_log(p), InvalidArgument);
  p = GenParams{};
  p.total_events = 10;
  EXPECT_THROW(gen_log(p), InvalidArgument);
}

TEST(GenSpec, Parse) {
  const GenParams p = parse_gen_spec("cases=12,len=3..9,acts=6,seed=4");
  EXPECT_EQ(p.cases, 12u);
  EXPECT_EQ(p.min_length, 3u);
  EXPECT_EQ(p.max_length, 9u);
  EXPECT_EQ(p.activities, 6u);
  EXPECT_EQ(p.seed, 4u);
  EXPECT_EQ(parse_gen_spec("len=5").max_length, 5u);
  EXPECT_EQ(parse_gen_spec("events=77").total_events, 77u);
  EXPECT_THROW(parse_gen_spec("cases=x"), InvalidArgument);
  EXPECT_THROW(parse_gen_spec("colour=red"), InvalidArgument);
  EXPECT_THROW(parse_gen_spec("cases"), InvalidArgument);
}

TEST(SixVariants, Rules) {
  const auto rules = six_variant_suite("A", "B", "C", 3600);
  ASSERT_EQ(rules.size(), 6u);
  EXPECT_EQ(format_rule(rules[0]), "PRECEDES(A, B) TIME < 3600s");
  EXPECT_EQ(format_rule(rules[3]), "RESPONSE(A, B) TIME > 3600s");
  EXPECT_EQ(format_rule(rules[5]), "EXCLUDE(A, B, [C])");
}

TEST(RunBench, SampleLogAllEncodingsAgree) {
  BenchConfig config;
  config.log_name = "sample";
  config.rules = six_variant_suite("B", "E", "C", 200000);
  config.repetitions = 3;
  const auto rows = run_bench(testing::sample_log(), config);
  ASSERT_EQ(rows.size(), 3u);
  for (std::size_t q = 0; q < config.rules.size(); ++q) {
    EXPECT_EQ(rows[0].queries[q].violating_cases, rows[1].queries[q].violating_cases);
    EXPECT_EQ(rows[0].queries[q].violating_cases, rows[2].queries[q].violating_cases);
    EXPECT_GE(rows[0].queries[q].median_seconds, 0.0);
  }
  // PRECEDES(B, E) TIME < 200000s: every E lacks a B within the window.
  EXPECT_EQ(rows[0].queries[0].violating_cases, 3u);
  EXPECT_EQ(rows[2].nodes, 8u);
  EXPECT_EQ(rows[0].edges, 23u);

  std::ostringstream csv;
  write_bench_csv(csv, rows);
  std::string line;
  std::size_t lines = 0;
  for (std::istringstream in(csv.str()); std::getline(in, line);) ++lines;
  EXPECT_EQ(lines, 1u + 3u * 6u);
  EXPECT_NE(bench_json(rows).find("\"encoding\": \"UA\""), std::string::npos);
}

TEST(RunBench, ParallelRows) {
  BenchConfig config;
  config.rules = {parse_rule("RESPONSE(a0, a1) TIME < 1d")};
  config.repetitions = 1;
  config.parallel = true;
  config.threads = 2;
  GenParams p;
  p.cases = 50;
  const auto rows = run_bench(gen_log(p), config);
  ASSERT_EQ(rows.size(), 6u);
  EXPECT_FALSE(rows[0].parallel);
  EXPECT_TRUE(rows[1].parallel);
  EXPECT_EQ(rows[0].queries[0].violating_cases, rows[1].queries[0].violating_cases);
}

TEST(AssertAgreement, NamesDivergentCases) {
  ViolationReport a, b;
  a.rule = b.rule = parse_rule("RESPONSE(A, B)");
  a.evaluator = Evaluator::kBM;
  b.evaluator = Evaluator::kUA;
  a.case_ids = {"1", "2"};
  b.case_ids = {"2", "3"};
  try {
    assert_agreement({a, b});
    FAIL() << "expected EncodingDisagreement";
  } catch (const EncodingDisagreement& e) {
    EXPECT_EQ(e.divergent_cases(), (std::vector<std::string>{"1", "3"}));
  }
  EXPECT_NO_THROW(assert_agreement({a, a}));
}

TEST(RunBench, RejectsZeroRepetitions) {
  BenchConfig config;
  config.repetitions = 0;
  EXPECT_THROW(run_bench(testing::sample_log(), config), InvalidArgument);
}

}  // namespace
}  // namespace evgraph
