// Randomized checks over small generated logs.

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "evgraph/engine.hpp"
#include "evgraph/oracle.hpp"
#include "fixtures.hpp"

namespace evgraph {
namespace {

using testing::kAllEncodings;

bool subset(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

TEST(Properties, EncodingsMatchOracle) {
  std::mt19937_64 rng(101);
  for (int round = 0; round < 200; ++round) {
    const EventLog log = testing::random_log(rng);
    const EncodedLog encoded[] = {encode(log, EncodingKind::kBM), encode(log, EncodingKind::kEP),
                                  encode(log, EncodingKind::kUA)};
    for (int r = 0; r < 5; ++r) {
      const Rule rule = testing::random_rule(rng);
      const ViolationReport want = oracle_check(log, rule);
      for (const auto& enc : encoded) {
        const ViolationReport got = check(enc, rule);
        ASSERT_TRUE(same_result(got, want))
            << to_string(enc.kind()) << ' ' << format_rule(rule) << " round " << round;
      }
    }
  }
}

// A case's verdict depends only on its own trace.
TEST(Properties, CasesAreIndependent) {
  std::mt19937_64 rng(103);
  for (int round = 0; round < 40; ++round) {
    const EventLog log = testing::random_log(rng, {8, 12, 4});
    const Rule rule = testing::random_rule(rng);
    const ViolationReport whole = check(encode(log, EncodingKind::kUA), rule);
    std::vector<Witness> pieces;
    for (const auto& [id, trace] : log.traces()) {
      const EventLog single = EventLog::from_events(trace.events);
      const auto part = check(encode(single, EncodingKind::kBM), rule).violations;
      pieces.insert(pieces.end(), part.begin(), part.end());
    }
    EXPECT_EQ(whole.violations, pieces) << format_rule(rule);
  }
}

// Interleaving the rows of different cases in any order yields the same log.
TEST(Properties, InputOrderInvariance) {
  std::mt19937_64 rng(107);
  for (int round = 0; round < 40; ++round) {
    const EventLog log = testing::random_log(rng, {10, 10, 4});
    std::vector<std::vector<Event>> queues;
    for (const auto& [id, trace] : log.traces()) {
      queues.emplace_back(trace.events.rbegin(), trace.events.rend());
    }
    std::vector<Event> interleaved;
    while (!queues.empty()) {
      const std::size_t pick =
          std::uniform_int_distribution<std::size_t>(0, queues.size() - 1)(rng);
      interleaved.push_back(queues[pick].back());
      queues[pick].pop_back();
      if (queues[pick].empty()) queues.erase(queues.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    EXPECT_EQ(EventLog::from_events(interleaved), log);
  }
}

TEST(Properties, WindowMonotonicity) {
  std::mt19937_64 rng(109);
  for (int round = 0; round < 60; ++round) {
    const EventLog log = testing::random_log(rng);
    const EncodedLog enc = encode(log, kAllEncodings[round % 3]);
    for (RuleKind kind : {RuleKind::kResponse, RuleKind::kPrecedes}) {
      std::vector<std::string> prev_lt, prev_le, prev_gt;
      for (std::int64_t delta = 0; delta <= 25; ++delta) {
        auto ids = [&](Theta t) {
          return check(enc, Rule{kind, "A", "B", {}, TimeWindow{delta, t}}).case_ids;
        };
        const auto lt = ids(Theta::kLT), le = ids(Theta::kLE), gt = ids(Theta::kGT);
        // A wider upper bound can only remove violations; a wider lower bound
        // can only add them.
        if (delta > 0) {
          EXPECT_TRUE(subset(lt, prev_lt));
          EXPECT_TRUE(subset(le, prev_le));
          EXPECT_TRUE(subset(prev_gt, gt));
        }
        EXPECT_TRUE(subset(le, lt));
        prev_lt = lt;
        prev_le = le;
        prev_gt = gt;
      }
      const auto unrestricted = check(enc, Rule{kind, "A", "B"}).case_ids;
      EXPECT_TRUE(subset(unrestricted, prev_le));
    }
  }
}

// Exclude can only fire where the unrestricted Response toward b is answered.
TEST(Properties, ExcludeImpliesPartnerExists) {
  std::mt19937_64 rng(113);
  for (int round = 0; round < 60; ++round) {
    const EventLog log = testing::random_log(rng, {20, 15, 4});
    const EncodedLog enc = encode(log, EncodingKind::kEP);
    const auto excl = check(enc, parse_rule("EXCLUDE(A, B, [C])")).violations;
    const auto resp = check(enc, parse_rule("RESPONSE(A, B)")).violations;
    for (const Witness& w : excl) {
      EXPECT_EQ(std::count_if(resp.begin(), resp.end(),
                              [&](const Witness& r) {
                                return r.case_id == w.case_id && r.trigger == w.trigger;
                              }),
                0);
      EXPECT_GT(w.detail->position, w.trigger.position);
    }
  }
}

}  // namespace
}  // namespace evgraph
