#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "evgraph/rules.hpp"
#include "fixtures.hpp"

namespace evgraph {
namespace {

constexpr Theta kThetas[] = {Theta::kLT, Theta::kEQ, Theta::kGT, Theta::kLE, Theta::kGE};

TEST(Theta, FiniteComparisons) {
  EXPECT_TRUE(theta_satisfied(Theta::kLT, 5, 10));
  EXPECT_TRUE(theta_satisfied(Theta::kEQ, 10, 10));
  EXPECT_FALSE(theta_satisfied(Theta::kGT, 5, 10));
  EXPECT_TRUE(theta_satisfied(Theta::kGT, 11, 10));
  EXPECT_FALSE(theta_satisfied(Theta::kGE, 9, 10));
  EXPECT_FALSE(theta_satisfied(Theta::kLE, 11, 10));
}

TEST(Theta, InfiniteWindow) {
  EXPECT_TRUE(theta_satisfied(Theta::kLE, 999999, std::nullopt));
  EXPECT_TRUE(theta_satisfied(Theta::kLT, 0, std::nullopt));
  EXPECT_FALSE(theta_satisfied(Theta::kEQ, 0, std::nullopt));
  EXPECT_FALSE(theta_satisfied(Theta::kGT, 999999, std::nullopt));
  EXPECT_FALSE(theta_satisfied(Theta::kGE, 999999, std::nullopt));
}

TEST(Theta, NegativeElapsedIsAnError) {
  EXPECT_THROW(theta_satisfied(Theta::kLT, -1, 10), InvalidArgument);
}

TEST(Theta, ReflexivityAtDelta) {
  for (std::int64_t x : {0, 1, 59, 3600, 1000000}) {
    EXPECT_TRUE(theta_satisfied(Theta::kLE, x, x));
    EXPECT_TRUE(theta_satisfied(Theta::kGE, x, x));
    EXPECT_TRUE(theta_satisfied(Theta::kEQ, x, x));
    EXPECT_FALSE(theta_satisfied(Theta::kLT, x, x));
    EXPECT_FALSE(theta_satisfied(Theta::kGT, x, x));
  }
}

// Exactly one of <, =, > holds; <= is < or =; >= is > or =.
TEST(Theta, Trichotomy) {
  for (std::int64_t d = 0; d < 6; ++d) {
    for (std::int64_t x = 0; x < 12; ++x) {
      const bool lt = theta_satisfied(Theta::kLT, x, d);
      const bool eq = theta_satisfied(Theta::kEQ, x, d);
      const bool gt = theta_satisfied(Theta::kGT, x, d);
      EXPECT_EQ(lt + eq + gt, 1);
      EXPECT_EQ(theta_satisfied(Theta::kLE, x, d), lt || eq);
      EXPECT_EQ(theta_satisfied(Theta::kGE, x, d), gt || eq);
    }
  }
}

TEST(ParseRule, DefaultWindow) {
  const Rule r = parse_rule("PRECEDES(B, E)");
  EXPECT_EQ(r.kind, RuleKind::kPrecedes);
  EXPECT_EQ(r.a, "B");
  EXPECT_EQ(r.b, "E");
  EXPECT_TRUE(r.excluded.empty());
  EXPECT_TRUE(r.window.infinite());
  EXPECT_EQ(r.window.theta, Theta::kLE);
}

TEST(ParseRule, HoursConverted) {
  const Rule r = parse_rule("RESPONSE(A, B) TIME < 3h");
  EXPECT_EQ(r.kind, RuleKind::kResponse);
  EXPECT_EQ(r.window, (TimeWindow{10800, Theta::kLT}));
}

TEST(ParseRule, ExcludeList) {
  const Rule r = parse_rule("EXCLUDE(A, D, [E]) TIME <= 7200s");
  EXPECT_EQ(r.kind, RuleKind::kExclude);
  EXPECT_EQ(r.excluded, std::vector<std::string>{"E"});
  EXPECT_EQ(r.window, (TimeWindow{7200, Theta::kLE}));
  EXPECT_EQ(parse_rule("EXCLUDE(A,D,[E,\"F G\"])").excluded,
            (std::vector<std::string>{"E", "F G"}));
}

TEST(ParseRule, UnitsAndCase) {
  EXPECT_EQ(parse_rule("response(a, b) time = 2m").window, (TimeWindow{120, Theta::kEQ}));
  EXPECT_EQ(parse_rule("RESPONSE(a, b) TIME >= 1d").window, (TimeWindow{86400, Theta::kGE}));
  EXPECT_EQ(parse_rule("RESPONSE(a, b) TIME > 0s").window, (TimeWindow{0, Theta::kGT}));
  EXPECT_EQ(parse_rule("RESPONSE(a, b) TIME > INF").window, (TimeWindow{std::nullopt, Theta::kGT}));
}

TEST(ParseRule, QuotedLabels) {
  const Rule r = parse_rule(R"(RESPONSE("Send, then wait", "Done ""ok"""))");
  EXPECT_EQ(r.a, "Send, then wait");
  EXPECT_EQ(r.b, "Done \"ok\"");
}

std::size_t error_column(std::string_view text) {
  try {
    parse_rule(text);
  } catch (const RuleSyntaxError& e) {
    return e.column();
  }
  ADD_FAILURE() << "no error for " << text;
  return 0;
}

TEST(ParseRule, SyntaxErrorsReportColumn) {
  EXPECT_EQ(error_column("FOLLOWS(A, B)"), 1u);
  EXPECT_EQ(error_column("RESPONSE A, B)"), 10u);
  EXPECT_EQ(error_column("EXCLUDE(A, D)"), 13u);
  EXPECT_EQ(error_column("RESPONSE(A, B, [C])"), 16u);
  EXPECT_EQ(error_column("RESPONSE(A, B) TIME < -5s"), 23u);
  EXPECT_EQ(error_column("RESPONSE(A, B) TIME < 5y"), 24u);
  EXPECT_EQ(error_column("RESPONSE(A, B) TIME << 5s"), 22u);
  EXPECT_EQ(error_column("RESPONSE(A, ) "), 13u);
  EXPECT_EQ(error_column("RESPONSE(A, B) extra"), 16u);
  EXPECT_EQ(error_column("RESPONSE(\"A, B)"), 10u);
}

TEST(ParseRule, RoundTrip) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 500; ++i) {
    const Rule r = testing::random_rule(rng);
    const std::string text = format_rule(r);
    EXPECT_EQ(parse_rule(text), r) << text;
    EXPECT_EQ(format_rule(parse_rule(text)), text);
  }
}

TEST(FormatRule, Canonical) {
  EXPECT_EQ(format_rule(parse_rule("precedes( B ,E )")), "PRECEDES(B, E)");
  EXPECT_EQ(format_rule(parse_rule("RESPONSE(A,B) TIME < 3h")), "RESPONSE(A, B) TIME < 10800s");
  EXPECT_EQ(format_rule(parse_rule("EXCLUDE(A,\"x,y\",[E]) TIME >= INF")),
            "EXCLUDE(A, \"x,y\", [E]) TIME >= INF");
}

TEST(Validate, Invariants) {
  EXPECT_NO_THROW(validate(parse_rule("RESPONSE(A, B)")));
  EXPECT_THROW(validate(Rule{RuleKind::kResponse, "", "B"}), InvalidArgument);
  EXPECT_THROW(validate(Rule{RuleKind::kExclude, "A", "B"}), InvalidArgument);
  EXPECT_THROW(validate(Rule{RuleKind::kResponse, "A", "B", {"C"}}), InvalidArgument);
  EXPECT_THROW(validate(Rule{RuleKind::kResponse, "A", "B", {}, TimeWindow{-1, Theta::kLT}}),
               InvalidArgument);
  for (Theta t : kThetas) EXPECT_NO_THROW(validate(Rule{RuleKind::kPrecedes, "A", "B", {}, {3, t}}));
}

TEST(RuleFile, CommentsBlankLinesAndErrors) {
  std::istringstream ok("# suite\n\nPRECEDES(B, E)\r\n  # indented comment\nRESPONSE(A, E) TIME < 1h\n");
  const auto rules = parse_rule_file(ok);
  ASSERT_EQ(rules.size(), 2u);
  EXPECT_EQ(rules[1].window, (TimeWindow{3600, Theta::kLT}));

  std::istringstream bad("PRECEDES(B, E)\n\nRESPONSE(A E)\n");
  try {
    parse_rule_file(bad);
    FAIL() << "expected RuleSyntaxError";
  } catch (const RuleSyntaxError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.column(), 12u);
    EXPECT_EQ(std::string(e.what()), "line 3, column 12: expected ','");
  }
}

}  // namespace
}  // namespace evgraph
