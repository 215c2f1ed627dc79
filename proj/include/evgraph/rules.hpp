#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "evgraph/error.hpp"

namespace evgraph {

enum class Theta { kLT, kEQ, kGT, kLE, kGE };

std::string_view to_string(Theta theta);

// A time bound on the elapsed time between two events. An unset `delta`
// means infinite.
struct TimeWindow {
  std::optional<std::int64_t> delta;
  Theta theta = Theta::kLE;

  static TimeWindow unrestricted() { return {}; }
  bool infinite() const noexcept { return !delta.has_value(); }

  friend bool operator==(const TimeWindow&, const TimeWindow&) = default;
};

// `elapsed theta delta`. With an infinite delta, LT and LE hold and EQ, GT
// and GE do not. Throws InvalidArgument for a negative `elapsed`.
bool theta_satisfied(Theta theta, std::int64_t elapsed, std::optional<std::int64_t> delta);

enum class RuleKind { kResponse, kPrecedes, kExclude };

std::string_view to_string(RuleKind kind);

// An order compliance rule. `a` is always the earlier activity and `b` the
// later one:
//   Response(a, b): every a is eventually followed by a b.
//   Precedes(a, b): every b is preceded by an a.
//   Exclude(a, b, excluded): no excluded activity lies between an a and a
//   later b.
struct Rule {
  RuleKind kind = RuleKind::kResponse;
  std::string a;
  std::string b;
  std::vector<std::string> excluded;
  TimeWindow window;

  friend bool operator==(const Rule&, const Rule&) = default;
};

// Throws InvalidArgument when the rule breaks its invariants.
void validate(const Rule& rule);

// Grammar:
//   KIND '(' A ',' B [',' '[' C (',' C)* ']'] ')' [TIME THETA AMOUNT]
//   KIND   := RESPONSE | PRECEDES | EXCLUDE       (case-insensitive)
//   THETA  := < | = | > | <= | >=
//   AMOUNT := INTEGER UNIT | INF                   UNIT := s | m | h | d
// Labels may be double-quoted ("" escapes a quote). Without a TIME clause the
// window is (infinite, <=). Throws RuleSyntaxError with a 1-based column.
Rule parse_rule(std::string_view text);

// Canonical text form; parse_rule(format_rule(r)) == r.
std::string format_rule(const Rule& rule);

// One rule per line; blank lines and lines starting with '#' are skipped.
// Errors are rethrown as RuleSyntaxError prefixed with the line number.
std::vector<Rule> parse_rule_file(std::istream& in);
std::vector<Rule> load_rule_file(const std::string& path);

}  // namespace evgraph
