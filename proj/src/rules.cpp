#include "evgraph/rules.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <limits>
#include <sstream>

#include "evgraph/error.hpp"

namespace evgraph {

std::string_view to_string(Theta theta) {
  switch (theta) {
    case Theta::kLT: return "<";
    case Theta::kEQ: return "=";
    case Theta::kGT: return ">";
    case Theta::kLE: return "<=";
    case Theta::kGE: return ">=";
  }
  return "?";
}

std::string_view to_string(RuleKind kind) {
  switch (kind) {
    case RuleKind::kResponse: return "RESPONSE";
    case RuleKind::kPrecedes: return "PRECEDES";
    case RuleKind::kExclude: return "EXCLUDE";
  }
  return "?";
}

bool theta_satisfied(Theta theta, std::int64_t elapsed, std::optional<std::int64_t> delta) {
  if (elapsed < 0) throw InvalidArgument("theta_satisfied: negative elapsed time");
  if (!delta) return theta == Theta::kLT || theta == Theta::kLE;
  switch (theta) {
    case Theta::kLT: return elapsed < *delta;
    case Theta::kEQ: return elapsed == *delta;
    case Theta::kGT: return elapsed > *delta;
    case Theta::kLE: return elapsed <= *delta;
    case Theta::kGE: return elapsed >= *delta;
  }
  return false;
}

void validate(const Rule& rule) {
  if (rule.a.empty() || rule.b.empty()) throw InvalidArgument("rule activities must be non-empty");
  if ((rule.kind == RuleKind::kExclude) == rule.excluded.empty()) {
    throw InvalidArgument("an exclude list is required for EXCLUDE and forbidden otherwise");
  }
  for (const auto& c : rule.excluded) {
    if (c.empty()) throw InvalidArgument("excluded activities must be non-empty");
  }
  if (rule.window.delta && *rule.window.delta < 0) {
    throw InvalidArgument("time window must be nonnegative");
  }
}

namespace {

bool is_label_char(char c) {
  if (std::isspace(static_cast<unsigned char>(c))) return false;
  switch (c) {
    case ',': case '(': case ')': case '[': case ']': case '"': case '<': case '>': case '=':
    case '#':
      return false;
    default:
      return true;
  }
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Rule parse() {
    Rule rule;
    skip_ws();
    const std::size_t kind_col = column();
    const std::string kind = upper(word());
    if (kind == "RESPONSE") {
      rule.kind = RuleKind::kResponse;
    } else if (kind == "PRECEDES") {
      rule.kind = RuleKind::kPrecedes;
    } else if (kind == "EXCLUDE") {
      rule.kind = RuleKind::kExclude;
    } else {
      throw RuleSyntaxError(kind_col, "expected RESPONSE, PRECEDES or EXCLUDE");
    }

    expect('(');
    rule.a = label();
    expect(',');
    rule.b = label();
    skip_ws();
    if (peek() == ',') {
      ++pos_;
      const std::size_t list_col = column() + 1;
      expect('[');
      rule.excluded.push_back(label());
      for (skip_ws(); peek() == ','; skip_ws()) {
        ++pos_;
        rule.excluded.push_back(label());
      }
      expect(']');
      if (rule.kind != RuleKind::kExclude) {
        throw RuleSyntaxError(list_col, "an exclude list is only allowed for EXCLUDE");
      }
    } else if (rule.kind == RuleKind::kExclude) {
      throw RuleSyntaxError(column(), "EXCLUDE requires a bracketed list of excluded activities");
    }
    expect(')');

    skip_ws();
    if (!at_end()) {
      const std::size_t time_col = column();
      if (upper(word()) != "TIME") throw RuleSyntaxError(time_col, "expected TIME clause");
      rule.window = window();
    }
    skip_ws();
    if (!at_end()) throw RuleSyntaxError(column(), "unexpected trailing input");
    return rule;
  }

 private:
  static std::string upper(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    return s;
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  std::size_t column() const { return pos_ + 1; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) throw RuleSyntaxError(column(), std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string word() {
    const std::size_t start = pos_;
    while (!at_end() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string label() {
    skip_ws();
    const std::size_t col = column();
    std::string out;
    if (peek() == '"') {
      ++pos_;
      for (;;) {
        if (at_end()) throw RuleSyntaxError(col, "unterminated quoted label");
        const char c = text_[pos_++];
        if (c == '"') {
          if (peek() != '"') break;
          ++pos_;
        }
        out.push_back(c);
      }
    } else {
      while (!at_end() && is_label_char(text_[pos_])) out.push_back(text_[pos_++]);
    }
    if (out.empty()) throw RuleSyntaxError(col, "expected an activity label");
    return out;
  }

  TimeWindow window() {
    TimeWindow w;
    skip_ws();
    const std::size_t theta_col = column();
    const char c = peek();
    if (c == '<' || c == '>') {
      ++pos_;
      const bool or_equal = peek() == '=';
      if (or_equal) ++pos_;
      w.theta = c == '<' ? (or_equal ? Theta::kLE : Theta::kLT)
                         : (or_equal ? Theta::kGE : Theta::kGT);
    } else if (c == '=') {
      ++pos_;
      w.theta = Theta::kEQ;
    } else {
      throw RuleSyntaxError(theta_col, "expected one of < = > <= >=");
    }

    skip_ws();
    const std::size_t amount_col = column();
    if (peek() == '-') throw RuleSyntaxError(amount_col, "time window must be nonnegative");
    if (std::isalpha(static_cast<unsigned char>(peek()))) {
      if (upper(word()) != "INF") throw RuleSyntaxError(amount_col, "expected a duration or INF");
      w.delta.reset();
      return w;
    }
    std::int64_t value = 0;
    bool any = false;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      const int digit = text_[pos_++] - '0';
      if (value > (std::numeric_limits<std::int64_t>::max() - digit) / 10) {
        throw RuleSyntaxError(amount_col, "duration out of range");
      }
      value = value * 10 + digit;
      any = true;
    }
    if (!any) throw RuleSyntaxError(amount_col, "expected a duration");
    skip_ws();
    const std::size_t unit_col = column();
    const std::string unit = word();
    std::int64_t scale = 0;
    if (unit == "s") {
      scale = 1;
    } else if (unit == "m") {
      scale = 60;
    } else if (unit == "h") {
      scale = 3600;
    } else if (unit == "d") {
      scale = 86400;
    } else {
      throw RuleSyntaxError(unit_col, "expected a time unit (s, m, h, d)");
    }
    if (value > std::numeric_limits<std::int64_t>::max() / scale) {
      throw RuleSyntaxError(amount_col, "duration out of range");
    }
    w.delta = value * scale;
    return w;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void write_label(std::ostream& out, const std::string& label) {
  const bool plain = !label.empty() && std::all_of(label.begin(), label.end(), is_label_char);
  if (plain) {
    out << label;
    return;
  }
  out << '"';
  for (char c : label) {
    if (c == '"') out << '"';
    out << c;
  }
  out << '"';
}

}  // namespace

Rule parse_rule(std::string_view text) { return Parser(text).parse(); }

std::string format_rule(const Rule& rule) {
  std::ostringstream out;
  out << to_string(rule.kind) << '(';
  write_label(out, rule.a);
  out << ", ";
  write_label(out, rule.b);
  if (!rule.excluded.empty()) {
    out << ", [";
    for (std::size_t i = 0; i < rule.excluded.size(); ++i) {
      if (i > 0) out << ", ";
      write_label(out, rule.excluded[i]);
    }
    out << ']';
  }
  out << ')';
  if (rule.window != TimeWindow::unrestricted()) {
    out << " TIME " << to_string(rule.window.theta) << ' ';
    if (rule.window.delta) {
      out << *rule.window.delta << 's';
    } else {
      out << "INF";
    }
  }
  return out.str();
}

std::vector<Rule> parse_rule_file(std::istream& in) {
  std::vector<Rule> rules;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    try {
      rules.push_back(parse_rule(line));
    } catch (const RuleSyntaxError& e) {
      throw RuleSyntaxError(e.column(), e.detail(), number);
    }
  }
  return rules;
}

std::vector<Rule> load_rule_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open rule file '" + path + "'");
  return parse_rule_file(in);
}

}  // namespace evgraph
