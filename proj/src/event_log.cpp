#include "evgraph/event_log.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <chrono>
#include <fstream>
#include <limits>
#include <sstream>
#include <unordered_map>

#include "csv.hpp"
#include "evgraph/error.hpp"

namespace evgraph {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Reads exactly `width` digits starting at `pos`.
bool fixed_digits(std::string_view s, std::size_t pos, std::size_t width, int& out) {
  if (pos + width > s.size()) return false;
  int value = 0;
  for (std::size_t i = pos; i < pos + width; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    value = value * 10 + (s[i] - '0');
  }
  out = value;
  return true;
}

std::optional<Timestamp> parse_iso8601(std::string_view s) {
  using namespace std::chrono;
  int year = 0, month = 0, day = 0;
  if (!fixed_digits(s, 0, 4, year) || s.size() < 10 || s[4] != '-' ||
      !fixed_digits(s, 5, 2, month) || s[7] != '-' || !fixed_digits(s, 8, 2, day)) {
    return std::nullopt;
  }
  const year_month_day ymd{std::chrono::year{year}, std::chrono::month{static_cast<unsigned>(month)},
                           std::chrono::day{static_cast<unsigned>(day)}};
  if (!ymd.ok()) return std::nullopt;

  std::int64_t seconds = 0;
  std::size_t pos = 10;
  if (pos < s.size()) {
    if (s[pos] != 'T' && s[pos] != ' ') return std::nullopt;
    int hh = 0, mm = 0, ss = 0;
    if (!fixed_digits(s, pos + 1, 2, hh) || pos + 3 >= s.size() || s[pos + 3] != ':' ||
        !fixed_digits(s, pos + 4, 2, mm)) {
      return std::nullopt;
    }
    pos += 6;
    if (pos < s.size() && s[pos] == ':') {
      if (!fixed_digits(s, pos + 1, 2, ss)) return std::nullopt;
      pos += 3;
      if (pos < s.size() && (s[pos] == '.' || s[pos] == ',')) {
        ++pos;
        const std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) return std::nullopt;
      }
    }
    if (hh > 23 || mm > 59 || ss > 60) return std::nullopt;
    seconds = hh * 3600 + mm * 60 + ss;

    if (pos < s.size()) {
      if (s[pos] == 'Z' && pos + 1 == s.size()) {
        pos = s.size();
      } else if (s[pos] == '+' || s[pos] == '-') {
        const int sign = s[pos] == '+' ? 1 : -1;
        int oh = 0, om = 0;
        if (!fixed_digits(s, pos + 1, 2, oh)) return std::nullopt;
        std::size_t p = pos + 3;
        if (p < s.size() && s[p] == ':') ++p;
        if (p < s.size()) {
          if (!fixed_digits(s, p, 2, om)) return std::nullopt;
          p += 2;
        }
        if (p != s.size() || oh > 23 || om > 59) return std::nullopt;
        seconds -= sign * (oh * 3600 + om * 60);
        pos = s.size();
      } else {
        return std::nullopt;
      }
    }
  }
  const auto days_since_epoch = sys_days{ymd}.time_since_epoch().count();
  return static_cast<Timestamp>(days_since_epoch) * 86400 + seconds;
}

struct ResolvedColumns {
  std::size_t case_id;
  std::size_t activity;
  std::size_t timestamp;
  std::optional<std::size_t> resource;
  std::optional<std::size_t> lifecycle;
  std::optional<std::size_t> position;
};

ResolvedColumns resolve(const std::vector<std::string>& header, const ColumnConfig& config) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < header.size(); ++i) {
    index.emplace(lower(trim(header[i])), i);
  }
  auto find = [&](const std::string& name) -> std::optional<std::size_t> {
    if (auto it = index.find(lower(name)); it != index.end()) return it->second;
    return std::nullopt;
  };
  auto require = [&](const std::string& name) {
    if (auto col = find(name)) return *col;
    throw ConfigError(name, "missing required column '" + name + "'");
  };

  ResolvedColumns cols{};
  cols.case_id = require(config.case_id);
  cols.activity = require(config.activity);
  if (auto ts = find(config.timestamp)) {
    cols.timestamp = *ts;
  } else {
    auto start = find(config.start_time);
    auto complete = find(config.complete_time);
    if (start && complete) {
      cols.timestamp = config.prefer == TimeSource::kComplete ? *complete : *start;
    } else if (complete) {
      cols.timestamp = *complete;
    } else if (start) {
      cols.timestamp = *start;
    } else {
      throw ConfigError(config.timestamp, "missing required column '" + config.timestamp + "'");
    }
  }
  cols.resource = find(config.resource);
  cols.lifecycle = find(config.lifecycle);
  cols.position = find("position");
  return cols;
}

}  // namespace

std::optional<Timestamp> parse_timestamp(std::string_view text) {
  text = trim(text);
  if (text.empty()) return std::nullopt;

  const bool integral = std::all_of(text.begin() + ((text[0] == '-' || text[0] == '+') ? 1 : 0),
                                    text.end(), [](unsigned char c) { return std::isdigit(c); });
  if (integral) {
    if (text[0] == '+') text.remove_prefix(1);
    Timestamp value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
    return value;
  }
  return parse_iso8601(text);
}

EventLog EventLog::from_events(std::vector<Event> events) {
  EventLog log;
  for (auto& event : events) {
    if (event.case_id.empty()) throw InvalidArgument("event with empty case id");
    if (event.activity.empty()) throw InvalidArgument("event with empty activity");
    log.activities_.insert(event.activity);
    auto& trace = log.traces_[event.case_id];
    if (trace.case_id.empty()) trace.case_id = event.case_id;
    trace.events.push_back(std::move(event));
  }
  for (auto& [case_id, trace] : log.traces_) {
    std::stable_sort(trace.events.begin(), trace.events.end(),
                     [](const Event& a, const Event& b) { return a.timestamp < b.timestamp; });
    std::uint32_t position = 0;
    for (auto& event : trace.events) event.position = ++position;
    log.cases_.insert(case_id);
    log.num_events_ += trace.events.size();
  }
  return log;
}

const Trace* EventLog::find(std::string_view case_id) const {
  auto it = traces_.find(std::string(case_id));
  return it == traces_.end() ? nullptr : &it->second;
}

EventLog parse_event_log(std::istream& in, const ColumnConfig& config) {
  csv::Reader reader(in);
  std::vector<std::string> header;
  std::size_t line = 0;
  if (!reader.next(header, line)) {
    throw ConfigError(config.case_id, "empty input: header row expected");
  }
  // Drop a UTF-8 byte order mark if present.
  if (!header.empty() && header[0].starts_with("\xEF\xBB\xBF")) header[0].erase(0, 3);

  const ResolvedColumns cols = resolve(header, config);
  std::vector<std::size_t> extra_cols;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i == cols.case_id || i == cols.activity || i == cols.timestamp || i == cols.resource ||
        i == cols.lifecycle || i == cols.position) {
      continue;
    }
    extra_cols.push_back(i);
  }

  std::vector<Event> events;
  std::vector<std::string> fields;
  while (reader.next(fields, line)) {
    if (fields.size() == 1 && trim(fields[0]).empty()) continue;
    if (fields.size() != header.size()) {
      throw RowError(line, "expected " + std::to_string(header.size()) + " fields, found " +
                               std::to_string(fields.size()));
    }
    Event event;
    event.case_id = std::string(trim(fields[cols.case_id]));
    if (event.case_id.empty()) throw RowError(line, "empty case id");
    event.activity = std::string(trim(fields[cols.activity]));
    if (event.activity.empty()) throw RowError(line, "empty activity");
    auto ts = parse_timestamp(fields[cols.timestamp]);
    if (!ts) throw RowError(line, "unparseable timestamp '" + fields[cols.timestamp] + "'");
    event.timestamp = *ts;
    if (cols.resource && !fields[*cols.resource].empty()) event.resource = fields[*cols.resource];
    if (cols.lifecycle && !fields[*cols.lifecycle].empty()) event.lifecycle = fields[*cols.lifecycle];
    for (std::size_t col : extra_cols) event.extra.emplace(trim(header[col]), fields[col]);
    events.push_back(std::move(event));
  }
  return EventLog::from_events(std::move(events));
}

EventLog parse_event_log(std::string_view csv, const ColumnConfig& config) {
  std::istringstream in{std::string(csv)};
  return parse_event_log(in, config);
}

EventLog load_event_log(const std::string& path, const ColumnConfig& config) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open event log '" + path + "'");
  return parse_event_log(in, config);
}

void write_event_log(std::ostream& out, const EventLog& log) {
  bool any_resource = false;
  bool any_lifecycle = false;
  std::set<std::string> extra_keys;
  for (const auto& [_, trace] : log.traces()) {
    for (const auto& e : trace.events) {
      any_resource |= e.resource.has_value();
      any_lifecycle |= e.lifecycle.has_value();
      for (const auto& [key, _v] : e.extra) extra_keys.insert(key);
    }
  }

  out << "case,activity,timestamp";
  if (any_resource) out << ",resource";
  if (any_lifecycle) out << ",lifecycle";
  for (const auto& key : extra_keys) {
    out << ',';
    csv::write_field(out, key);
  }
  out << ",position\n";

  for (const auto& [_, trace] : log.traces()) {
    for (const auto& e : trace.events) {
      csv::write_field(out, e.case_id);
      out << ',';
      csv::write_field(out, e.activity);
      out << ',' << e.timestamp;
      if (any_resource) {
        out << ',';
        csv::write_field(out, e.resource.value_or(""));
      }
      if (any_lifecycle) {
        out << ',';
        csv::write_field(out, e.lifecycle.value_or(""));
      }
      for (const auto& key : extra_keys) {
        out << ',';
        auto it = e.extra.find(key);
        if (it != e.extra.end()) csv::write_field(out, it->second);
      }
      out << ',' << e.position << '\n';
    }
  }
}

LogSummary log_summary(const EventLog& log) {
  LogSummary summary;
  summary.num_cases = log.traces().size();
  summary.num_events = log.num_events();
  summary.num_activities = log.activities().size();
  if (summary.num_cases == 0) return summary;

  summary.min_trace_length = std::numeric_limits<std::size_t>::max();
  for (const auto& [_, trace] : log.traces()) {
    summary.min_trace_length = std::min(summary.min_trace_length, trace.size());
    summary.max_trace_length = std::max(summary.max_trace_length, trace.size());
  }
  summary.mean_trace_length =
      static_cast<double>(summary.num_events) / static_cast<double>(summary.num_cases);
  return summary;
}

}  // namespace evgraph
