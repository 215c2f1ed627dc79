// evgraph: load, encode and check event logs from the command line.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <thread>
#include <nlohmann/json.hpp>

#include "evgraph/bench.hpp"
#include "evgraph/encoders.hpp"
#include "evgraph/engine.hpp"
#include "evgraph/event_log.hpp"
#include "evgraph/oracle.hpp"
#include "evgraph/rules.hpp"

namespace {

using namespace evgraph;

struct SourceOptions {
  std::string log_path;
  std::string gen;
  ColumnConfig columns;
  bool prefer_start = false;
};

void add_source_options(CLI::App* cmd, SourceOptions& src) {
  cmd->add_option("--log", src.log_path, "CSV event log");
  cmd->add_option("--gen", src.gen, "Generate a log: cases=..,len=..,acts=..,seed=..[,events=..]");
  cmd->add_option("--case-col", src.columns.case_id, "Case id column")->capture_default_str();
  cmd->add_option("--activity-col", src.columns.activity, "Activity column")
      ->capture_default_str();
  cmd->add_option("--time-col", src.columns.timestamp, "Timestamp column")->capture_default_str();
  cmd->add_option("--start-col", src.columns.start_time, "Start time column")
      ->capture_default_str();
  cmd->add_option("--complete-col", src.columns.complete_time, "Completion time column")
      ->capture_default_str();
  cmd->add_flag("--use-start-time", src.prefer_start,
                "Use the start time when both start and completion columns exist");
}

EventLog load_source(SourceOptions src, std::string& name) {
  if (src.log_path.empty() == src.gen.empty()) {
    throw Error("exactly one of --log or --gen is required");
  }
  if (!src.gen.empty()) {
    name = "gen(" + src.gen + ")";
    return gen_log(parse_gen_spec(src.gen));
  }
  src.columns.prefer = src.prefer_start ? TimeSource::kStart : TimeSource::kComplete;
  name = src.log_path;
  return load_event_log(src.log_path, src.columns);
}

std::vector<Rule> collect_rules(const std::vector<std::string>& texts, const std::string& file) {
  std::vector<Rule> rules;
  if (!file.empty()) rules = load_rule_file(file);
  for (const auto& text : texts) rules.push_back(parse_rule(text));
  return rules;
}

EncodingKind encoding_or_throw(const std::string& text) {
  if (auto kind = parse_encoding(text)) return *kind;
  throw Error("unknown encoding '" + text + "' (expected bm, ep or ua)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Encode process event logs as labeled property graphs and check order rules"};
  app.require_subcommand(1);

  SourceOptions src;
  std::string out_format = "csv";
  std::string encoding = "ua";
  std::vector<std::string> encodings;
  std::vector<std::string> rule_texts;
  std::string rule_file;
  unsigned reps = 5;
  bool parallel = false;
  unsigned threads = 0;
  bool dump = false;
  bool emit_log = false;

  auto* load = app.add_subcommand("load", "Parse a log and print its summary");
  add_source_options(load, src);
  load->add_option("--out", out_format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
  load->add_flag("--emit-log", emit_log, "Print the canonical CSV form instead of the summary");

  auto* enc = app.add_subcommand("encode", "Build one encoding and print its loading report");
  add_source_options(enc, src);
  enc->add_option("--encoding", encoding, "bm|ep|ua")->capture_default_str();
  enc->add_option("--out", out_format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
  enc->add_flag("--dump", dump, "Print the graph, one node or edge per line");

  auto* chk = app.add_subcommand("check", "Check rules against one encoding");
  add_source_options(chk, src);
  chk->add_option("--encoding", encoding, "bm|ep|ua|oracle")->capture_default_str();
  chk->add_option("--rule", rule_texts, "Rule text, e.g. \"PRECEDES(B, E) TIME < 3h\"");
  chk->add_option("--rules", rule_file, "Rule file, one rule per line");
  chk->add_option("--out", out_format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
  chk->add_flag("--parallel", parallel, "Case-partitioned evaluation");
  chk->add_option("--threads", threads, "Worker threads for --parallel (0 = all cores)");

  auto* bench = app.add_subcommand("bench", "Time every rule against every encoding");
  add_source_options(bench, src);
  bench->add_option("--encoding", encodings, "bm|ep|ua (repeatable; default all)");
  bench->add_option("--rule", rule_texts, "Rule text");
  bench->add_option("--rules", rule_file, "Rule file");
  bench->add_option("--reps", reps, "Timed repetitions per query")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  bench->add_option("--out", out_format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
  bench->add_flag("--parallel", parallel, "Also report case-partitioned evaluation rows");
  bench->add_option("--threads", threads, "Worker threads for --parallel (0 = all cores)");

  CLI11_PARSE(app, argc, argv);

  try {
    std::string name;
    const EventLog log = load_source(src, name);
    const bool json = out_format == "json";

    if (*load) {
      if (emit_log) {
        write_event_log(std::cout, log);
        return 0;
      }
      const LogSummary s = log_summary(log);
      if (json) {
        std::cout << nlohmann::json{{"log", name},
                                    {"cases", s.num_cases},
                                    {"events", s.num_events},
                                    {"activities", s.num_activities},
                                    {"min_trace_length", s.min_trace_length},
                                    {"max_trace_length", s.max_trace_length},
                                    {"mean_trace_length", s.mean_trace_length}}
                         .dump()
                  << '\n';
      } else {
        std::cout << "cases,events,activities,min_len,max_len,mean_len\n"
                  << s.num_cases << ',' << s.num_events << ',' << s.num_activities << ','
                  << s.min_trace_length << ',' << s.max_trace_length << ','
                  << s.mean_trace_length << '\n';
      }
      return 0;
    }

    if (*enc) {
      const EncodedLog encoded = encode(log, encoding_or_throw(encoding));
      if (dump) {
        encoded.graph().dump(std::cout);
        return 0;
      }
      const LoadingReport report = loading_report(log, encoded);
      if (json) {
        std::cout << loading_json(report) << '\n';
      } else {
        write_loading_csv_header(std::cout);
        write_loading_csv(std::cout, report);
      }
      return 0;
    }

    const std::vector<Rule> rules = collect_rules(rule_texts, rule_file);
    if (rules.empty()) throw Error("no rules given (use --rule or --rules)");

    if (*chk) {
      std::vector<ViolationReport> reports;
      if (encoding == "oracle") {
        for (const auto& rule : rules) reports.push_back(oracle_check(log, rule));
      } else {
        const EncodedLog encoded = encode(log, encoding_or_throw(encoding));
        CheckOptions options;
        options.threads = parallel ? (threads > 0 ? threads : std::max(1u, std::thread::hardware_concurrency())) : 1;
        for (const auto& rule : rules) reports.push_back(check(encoded, rule, options));
      }
      if (json) {
        for (const auto& r : reports) std::cout << report_json(r) << '\n';
      } else {
        write_report_csv_header(std::cout);
        for (const auto& r : reports) write_report_csv(std::cout, r);
      }
      return 0;
    }

    BenchConfig config;
    config.log_name = name;
    config.rules = rules;
    config.repetitions = reps;
    config.parallel = parallel;
    config.threads = threads;
    if (!encodings.empty()) {
      config.encodings.clear();
      for (const auto& e : encodings) config.encodings.push_back(encoding_or_throw(e));
    }
    const auto rows = run_bench(log, config);
    if (json) {
      std::cout << bench_json(rows) << '\n';
    } else {
      write_bench_csv(std::cout, rows);
    }
    return 0;
  } catch (const EncodingDisagreement& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
