#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "evgraph/bench.hpp"
#include "evgraph/encoders.hpp"
#include "evgraph/engine.hpp"
#include "evgraph/error.hpp"
#include "evgraph/event_log.hpp"
#include "evgraph/oracle.hpp"
#include "evgraph/rules.hpp"

namespace py = pybind11;
using namespace evgraph;

namespace {

ColumnConfig columns(const std::string& case_col, const std::string& activity_col,
                     const std::string& time_col, bool use_start_time) {
  ColumnConfig c;
  c.case_id = case_col;
  c.activity = activity_col;
  c.timestamp = time_col;
  c.prefer = use_start_time ? TimeSource::kStart : TimeSource::kComplete;
  return c;
}

py::dict event_dict(const EventRef& e) {
  py::dict d;
  d["activity"] = e.activity;
  d["position"] = e.position;
  d["timestamp"] = e.timestamp;
  return d;
}

}  // namespace

PYBIND11_MODULE(_evgraph, m) {
  m.doc() = "Event log graph encodings and order-rule checking";

  py::register_exception<Error>(m, "Error", PyExc_ValueError);

  py::enum_<EncodingKind>(m, "EncodingKind")
      .value("BM", EncodingKind::kBM)
      .value("EP", EncodingKind::kEP)
      .value("UA", EncodingKind::kUA);

  py::class_<LogSummary>(m, "LogSummary")
      .def_readonly("num_cases", &LogSummary::num_cases)
      .def_readonly("num_events", &LogSummary::num_events)
      .def_readonly("num_activities", &LogSummary::num_activities)
      .def_readonly("min_trace_length", &LogSummary::min_trace_length)
      .def_readonly("max_trace_length", &LogSummary::max_trace_length)
      .def_readonly("mean_trace_length", &LogSummary::mean_trace_length);

  py::class_<EventLog>(m, "EventLog")
      .def_property_readonly("cases", [](const EventLog& l) {
        return std::vector<std::string>(l.cases().begin(), l.cases().end());
      })
      .def_property_readonly("activities", [](const EventLog& l) {
        return std::vector<std::string>(l.activities().begin(), l.activities().end());
      })
      .def_property_readonly("num_events", &EventLog::num_events)
      .def("trace", [](const EventLog& l, const std::string& case_id) {
        const Trace* t = l.find(case_id);
        if (t == nullptr) throw py::key_error(case_id);
        std::vector<std::string> acts;
        for (const auto& e : t->events) acts.push_back(e.activity);
        return acts;
      })
      .def("to_csv", [](const EventLog& l) {
        std::ostringstream out;
        write_event_log(out, l);
        return out.str();
      });

  m.def("parse_event_log",
        [](const std::string& text, const std::string& case_col, const std::string& activity_col,
           const std::string& time_col, bool use_start_time) {
          return parse_event_log(std::string_view(text),
                                 columns(case_col, activity_col, time_col, use_start_time));
        },
        py::arg("text"), py::arg("case_col") = "case", py::arg("activity_col") = "activity",
        py::arg("time_col") = "timestamp", py::arg("use_start_time") = false);
  m.def("load_event_log",
        [](const std::string& path, const std::string& case_col, const std::string& activity_col,
           const std::string& time_col, bool use_start_time) {
          return load_event_log(path, columns(case_col, activity_col, time_col, use_start_time));
        },
        py::arg("path"), py::arg("case_col") = "case", py::arg("activity_col") = "activity",
        py::arg("time_col") = "timestamp", py::arg("use_start_time") = false);
  m.def("log_summary", &log_summary);
  m.def("gen_log",
        [](std::size_t cases, std::size_t min_length, std::size_t max_length,
           std::size_t activities, std::uint64_t seed) {
          return gen_log(GenParams{cases, min_length, max_length, activities, seed, std::nullopt});
        },
        py::arg("cases"), py::arg("min_length"), py::arg("max_length"), py::arg("activities"),
        py::arg("seed") = 1);

  py::class_<EncodedLog>(m, "EncodedLog")
      .def_property_readonly("kind", &EncodedLog::kind)
      .def_property_readonly("num_nodes", [](const EncodedLog& e) { return e.graph().num_nodes(); })
      .def_property_readonly("num_edges", [](const EncodedLog& e) { return e.graph().num_edges(); })
      .def_property_readonly("avg_degree",
                             [](const EncodedLog& e) { return e.graph().stats().avg_degree; })
      .def("dump", [](const EncodedLog& e) {
        std::ostringstream out;
        e.graph().dump(out);
        return out.str();
      });

  m.def("encode", &encode, py::arg("log"), py::arg("kind"));
  m.def("expected_sizes",
        [](std::int64_t c, std::int64_t e, std::int64_t a, EncodingKind kind) {
          const SizeForecast f = expected_sizes(c, e, a, kind);
          return py::make_tuple(f.nodes, f.edges);
        },
        py::arg("cases"), py::arg("events"), py::arg("activities"), py::arg("kind"));

  py::class_<Rule>(m, "Rule")
      .def_property_readonly("kind", [](const Rule& r) { return std::string(to_string(r.kind)); })
      .def_readonly("a", &Rule::a)
      .def_readonly("b", &Rule::b)
      .def_readonly("excluded", &Rule::excluded)
      .def_property_readonly("delta", [](const Rule& r) { return r.window.delta; })
      .def_property_readonly("theta",
                             [](const Rule& r) { return std::string(to_string(r.window.theta)); })
      .def("__eq__", [](const Rule& x, const Rule& y) { return x == y; })
      .def("__repr__", [](const Rule& r) { return "Rule(" + format_rule(r) + ")"; });

  m.def("parse_rule", &parse_rule);
  m.def("format_rule", &format_rule);
  m.def("theta_satisfied",
        [](const std::string& theta, std::int64_t elapsed, std::optional<std::int64_t> delta) {
          const Rule probe = parse_rule("RESPONSE(x, y) TIME " + theta + " 0s");
          return theta_satisfied(probe.window.theta, elapsed, delta);
        },
        py::arg("theta"), py::arg("elapsed"), py::arg("delta") = py::none());

  py::class_<ViolationReport>(m, "ViolationReport")
      .def_readonly("case_ids", &ViolationReport::case_ids)
      .def_property_readonly("evaluator",
                             [](const ViolationReport& r) { return std::string(to_string(r.evaluator)); })
      .def_property_readonly("elapsed_seconds",
                             [](const ViolationReport& r) { return r.elapsed.count(); })
      .def_property_readonly("violations",
                             [](const ViolationReport& r) {
                               py::list out;
                               for (const auto& w : r.violations) {
                                 py::dict d;
                                 d["case_id"] = w.case_id;
                                 d["trigger"] = event_dict(w.trigger);
                                 d["detail"] = w.detail ? py::object(event_dict(*w.detail))
                                                        : py::object(py::none());
                                 out.append(std::move(d));
                               }
                               return out;
                             })
      .def("to_json", &report_json);

  m.def("check",
        [](const EncodedLog& encoded, const Rule& rule, unsigned threads) {
          py::gil_scoped_release release;
          return check(encoded, rule, CheckOptions{threads});
        },
        py::arg("encoded"), py::arg("rule"), py::arg("threads") = 1);
  m.def("check",
        [](const EncodedLog& encoded, const std::string& text, unsigned threads) {
          const Rule rule = parse_rule(text);
          py::gil_scoped_release release;
          return check(encoded, rule, CheckOptions{threads});
        },
        py::arg("encoded"), py::arg("rule"), py::arg("threads") = 1);
  m.def("oracle_check", &oracle_check, py::arg("log"), py::arg("rule"));
  m.def("oracle_check",
        [](const EventLog& log, const std::string& text) { return oracle_check(log, parse_rule(text)); },
        py::arg("log"), py::arg("rule"));
}
