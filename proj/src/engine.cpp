#include "evgraph/engine.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <thread>

#include "engine_internal.hpp"

namespace evgraph {

namespace detail {

QuerySymbols::QuerySymbols(const Graph& g)
    : event_to_case(g.symbol(labels::kEventToCase)),
      directly_follows(g.symbol(labels::kDirectlyFollows)),
      id(g.symbol(keys::kId)),
      activity(g.symbol(keys::kActivity)),
      position(g.symbol(keys::kPosition)),
      timestamp(g.symbol(keys::kTimestamp)) {}

const std::string& case_id_of(const Graph& g, const QuerySymbols& syms, NodeId case_node) {
  return g.property(case_node, *syms.id)->as_string();
}

void run_partitioned(std::size_t count, unsigned threads,
                     const std::function<void(std::size_t, std::size_t, std::vector<Witness>&)>& work,
                     std::vector<Witness>& out) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (threads == 1) {
    work(0, count, out);
    return;
  }
  std::vector<std::vector<Witness>> parts(threads);
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> workers;
  const std::size_t chunk = (count + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::size_t begin = std::min(count, t * chunk);
    const std::size_t end = std::min(count, begin + chunk);
    workers.emplace_back([&, t, begin, end] {
      try {
        work(begin, end, parts[t]);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& w : workers) w.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
}

}  // namespace detail

ViolationReport check(const EncodedLog& encoded, const Rule& rule, const CheckOptions& options) {
  validate(rule);
  const auto start = std::chrono::steady_clock::now();
  ViolationReport report;
  report.rule = rule;
  report.evaluator = evaluator_for(encoded.kind());
  const unsigned threads = std::max(1u, options.threads);
  report.violations = encoded.kind() == EncodingKind::kBM
                          ? detail::check_bm(encoded, rule, threads)
                          : detail::check_positional(encoded, rule, threads);
  report.finalize();
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

std::vector<ViolationReport> check_all(const EncodedLog& encoded, std::span<const Rule> rules,
                                       const CheckOptions& options) {
  std::vector<ViolationReport> reports(rules.size());
  const unsigned threads = std::max(1u, std::min<unsigned>(options.threads,
                                                           static_cast<unsigned>(rules.size())));
  if (threads <= 1) {
    for (std::size_t i = 0; i < rules.size(); ++i) reports[i] = check(encoded, rules[i]);
    return reports;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(rules.size());
  std::vector<std::thread> workers;
  for (unsigned t = 0; t < threads; ++t) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < rules.size(); i = next++) {
        try {
          reports[i] = check(encoded, rules[i]);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  }
  for (auto& w : workers) w.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return reports;
}

}  // namespace evgraph
