#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "evgraph/encoders.hpp"
#include "evgraph/report.hpp"
#include "evgraph/rules.hpp"

namespace evgraph::detail {

// Symbols an engine strategy needs, resolved once per check. A missing
// symbol means no element in the graph carries it.
struct QuerySymbols {
  explicit QuerySymbols(const Graph& g);

  std::optional<Symbol> event_to_case;
  std::optional<Symbol> directly_follows;
  std::optional<Symbol> id;
  std::optional<Symbol> activity;
  std::optional<Symbol> position;
  std::optional<Symbol> timestamp;
};

const std::string& case_id_of(const Graph& g, const QuerySymbols& syms, NodeId case_node);

// True when a larger elapsed time can never satisfy the window again, so a
// scan in increasing elapsed order may stop once `elapsed` exceeds delta.
inline bool bounded_above(const TimeWindow& w) {
  return w.delta && (w.theta == Theta::kLT || w.theta == Theta::kLE || w.theta == Theta::kEQ);
}

// Runs `work(begin, end, out)` over [0, count) split into `threads` chunks and
// concatenates the outputs in chunk order.
void run_partitioned(std::size_t count, unsigned threads,
                     const std::function<void(std::size_t, std::size_t, std::vector<Witness>&)>& work,
                     std::vector<Witness>& out);

std::vector<Witness> check_bm(const EncodedLog& encoded, const Rule& rule, unsigned threads);
// EP and UA share the per-case evaluation; they differ in how occurrences are
// fetched from the graph.
std::vector<Witness> check_positional(const EncodedLog& encoded, const Rule& rule,
                                      unsigned threads);

}  // namespace evgraph::detail
