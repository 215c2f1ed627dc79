#pragma once

#include <span>
#include <vector>

#include "evgraph/error.hpp"
#include "evgraph/encoders.hpp"
#include "evgraph/report.hpp"
#include "evgraph/rules.hpp"

namespace evgraph {

struct CheckOptions {
  // Worker threads for case-partitioned evaluation; 1 runs inline.
  unsigned threads = 1;
};

// Evaluates the anti-pattern of `rule` over `encoded` with the strategy for
// its encoding:
//   BM  walks Directly_follows chains from every trigger event node;
//   EP  fetches event nodes per activity from the index and compares their
//       position/timestamp properties per case;
//   UA  joins the Event_to_case edges of the activity nodes per case.
// All strategies return the same violations.
ViolationReport check(const EncodedLog& encoded, const Rule& rule, const CheckOptions& options = {});

// One report per rule, in order. Rules run concurrently when
// options.threads > 1; each check itself then runs inline.
std::vector<ViolationReport> check_all(const EncodedLog& encoded, std::span<const Rule> rules,
                                       const CheckOptions& options = {});

}  // namespace evgraph
