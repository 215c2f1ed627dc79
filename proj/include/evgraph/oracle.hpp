#pragma once

#include "evgraph/error.hpp"
#include "evgraph/event_log.hpp"
#include "evgraph/report.hpp"
#include "evgraph/rules.hpp"

namespace evgraph {

// Reference evaluation by exhaustive enumeration over every trace: pairs of
// events for Response/Precedes, triples for Exclude. No graph, no indexes.
ViolationReport oracle_check(const EventLog& log, const Rule& rule);

}  // namespace evgraph
