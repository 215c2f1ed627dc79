"""Labeled property graph encodings of event logs and order-rule checking."""

from ._evgraph import (  # noqa: F401
    EncodedLog,
    Error,
    EncodingKind,
    EventLog,
    LogSummary,
    Rule,
    ViolationReport,
    check,
    encode,
    expected_sizes,
    format_rule,
    gen_log,
    load_event_log,
    log_summary,
    oracle_check,
    parse_event_log,
    parse_rule,
    theta_satisfied,
)

__all__ = [name for name in dir() if not name.startswith("_")]
