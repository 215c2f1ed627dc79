import os
import pathlib

import pytest

import evgraph

DATA = pathlib.Path(os.environ.get("EVGRAPH_TEST_DATA", pathlib.Path(__file__).parent.parent / "data"))
SAMPLE = DATA / "sample_log.csv"


@pytest.fixture(scope="module")
def log():
    return evgraph.load_event_log(str(SAMPLE))


def test_sample_log_shape(log):
    assert log.cases == ["1", "2", "3"]
    assert log.num_events == 13
    assert log.activities == ["A", "B", "C", "D", "E"]
    assert log.trace("3") == ["A", "E", "C", "D", "E"]
    assert evgraph.load_event_log(str(SAMPLE), use_start_time=True).trace("3") == ["A", "E", "C", "E", "D"]


def test_encoding_sizes(log):
    sizes = {k: evgraph.encode(log, k) for k in (evgraph.EncodingKind.BM, evgraph.EncodingKind.EP, evgraph.EncodingKind.UA)}
    assert [(e.num_nodes, e.num_edges) for e in sizes.values()] == [(16, 23), (16, 13), (8, 13)]
    assert evgraph.expected_sizes(13087, 164510, 24, evgraph.EncodingKind.UA) == (13111, 164510)


@pytest.mark.parametrize(
    "rule, expected",
    [
        ("PRECEDES(B, E)", ["2", "3"]),
        ("PRECEDES(B, E) TIME <= 200000s", ["1", "2", "3"]),
        ("RESPONSE(A, E)", []),
        ("EXCLUDE(A, D, [E])", ["1", "2", "3"]),
    ],
)
def test_rules_agree_across_encodings(log, rule, expected):
    for kind in (evgraph.EncodingKind.BM, evgraph.EncodingKind.EP, evgraph.EncodingKind.UA):
        report = evgraph.check(evgraph.encode(log, kind), rule)
        assert report.case_ids == expected
        assert report.evaluator == kind.name
    assert evgraph.oracle_check(log, rule).case_ids == expected


def test_witness_details(log):
    report = evgraph.check(evgraph.encode(log, evgraph.EncodingKind.UA), evgraph.parse_rule("EXCLUDE(A, D, [E])"))
    first = report.violations[0]
    assert first["case_id"] == "1"
    assert first["trigger"] == {"activity": "A", "position": 1, "timestamp": 1612373652}
    assert first["detail"]["activity"] == "E"
    assert '"case_ids"' in report.to_json()


def test_rule_round_trip_and_theta():
    rule = evgraph.parse_rule("RESPONSE(A, B) TIME < 3h")
    assert (rule.kind, rule.delta, rule.theta) == ("RESPONSE", 10800, "<")
    assert evgraph.format_rule(rule) == "RESPONSE(A, B) TIME < 10800s"
    assert evgraph.parse_rule(evgraph.format_rule(rule)) == rule
    assert evgraph.theta_satisfied("<=", 999999)
    assert not evgraph.theta_satisfied(">", 999999)
    assert evgraph.theta_satisfied("=", 10, 10)


def test_errors_are_value_errors(log):
    with pytest.raises(evgraph.Error, match="column"):
        evgraph.parse_rule("FOLLOWS(A, B)")
    with pytest.raises(ValueError, match="line 2"):
        evgraph.parse_event_log("case,activity,timestamp\n1,A,soon\n")
    with pytest.raises(KeyError):
        log.trace("nope")


def test_generated_log_and_threads():
    generated = evgraph.gen_log(100, 10, 10, 10, seed=3)
    bm = evgraph.encode(generated, evgraph.EncodingKind.BM)
    assert (bm.num_nodes, bm.num_edges) == (1100, 1900)
    serial = evgraph.check(bm, "PRECEDES(a0, a9) TIME < 2d")
    parallel = evgraph.check(bm, "PRECEDES(a0, a9) TIME < 2d", threads=4)
    assert serial.case_ids == parallel.case_ids
    assert evgraph.log_summary(generated).mean_trace_length == 10.0
