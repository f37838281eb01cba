"""Tests for communication counting and bound reports"""
from fractions import Fraction

import numpy as np
import pytest

from pcfa_workbench.core import (
    BoundFunction,
    HaltReason,
    Verdict,
    check_comm_bound,
    comm_entries,
    decide,
    run,
    validate_system,
)
from pcfa_workbench.errors import BadParamError
from pcfa_workbench.gallery import EXPO, WBW, generate_member
from pcfa_workbench.tests.helpers import LAMBDA, component, system

pytestmark = pytest.mark.unit


def test_comm_entries_agree_across_inputs(expo):
    result = run(expo, generate_member(EXPO, 3), 10_000, keep_trace=True)
    assert result.comm_count == 4
    assert comm_entries(result) == 4
    assert comm_entries(result.trace, expo.query_states) == 4
    assert comm_entries(result.comm_events) == 4


def test_comm_entries_counts_unanswered_requests():
    """Two components asking each other enter query states but are never answered"""
    first = component("s", {("s", LAMBDA): "q2"})
    second = component("t", {("t", LAMBDA): "q1"})
    validated = validate_system(system(first, second, centralized=False))
    result = run(validated, "", 10, keep_trace=True)
    assert result.halt_reason is HaltReason.CYCLIC_QUERY
    assert result.comm_events == []
    assert result.comm_count == 2
    assert comm_entries(result) == 2
    assert comm_entries(result, validated.query_states) == 2


def test_comm_entries_at_cutoff_while_querying():
    master = component("s0", {("s0", LAMBDA): "q2", ("w1", LAMBDA): "acc"}, accepting=["acc"], extra=["q1"])
    worker = component("t0", {("t0", LAMBDA): "w1", ("w1", LAMBDA): "w1"})
    validated = validate_system(system(master, worker))
    result = run(validated, "", 1)
    assert result.verdict is Verdict.REJECT_CUTOFF
    assert result.final.states == ("q2", "w1")
    assert comm_entries(result) == result.comm_count == 1


def test_comm_entries_needs_query_states_for_configurations(expo):
    result = run(expo, "$abaa&", 100, keep_trace=True)
    with pytest.raises(BadParamError):
        comm_entries(result.trace)


def test_comm_entries_of_nothing():
    assert comm_entries([]) == 0


@pytest.mark.parametrize("text,name,parameter", [
    ("log2", "log2", None),
    ("sqrt", "sqrt", None),
    ("linear", "linear", None),
    ("poly-log(2)", "poly-log", Fraction(2)),
    ("constant(3/2)", "constant", Fraction(3, 2)),
])
def test_bound_parsing(text, name, parameter):
    function = BoundFunction.parse(text)
    assert function.name == name
    assert function.parameter == parameter


def test_unknown_bound():
    with pytest.raises(BadParamError):
        BoundFunction.parse("cubic")


def test_bound_values():
    lengths = [1, 4, 16]
    assert np.allclose(BoundFunction.parse("log2").evaluate(lengths), [1.0, 2.0, 4.0])
    assert np.allclose(BoundFunction.parse("sqrt").evaluate(lengths), [1.0, 2.0, 4.0])
    assert np.allclose(BoundFunction.parse("poly-log(2)").evaluate(lengths), [1.0, 4.0, 16.0])
    assert np.allclose(BoundFunction.parse("constant(5)").evaluate(lengths), [5.0, 5.0, 5.0])


def test_expo_within_log_bound(expo):
    """m + 1 communications stay below log2 of 2^(m+1) + m + 1"""
    words = [generate_member(EXPO, m) for m in range(1, 9)]
    report = check_comm_bound(expo, words, "log2")
    assert len(report.rows) == 8
    assert report.within_bound
    assert report.max_ratio <= 1.0
    for m, row in enumerate(report.rows, start=1):
        assert row.comm_count == m + 1
        assert row.word_len == 2 ** (m + 1) + m + 1


def test_wbw_exceeds_constant_bound(wbw):
    words = [generate_member(WBW, m) for m in range(1, 6)]
    report = check_comm_bound(wbw, words, "constant(2)")
    assert not report.within_bound
    assert report.rows[0].within
    assert not report.rows[-1].within
    assert report.rows[-1].ratio == pytest.approx(6 / 2)


def test_scale_applies(wbw):
    report = check_comm_bound(wbw, ["01b01"], "linear", scale="1/5")
    assert report.rows[0].bound == pytest.approx(1.0)
    assert report.rows[0].ratio == pytest.approx(3.0)


def test_rejected_words_are_skipped(expo):
    report = check_comm_bound(expo, ["$abaa&", "$aab&"], "log2")
    assert len(report.rows) == 1
    assert report.skipped[0]["word"] == "$aab&"
    assert "skipped" in report.skipped[0]["note"]
    assert decide(expo, "$aab&").verdict.value == report.skipped[0]["verdict"]


def test_scale_must_be_positive(expo):
    with pytest.raises(BadParamError):
        check_comm_bound(expo, ["$abaa&"], "log2", scale=0)
