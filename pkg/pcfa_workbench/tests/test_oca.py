import pytest

from pcfa_workbench.errors import BadParamError, DeltaUndefinedError, NotComputedError, OcaDefinitionError
from pcfa_workbench.oca import OcaConfiguration, OcaDef, check_closure, oca_run, oca_step, time_compute
from pcfa_workbench.oca.catalog import build_delay_oca
from pcfa_workbench.oca.simulator import oca_iter

pytestmark = pytest.mark.unit


def _cells(M, word, t):
    for c in oca_iter(M, word):
        if c.t == t:
            return c.cells


def test_sample_trajectory(sample_oca):
    assert _cells(sample_oca, "cdd", 0) == ("c", "d", "d")
    assert _cells(sample_oca, "cdd", 1) == ("p1", "r1", "s1")
    assert _cells(sample_oca, "cdd", 2) == ("p2", "r2", "s2")
    assert _cells(sample_oca, "cdd", 3) == ("p3", "r3", "s3")
    assert oca_run(sample_oca, "cdd") == 3


def test_sample_off_trajectory_goes_to_sink(sample_oca):
    assert _cells(sample_oca, "dcc", 1) == ("z", "z", "z")
    assert oca_run(sample_oca, "dcc") is None


def test_single_cell_sees_only_the_boundary():
    M = OcaDef(
        states=frozenset({"a", "b"}),
        inputs=frozenset({"a"}),
        accepting=frozenset({"b"}),
        delta={("#", "a"): "b", ("#", "b"): "b"},
    )
    assert oca_step(M, OcaConfiguration(cells=("a",))) == OcaConfiguration(cells=("b",), t=1)
    assert oca_run(M, "a") == 1


def test_identity_rule_never_accepts():
    states = frozenset({"a", "f"})
    delta = {(left, own): own for left in states | {"#"} for own in states}
    M = OcaDef(states=states, inputs=frozenset({"a"}), accepting=frozenset({"f"}), delta=delta)
    assert oca_run(M, "aaa", max_t=50) is None


def test_acceptance_at_time_zero_does_not_count():
    states = frozenset({"a"})
    delta = {("#", "a"): "a", ("a", "a"): "a"}
    M = OcaDef(states=states, inputs=states, accepting=states, delta=delta)
    assert oca_run(M, "aa") == 1
    result = time_compute(M, 2)
    assert result.value == 1
    assert not result.strict


@pytest.mark.parametrize("n", [1, 2, 3, 7, 20, 50])
def test_signal_computes_identity(signal_oca, n):
    result = time_compute(signal_oca, n)
    assert result.value == n
    assert result.strict


@pytest.mark.parametrize("n", [1, 4, 9])
def test_delay_is_constant(delay_oca, n):
    assert time_compute(delay_oca, n).value == 3


def test_delay_parameter():
    assert time_compute(build_delay_oca(5), 2).value == 5
    with pytest.raises(BadParamError):
        build_delay_oca(0)


def test_empty_accepting_set_is_not_computed():
    states = frozenset({"a"})
    M = OcaDef(states=states, inputs=states, delta={("#", "a"): "a", ("a", "a"): "a"})
    with pytest.raises(NotComputedError) as info:
        time_compute(M, 3, max_t=10)
    assert info.value.max_t == 10


def test_time_compute_rejects_bad_n(signal_oca):
    with pytest.raises(BadParamError):
        time_compute(signal_oca, 0)


def test_undefined_pair_is_reported():
    M = OcaDef(
        states=frozenset({"a", "b"}),
        inputs=frozenset({"a"}),
        accepting=frozenset({"b"}),
        delta={("#", "a"): "b", ("#", "b"): "b"},
    )
    with pytest.raises(DeltaUndefinedError) as info:
        oca_run(M, "aa")
    assert info.value.pair == ("a", "a")
    assert info.value.cell == 2
    assert check_closure(M, "aa") == ("a", "a")
    assert check_closure(M, "a") is None


def test_catalog_automata_are_closed(sample_oca, signal_oca, delay_oca):
    assert check_closure(sample_oca, "cdd") is None
    assert check_closure(signal_oca, "aaaa") is None
    assert check_closure(delay_oca, "aa") is None


@pytest.mark.parametrize("word", ["", "ab", "x"])
def test_bad_input_words(signal_oca, word):
    with pytest.raises(BadParamError):
        oca_run(signal_oca, word)


@pytest.mark.parametrize("kwargs", [
    dict(states=frozenset({"a"}), inputs=frozenset()),
    dict(states=frozenset({"a"}), inputs=frozenset({"b"})),
    dict(states=frozenset({"a"}), inputs=frozenset({"a"}), accepting=frozenset({"f"})),
    dict(states=frozenset({"a", "#"}), inputs=frozenset({"a"})),
    dict(states=frozenset({"a", "p,q"}), inputs=frozenset({"a"})),
    dict(states=frozenset({"a"}), inputs=frozenset({"a"}), delta={("x", "a"): "a"}),
])
def test_definition_errors(kwargs):
    with pytest.raises(OcaDefinitionError):
        OcaDef(**kwargs)


def test_unary_symbol(sample_oca, signal_oca):
    assert signal_oca.unary_symbol == "a"
    assert sample_oca.unary_symbol == "c"
