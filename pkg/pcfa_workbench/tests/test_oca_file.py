import pytest

from pcfa_workbench.errors import ParseError
from pcfa_workbench.oca import load_oca, oca_run, parse_oca, print_oca

pytestmark = pytest.mark.unit

SIGNAL = """\
# a mark walks right from the boundary
oca
states: a x
boundary: #
inputs: a
accepting: x
# , a -> x
a , a -> a
x , a -> x
# , x -> x
a , x -> x
x , x -> x
"""


def test_boundary_rules_are_not_comments(signal_oca):
    M = parse_oca(SIGNAL)
    assert M.delta[("#", "a")] == "x"
    assert M == signal_oca
    assert oca_run(M, "aaaa") == 4


@pytest.mark.parametrize("name", ["sample_oca", "signal_oca", "delay_oca"])
def test_round_trip(request, name):
    M = request.getfixturevalue(name)
    text = print_oca(M)
    assert text.splitlines()[0] == "oca"
    assert parse_oca(text) == M


def test_boundary_rules_print_first(signal_oca):
    rules = print_oca(signal_oca).splitlines()[5:]
    assert rules[:2] == ["# , a -> x", "# , x -> x"]


@pytest.mark.parametrize("text,line_no", [
    ("states: a\n", 1),
    ("# , a -> a\noca\n", 1),
    ("oca\nstates: a\ninputs: a\nfoo bar\n", 4),
    ("oca\nstates: a\ninputs: a\n# , a -> a\n# , a -> a\n", 5),
])
def test_parse_errors(text, line_no):
    with pytest.raises(ParseError) as info:
        parse_oca(text)
    assert info.value.line_no == line_no


def test_missing_inputs_line():
    with pytest.raises(ParseError) as info:
        parse_oca("oca\nstates: a\n")
    assert "inputs" in str(info.value)


def test_inconsistent_definition_becomes_parse_error():
    with pytest.raises(ParseError) as info:
        parse_oca("oca\nstates: a\ninputs: b\n", source="bad.oca")
    assert info.value.source == "bad.oca"


def test_load_oca(tmp_path, signal_oca):
    path = tmp_path / "signal.oca"
    path.write_text(SIGNAL, encoding="utf-8")
    assert load_oca(path) == signal_oca
    with pytest.raises(ParseError):
        load_oca(tmp_path / "absent.oca")
