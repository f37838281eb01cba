"""Tests for the system file format"""
import pytest

from pcfa_workbench.core import CommunicationMode, load_system, parse_system, print_system, validate_system
from pcfa_workbench.errors import ParseError
from pcfa_workbench.gallery import gallery_registry

pytestmark = pytest.mark.unit

SMALL = """\
# master waits for one symbol from the worker
pcfa 2 mode=nonreturning centralized=true
alphabet: a b
queries: q1 q2
component 1
initial s0
accepting acc
s0 , a -> q2
s_b , END -> acc
component 2
initial t0
t0 , a -> t1
t1 , b -> s_b
"""


@pytest.mark.parametrize("name", [entry.name for entry in gallery_registry.entries("system")])
def test_gallery_round_trip(name):
    definition = gallery_registry.build(name)
    assert parse_system(print_system(definition)) == definition


def test_parse_small_system():
    definition = parse_system(SMALL)
    assert definition.k == 2
    assert definition.mode is CommunicationMode.NON_RETURNING
    assert definition.input_alphabet == frozenset({"a", "b"})
    master, worker = definition.components
    # component 1 receives every query state when no states line is given
    assert master.states == frozenset({"s0", "acc", "q2", "s_b", "q1"})
    assert worker.states == frozenset({"t0", "t1", "s_b"})
    assert master.transitions[("s_b", "END")] == "acc"
    validate_system(definition)


def test_states_line_declares_the_full_set():
    text = SMALL.replace("initial t0", "states t0 t1 s_b idle\ninitial t0")
    worker = parse_system(text).components[1]
    assert "idle" in worker.states


def test_symbols_may_look_like_pairs():
    text = """\
pcfa 1 mode=returning centralized=true
alphabet: [#,c'] [c',d']
queries: q1
component 1
initial s0
s0 , [#,c'] -> s1
"""
    definition = parse_system(text)
    assert ("s0", "[#,c']") in definition.components[0].transitions


def test_states_may_start_with_hash():
    text = SMALL.replace("t1 , b -> s_b", "# t1 waits for b\nt1 , b -> #t2\n#t2 , LAMBDA -> s_b")
    definition = parse_system(text)
    worker = definition.components[1]
    assert worker.transitions[("#t2", "LAMBDA")] == "s_b"
    assert len(worker.transitions) == 3
    assert parse_system(print_system(definition)) == definition


@pytest.mark.parametrize("text,line_no", [
    ("pcfa x\n", 1),
    ("pcfa 1 mode=sideways\n", 1),
    ("pcfa 1\nalphabet: a\nqueries: q1\ns0 , a -> s1\n", 4),
    ("pcfa 1\nalphabet: a\nqueries: q1\ncomponent 2\n", 4),
    ("pcfa 1\nalphabet: a\nqueries: q1\ncomponent 1\ninitial s0\ns0 , a -> s1\ns0 , a -> s2\n", 7),
    ("pcfa 1\nalphabet: a\nqueries: q1\ncomponent 1\ninitial s0\nwhatever\n", 6),
])
def test_parse_errors_carry_line_numbers(text, line_no):
    with pytest.raises(ParseError) as info:
        parse_system(text, source="bad.pcfa")
    assert info.value.line_no == line_no
    assert str(info.value).startswith(f"bad.pcfa:{line_no}:")


def test_missing_component():
    with pytest.raises(ParseError) as info:
        parse_system("pcfa 2\nalphabet: a\nqueries: q1 q2\ncomponent 1\ninitial s0\n")
    assert "2 components" in str(info.value)


def test_load_system(tmp_path):
    path = tmp_path / "small.pcfa"
    path.write_text(SMALL, encoding="utf-8")
    assert load_system(path) == parse_system(SMALL)


def test_load_missing_file(tmp_path):
    with pytest.raises(ParseError):
        load_system(tmp_path / "absent.pcfa")
