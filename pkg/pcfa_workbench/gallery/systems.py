"""Centralized returning witness systems.

Component 1 is the master. Each master's state set holds every query
state so that the number of query states equals the number of
components; only the reachable ones are ever entered.
"""
from typing import Iterable, Sequence, Tuple

from pcfa_workbench.constants import Label, LanguageToken
from pcfa_workbench.core.models import CommunicationMode, ComponentDef, SystemDef
from pcfa_workbench.gallery.registry import register_system

LAMBDA = Label.LAMBDA
END = Label.END

BITS = ("0", "1")

Rule = Tuple[str, str, str]


def _component(initial: str, rules: Sequence[Rule], accepting: Iterable[str] = (), extra_states: Iterable[str] = ()) -> ComponentDef:
    transitions = {}
    states = {initial, *accepting, *extra_states}
    for source, label, target in rules:
        if (source, label) in transitions:
            raise ValueError(f"duplicate rule for ({source}, {label})")
        transitions[(source, label)] = target
        states.update((source, target))
    return ComponentDef(
        states=frozenset(states),
        transitions=transitions,
        initial=initial,
        accepting=frozenset(accepting),
    )


def _system(alphabet: Iterable[str], *components: ComponentDef) -> SystemDef:
    return SystemDef(
        input_alphabet=frozenset(alphabet),
        components=components,
        query_states=tuple(f"q{i}" for i in range(1, len(components) + 1)),
        mode=CommunicationMode.RETURNING,
        centralized=True,
    )


def _bit_rules(source: str, target_of) -> Tuple[Rule, ...]:
    return tuple((source, bit, target_of(bit)) for bit in BITS)


# A_2 of the doubling systems: measures the first block, then every next block
_DOUBLING_WORKER: Tuple[Rule, ...] = (
    ("s0_2", "$", "s1_2"),
    ("s1_2", "a", "s2_2"),
    ("s2_2", "b", "s3_2"),
    ("s3_2", "a", "s3_2"),
    ("s3_2", "b", "s_b"),
    ("s3_2", "&", "s_&"),
    ("s0_2", "a", "s3_2"),
    ("s0_2", END, "s_END"),
    ("s_END", LAMBDA, "s_END"),
)


@register_system("expo", "2 components, O(log n) communications: $ a^1 b a^2 b ... b a^(2^m) &", LanguageToken.EXPO)
def build_expo(as_printed: bool = False) -> SystemDef:
    """Doubling blocks checked by a master running at half speed.

    The printed master skips the last block in s_& and never hears from
    A_2 again. The default asks once more right after s_& arrives: A_2
    has just been reset behind the '&' and answers s_END only when that
    '&' closed the word. Members then use m+1 communications.
    """
    master_rules = [
        ("s0_1", "$", "s1_1"),
        ("s1_1", LAMBDA, "s2_1"),
        ("s2_1", LAMBDA, "s3_1"),
        ("s3_1", "a", "s4_1"),
        ("s4_1", LAMBDA, "s3_1"),
        ("s3_1", "b", "q2"),
        ("s_b", "a", "s4_1"),
    ]
    if as_printed:
        master_rules += [("s_&", "a", "s_&"), ("s_&", "&", "s5_1")]
    else:
        master_rules += [("s_&", LAMBDA, "q2"), ("s_END", "a", "s_END"), ("s_END", "&", "s5_1")]
    master_rules.append(("s5_1", END, "accept"))
    master = _component("s0_1", master_rules, accepting=["accept"], extra_states=["q1", "q2"])
    worker = _component("s0_2", _DOUBLING_WORKER)
    return _system({"$", "a", "b", "&"}, master, worker)


register_system(
    "expo-as-printed",
    "expo with the final handshake left out (m communications on members)",
    LanguageToken.EXPO,
)(lambda: build_expo(as_printed=True))


@register_system("poly", "2 components, O(sqrt n) communications: $ a^1 b a^3 b ... b a^(2m+1) &", LanguageToken.POLY)
def build_poly() -> SystemDef:
    """Blocks growing by two.

    Master and A_2 both read at full speed; the master idles two extra
    ticks per round, so A_2 always finishes the following block exactly
    when the master finishes the current one. The closing handshake is
    the one of expo; the single-block word $a& is answered with s_a0.
    Members take m+1 communications.
    """
    master = _component(
        "s0_1",
        [
            ("s0_1", "$", "s1_1"),
            ("s1_1", LAMBDA, "s2_1"),
            ("s2_1", LAMBDA, "s_b"),
            ("s_b", LAMBDA, "s3_1"),
            ("s3_1", LAMBDA, "s4_1"),
            ("s4_1", "a", "s5_1"),
            ("s5_1", "a", "s5_1"),
            ("s5_1", "b", "q2"),
            ("s5_1", "&", "q2"),
            ("s_a0", END, "accept"),
            ("s_&", LAMBDA, "q2"),
            ("s_END", "a", "s_END"),
            ("s_END", "&", "s6_1"),
            ("s6_1", END, "accept"),
        ],
        accepting=["accept"],
        extra_states=["q1", "q2"],
    )
    worker = _component("s0_2", _DOUBLING_WORKER + (("s2_2", "&", "s_a0"), ("s_a0", LAMBDA, "s_a0")))
    return _system({"$", "a", "b", "&"}, master, worker)


@register_system("wbw", "2 components, O(n) communications: w b w", LanguageToken.WBW)
def build_wbw() -> SystemDef:
    """The master walks to b; A_2 reads one symbol per reset and holds it."""
    master = _component(
        "s0_1",
        [
            *_bit_rules("s0_1", lambda bit: "s1_1"),
            *_bit_rules("s1_1", lambda bit: "s1_1"),
            ("s1_1", "b", "q2"),
            ("r_0", "0", "q2"),
            ("r_1", "1", "q2"),
            ("r_b", END, "accept"),
        ],
        accepting=["accept"],
        extra_states=["q1"],
    )
    worker = _component(
        "s0_2",
        [
            *_bit_rules("s0_2", lambda bit: f"r_{bit}"),
            ("s0_2", "b", "r_b"),
            ("r_0", LAMBDA, "r_0"),
            ("r_1", LAMBDA, "r_1"),
            ("r_b", LAMBDA, "r_b"),
        ],
    )
    return _system(BITS + ("b",), master, worker)


# A_3 of the word-copy systems: delivers w_1, w_2, ... one per reset, then b
_LETTER_SOURCE: Tuple[Rule, ...] = (
    ("s0_3", "$", "s1_3"),
    *_bit_rules("s1_3", lambda bit: f"s_{bit}"),
    *_bit_rules("s0_3", lambda bit: f"s_{bit}"),
    ("s0_3", "b", "s_b"),
    ("s0_3", "a", "s_a"),
    ("s_0", LAMBDA, "s_0"),
    ("s_1", LAMBDA, "s_1"),
    ("s_b", LAMBDA, "s_b"),
    ("s_a", LAMBDA, "s_a"),
)


def _block_checker(as_printed: bool = False) -> Tuple[Rule, ...]:
    # A_2 of the word-copy systems: compares a block with the next one and checks w_i w_i
    rules = [
        ("s0_2", "$", "s1_2"),
        *_bit_rules("s1_2", lambda bit: "s1_2"),
        ("s1_2", "b", "s2_2"),
        ("s2_2", "a", "s3_2"),
        *_bit_rules("s3_2", lambda bit: f"s4_2^{bit}"),
        *((f"s4_2^{bit}", bit, "s5_2") for bit in BITS),
        ("s5_2", "a", "s5_2"),
        *_bit_rules("s5_2", lambda bit: f"s6_2^{bit}"),
        *((f"s6_2^{bit}", bit, "s_ww") for bit in BITS),
        ("s0_2", "a", "s5_2"),
        ("s0_2", "&", "s_&"),
        ("s_&", LAMBDA, "s_&"),
        ("s0_2", END, "s_END"),
        ("s_END", LAMBDA, "s_END"),
    ]
    if not as_printed:
        # m = 1: the first block is followed directly by '&'
        rules.append(("s5_2", "&", "s_&"))
    return tuple(rules)


@register_system(
    "expo-wbw",
    "3 components, O(log n) communications: $ w b a^(2^0) w1 w1 ... a^(2^(m-1)) wm wm &",
    LanguageToken.EXPO_WBW,
)
def build_expo_wbw(as_printed: bool = False) -> SystemDef:
    """Doubling blocks interleaved with the letters of w.

    The printed A_2 has no move on '&' after the first block, which
    rejects every member with m = 1; the default adds that single move.
    """
    master = _component(
        "s0_1",
        [
            ("s0_1", "$", "s1_1"),
            *_bit_rules("s1_1", lambda bit: "s1_1"),
            ("s1_1", "b", "s2_1"),
            ("s2_1", LAMBDA, "s3_1"),
            ("s3_1", LAMBDA, "s4_1"),
            ("s4_1", LAMBDA, "s5_1"),
            ("s5_1", "a", "s6_1"),
            ("s6_1", LAMBDA, "s5_1"),
            *_bit_rules("s5_1", lambda bit: "q3"),
            ("s_0", "0", "q2"),
            ("s_1", "1", "q2"),
            ("s_ww", "a", "s6_1"),
            ("s_&", "&", "q3"),
            ("s_b", END, "accept"),
        ],
        accepting=["accept"],
        extra_states=["q1", "q2", "q3"],
    )
    checker = _component("s0_2", _block_checker(as_printed))
    source = _component("s0_3", _LETTER_SOURCE)
    return _system({"$", "0", "1", "a", "b", "&"}, master, checker, source)


register_system(
    "expo-wbw-as-printed",
    "expo-wbw without the move on '&' after the first block (rejects m = 1)",
    LanguageToken.EXPO_WBW,
)(lambda: build_expo_wbw(as_printed=True))


@register_system(
    "poly-wbw",
    "3 components, O(sqrt n) communications: $ w b a^1 w1 w1 a^3 w2 w2 ... a^(2m-1) wm wm &",
    LanguageToken.POLY_WBW,
)
def build_poly_wbw() -> SystemDef:
    """Blocks growing by two interleaved with the letters of w.

    A_2 and A_3 are those of expo-wbw; the master reads at full speed and
    idles two ticks per round. Members take 2m+1 communications.
    """
    master = _component(
        "s0_1",
        [
            ("s0_1", "$", "s1_1"),
            *_bit_rules("s1_1", lambda bit: "s1_1"),
            ("s1_1", "b", "s2_1"),
            ("s2_1", LAMBDA, "s3_1"),
            ("s3_1", LAMBDA, "s4_1"),
            ("s4_1", LAMBDA, "s5_1"),
            ("s5_1", LAMBDA, "s6_1"),
            ("s6_1", LAMBDA, "s7_1"),
            ("s7_1", "a", "s8_1"),
            ("s8_1", "a", "s8_1"),
            *_bit_rules("s8_1", lambda bit: "q3"),
            ("s_ww", LAMBDA, "s6_1"),
            ("s_0", "0", "q2"),
            ("s_1", "1", "q2"),
            ("s_&", "&", "q3"),
            ("s_b", END, "accept"),
        ],
        accepting=["accept"],
        extra_states=["q1", "q2", "q3"],
    )
    checker = _component("s0_2", _block_checker())
    source = _component("s0_3", _LETTER_SOURCE)
    return _system({"$", "0", "1", "a", "b", "&"}, master, checker, source)
