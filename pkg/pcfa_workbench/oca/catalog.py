"""Concrete automata shipped with the workbench."""
from typing import Dict, Tuple

from pcfa_workbench.constants import OCA_BOUNDARY
from pcfa_workbench.errors import BadParamError
from pcfa_workbench.oca.models import OcaDef


def build_sample_oca() -> OcaDef:
    """Three-cell demo: c d d -> p1 r1 s1 -> p2 r2 s2 -> p3 r3 s3, s3 accepting.

    Only that trajectory is prescribed; every other pair goes to the sink z.
    """
    states = frozenset({"c", "d", "p1", "p2", "p3", "r1", "r2", "r3", "s1", "s2", "s3", "z"})
    delta: Dict[Tuple[str, str], str] = {
        (left, own): "z" for left in states | {OCA_BOUNDARY} for own in states
    }
    delta.update({
        (OCA_BOUNDARY, "c"): "p1", ("c", "d"): "r1", ("d", "d"): "s1",
        (OCA_BOUNDARY, "p1"): "p2", ("p1", "r1"): "r2", ("r1", "s1"): "s2",
        (OCA_BOUNDARY, "p2"): "p3", ("p2", "r2"): "r3", ("r2", "s2"): "s3",
    })
    return OcaDef(states=states, inputs=frozenset({"c", "d"}), accepting=frozenset({"s3"}), delta=delta)


def build_signal_oca() -> OcaDef:
    """A mark enters at the left boundary and moves one cell per step.

    Cell i is marked from time i on, so on a^n the rightmost cell accepts
    exactly at t = n.
    """
    states = frozenset({"a", "x"})
    delta = {
        (OCA_BOUNDARY, "a"): "x",
        ("a", "a"): "a",
        ("x", "a"): "x",
    }
    for left in states | {OCA_BOUNDARY}:
        delta[(left, "x")] = "x"
    return OcaDef(states=states, inputs=frozenset({"a"}), accepting=frozenset({"x"}), delta=delta)


def build_delay_oca(delay: int = 3) -> OcaDef:
    """Every cell counts its own age; the rightmost accepts at t = delay for any n."""
    if delay < 1:
        raise BadParamError("delay must be at least 1")
    ages = [f"d{j}" for j in range(1, delay + 1)]
    states = frozenset({"a", *ages})
    delta: Dict[Tuple[str, str], str] = {}
    for left in states | {OCA_BOUNDARY}:
        delta[(left, "a")] = ages[0]
        for j, age in enumerate(ages):
            delta[(left, age)] = ages[min(j + 1, delay - 1)]
    return OcaDef(states=states, inputs=frozenset({"a"}), accepting=frozenset({ages[-1]}), delta=delta)
