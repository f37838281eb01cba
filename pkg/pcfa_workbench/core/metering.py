"""Communication metering: counting query entries and empirical bound reports."""
import logging
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Union

import numpy as np

from pcfa_workbench.core.engine import decide
from pcfa_workbench.core.models import CommEvent, Configuration, RunResult
from pcfa_workbench.core.validator import ValidatedSystem
from pcfa_workbench.errors import BadParamError
from pcfa_workbench.utils.words import WordLike, render, tokenize

logger = logging.getLogger(__name__)

_BOUND_PATTERN = re.compile(r"^(log2|sqrt|linear|poly-log\((?P<r>[0-9.]+)\)|constant\((?P<c>[0-9./]+)\))$")


def comm_entries(
    source: Union[RunResult, Sequence[Configuration], Sequence[CommEvent]],
    query_states: Optional[Sequence[str]] = None,
) -> int:
    """Count entries into query states.

    Accepts a RunResult (recounted from its trace when kept and the query
    states are given, otherwise its comm_count), a configuration sequence
    together with the query states, or a list of communication events.
    Events only record answered requests; entries that end in a cyclic
    halt or a cutoff show up in traces and results but not in events.
    """
    if isinstance(source, RunResult):
        if source.trace is not None and query_states is not None:
            return comm_entries(source.trace, query_states)
        return source.comm_count
    items = list(source)
    if not items:
        return 0
    if isinstance(items[0], CommEvent):
        return len(items)
    if query_states is None:
        raise BadParamError("counting over configurations needs the query states")
    queries = frozenset(query_states)
    count = sum(1 for state in items[0].states if state in queries)
    for before, after in zip(items, items[1:]):
        count += sum(1 for old, new in zip(before.states, after.states) if new in queries and old not in queries)
    return count


@dataclass(frozen=True)
class BoundFunction:
    """A named growth function f(n) evaluated on word lengths."""
    name: str
    parameter: Optional[Fraction] = None

    @classmethod
    def parse(cls, text: str) -> "BoundFunction":
        match = _BOUND_PATTERN.match(text.strip())
        if not match:
            raise BadParamError(f"unknown bound {text!r}; use log2, sqrt, linear, poly-log(r) or constant(c)")
        if match.group("r") is not None:
            return cls("poly-log", Fraction(match.group("r")))
        if match.group("c") is not None:
            return cls("constant", Fraction(match.group("c")))
        return cls(match.group(1))

    def evaluate(self, lengths: Sequence[int]) -> np.ndarray:
        n = np.asarray(lengths, dtype=float)
        if self.name == "log2":
            return np.log2(np.maximum(n, 2.0))
        if self.name == "sqrt":
            return np.sqrt(n)
        if self.name == "linear":
            return n
        if self.name == "poly-log":
            return np.log2(np.maximum(n, 2.0)) ** float(self.parameter)
        if self.name == "constant":
            return np.full(n.shape, float(self.parameter))
        raise BadParamError(f"unknown bound {self.name!r}")

    def __str__(self) -> str:
        if self.parameter is None:
            return self.name
        return f"{self.name}({self.parameter})"


@dataclass
class BoundRow:
    word: str
    word_len: int
    comm_count: int
    bound: float
    ratio: float
    within: bool


@dataclass
class BoundReport:
    function: str
    scale: Fraction
    rows: List[BoundRow] = field(default_factory=list)
    skipped: List[Dict[str, Any]] = field(default_factory=list)

    @property
    def within_bound(self) -> bool:
        return all(row.within for row in self.rows)

    @property
    def max_ratio(self) -> float:
        return max((row.ratio for row in self.rows), default=0.0)


def check_comm_bound(
    system: ValidatedSystem,
    words: Sequence[WordLike],
    f: Union[str, BoundFunction],
    scale: Union[Fraction, int, float, str] = 1,
) -> BoundReport:
    """Compare comm_count against f(|w|)*scale for every accepted word."""
    function = BoundFunction.parse(f) if isinstance(f, str) else f
    scale = Fraction(scale)
    if scale <= 0:
        raise BadParamError("scale must be positive")
    report = BoundReport(function=str(function), scale=scale)

    accepted = []
    for word in words:
        tape = tokenize(word, system.alphabet)
        result = decide(system, tape)
        if not result.accepted:
            report.skipped.append({"word": render(tape), "verdict": result.verdict.value, "note": "not accepted, skipped"})
            continue
        accepted.append((tape, result.comm_count))

    if not accepted:
        return report

    lengths = [len(tape) for tape, _ in accepted]
    comms = np.asarray([count for _, count in accepted], dtype=float)
    bounds = function.evaluate(lengths) * float(scale)
    with np.errstate(divide="ignore", invalid="ignore"):
        ratios = np.where(bounds > 0, comms / bounds, np.where(comms > 0, np.inf, 0.0))

    for (tape, count), bound, ratio in zip(accepted, bounds, ratios):
        report.rows.append(BoundRow(
            word=render(tape),
            word_len=len(tape),
            comm_count=count,
            bound=float(bound),
            ratio=float(ratio),
            within=bool(ratio <= 1.0),
        ))
    logger.debug(f"[Metering] {len(report.rows)} rows under {report.function}, max ratio {report.max_ratio:.6f}")
    return report
