import logging
from dataclasses import dataclass
from typing import Iterator, Optional, Tuple

from pcfa_workbench.configs import GlobalConfig, app_configs
from pcfa_workbench.errors import BadParamError, DeltaUndefinedError, NotComputedError
from pcfa_workbench.oca.models import OcaConfiguration, OcaDef
from pcfa_workbench.utils.words import Word, WordLike, tokenize

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TimeComputation:
    value: int
    strict: bool


def oca_word(M: OcaDef, word: WordLike) -> Word:
    """Tokenize an OCA input word and check it is a non-empty word over T."""
    tape = tokenize(word, M.inputs)
    if not tape:
        raise BadParamError("OCA inputs need at least one cell")
    for symbol in tape:
        if symbol not in M.inputs:
            raise BadParamError(f"{symbol!r} is not an input symbol")
    return tape


def oca_step(M: OcaDef, c: OcaConfiguration) -> OcaConfiguration:
    """All cells update at once from (left neighbour, own state)."""
    delta = M.delta
    cells = c.cells
    nxt = []
    left = M.boundary
    for i, own in enumerate(cells):
        target = delta.get((left, own))
        if target is None:
            raise DeltaUndefinedError(left, own, cell=i + 1, t=c.t)
        nxt.append(target)
        left = own
    return OcaConfiguration(cells=tuple(nxt), t=c.t + 1)


def oca_iter(M: OcaDef, word: WordLike) -> Iterator[OcaConfiguration]:
    """Yield c_0, c_1, ... forever; the caller bounds it."""
    c = OcaConfiguration(cells=oca_word(M, word), t=0)
    while True:
        yield c
        c = oca_step(M, c)


def default_horizon(n: int, max_t: Optional[int], config: Optional[GlobalConfig]) -> int:
    if max_t is not None:
        return max_t
    return (config or app_configs).oca_horizon(n)


def oca_run(M: OcaDef, word: WordLike, max_t: Optional[int] = None, config: Optional[GlobalConfig] = None) -> Optional[int]:
    """Least t >= 1 at which the rightmost cell is accepting, or None."""
    tape = oca_word(M, word)
    horizon = default_horizon(len(tape), max_t, config)
    for c in oca_iter(M, tape):
        if c.t >= 1 and c.rightmost in M.accepting:
            return c.t
        if c.t >= horizon:
            return None
    return None


def time_compute(
    M: OcaDef,
    n: int,
    max_t: Optional[int] = None,
    symbol: Optional[str] = None,
    config: Optional[GlobalConfig] = None,
) -> TimeComputation:
    """Acceptance time of the unary input of length n.

    strict also requires the input configuration itself to be rejecting.
    """
    if n < 1:
        raise BadParamError("n must be at least 1")
    symbol = symbol or M.unary_symbol
    horizon = default_horizon(n, max_t, config)
    value = oca_run(M, (symbol,) * n, max_t=horizon)
    if value is None:
        raise NotComputedError(n, horizon)
    return TimeComputation(value=value, strict=symbol not in M.accepting)


def check_closure(M: OcaDef, word: WordLike, horizon: Optional[int] = None) -> Optional[Tuple[str, str]]:
    """First undefined (left, own) pair met within the horizon, if any."""
    tape = oca_word(M, word)
    horizon = default_horizon(len(tape), horizon, None)
    try:
        for c in oca_iter(M, tape):
            if c.t >= horizon:
                return None
    except DeltaUndefinedError as e:
        logger.debug(f"[Simulator] closure gap {e.pair} at t={e.t}")
        return e.pair
    return None
