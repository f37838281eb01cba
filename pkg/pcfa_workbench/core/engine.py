"""Step semantics of deterministic PCFA systems.

A configuration is advanced by exactly one of two kinds of step, each
taking one clock tick:

* MOVE: no component is in a query state; every component applies its
  LAMBDA move if defined, otherwise its move on the current tape label.
* COMMUNICATE: every request whose sender is not itself querying is
  answered; in returning mode the answering senders are reset.

Components share one immutable tape and keep their own cursor.
"""
import logging
from typing import Callable, Iterator, List, Optional, Tuple

from pcfa_workbench.configs import GlobalConfig, app_configs
from pcfa_workbench.core.models import (
    CommEvent,
    Configuration,
    HaltReason,
    RunResult,
    StepKind,
    StepOutcome,
    Verdict,
)
from pcfa_workbench.core.validator import ValidatedSystem
from pcfa_workbench.errors import AlphabetViolationError, BoundOverflowError
from pcfa_workbench.utils.words import Word, WordLike, tokenize

logger = logging.getLogger(__name__)

StepObserver = Callable[[Configuration, Optional[StepOutcome]], None]


def prepare_tape(system: ValidatedSystem, word: WordLike) -> Word:
    """Tokenize a word and check it against the input alphabet."""
    tape = tokenize(word, system.alphabet)
    for position, symbol in enumerate(tape):
        if symbol not in system.alphabet:
            raise AlphabetViolationError(symbol, position)
    return tape


def initial_configuration(system: ValidatedSystem, word: WordLike) -> Configuration:
    prepare_tape(system, word)
    return Configuration(clock=0, states=system.initial, positions=(0,) * system.k)


def current_label(system: ValidatedSystem, tape: Word, position: int) -> str:
    return tape[position] if position < len(tape) else system.endmarker


def _move(system: ValidatedSystem, cfg: Configuration, tape: Word) -> StepOutcome:
    end = len(tape)
    states: List[str] = []
    positions: List[int] = []
    for i in range(system.k):
        state = cfg.states[i]
        position = cfg.positions[i]
        target = system.lam[i].get(state)
        if target is not None:
            states.append(target)
            positions.append(position)
            continue
        if position < end:
            target = system.sym[i].get((state, tape[position]))
            position += 1
        else:
            # a component at the endmarker stays there
            target = system.sym[i].get((state, system.endmarker))
        if target is None:
            return StepOutcome(kind=StepKind.HALT, halt_reason=HaltReason.STUCK_COMPONENT)
        states.append(target)
        positions.append(position)
    return StepOutcome(
        kind=StepKind.MOVE,
        next=Configuration(clock=cfg.clock + 1, states=tuple(states), positions=tuple(positions)),
    )


def _communicate(system: ValidatedSystem, cfg: Configuration) -> StepOutcome:
    queries = system.query_index
    states = list(cfg.states)
    events: List[CommEvent] = []
    senders = set()
    for i, state in enumerate(cfg.states):
        j = queries.get(state)
        if j is None:
            continue
        delivered = cfg.states[j]
        if delivered in queries:
            # sender is querying too; retried next round
            continue
        states[i] = delivered
        senders.add(j)
        events.append(CommEvent(
            clock=cfg.clock,
            requester=i + 1,
            sender=j + 1,
            delivered_state=delivered,
            sender_reset=system.returning,
        ))
    if not events:
        return StepOutcome(kind=StepKind.HALT, halt_reason=HaltReason.CYCLIC_QUERY)
    if system.returning:
        for j in senders:
            states[j] = system.initial[j]
    return StepOutcome(
        kind=StepKind.COMMUNICATE,
        next=Configuration(clock=cfg.clock + 1, states=tuple(states), positions=cfg.positions),
        events=tuple(events),
    )


def step(system: ValidatedSystem, cfg: Configuration, tape: Word) -> StepOutcome:
    """Apply the successor relation once."""
    if any(state in system.query_index for state in cfg.states):
        return _communicate(system, cfg)
    return _move(system, cfg, tape)


def is_accepting_halt(system: ValidatedSystem, cfg: Configuration, tape: Word) -> bool:
    """Some component is accepting with no move on its label and none on LAMBDA."""
    for i, state in enumerate(cfg.states):
        if state not in system.accepting[i]:
            continue
        if state in system.lam[i]:
            continue
        label = current_label(system, tape, cfg.positions[i])
        if (state, label) not in system.sym[i]:
            return True
    return False


def query_entries(system: ValidatedSystem, before: Optional[Configuration], after: Configuration) -> int:
    """Components in a query state in `after` that were not in one in `before`."""
    queries = system.query_index
    if before is None:
        return sum(1 for state in after.states if state in queries)
    return sum(
        1 for old, new in zip(before.states, after.states)
        if new in queries and old not in queries
    )


def iter_run(
    system: ValidatedSystem, word: WordLike, max_steps: int
) -> Iterator[Tuple[Configuration, Optional[StepOutcome]]]:
    """Yield each configuration with the outcome of stepping it.

    The last pair carries a HALT outcome, or None when the configuration
    at clock max_steps still has a successor.
    """
    if max_steps < 0:
        raise ValueError("max_steps must be non-negative")
    tape = prepare_tape(system, word)
    cfg = initial_configuration(system, tape)
    while True:
        outcome = step(system, cfg, tape)
        if outcome.kind is not StepKind.HALT and cfg.clock >= max_steps:
            yield cfg, None
            return
        yield cfg, outcome
        if outcome.kind is StepKind.HALT:
            return
        cfg = outcome.next


def run(
    system: ValidatedSystem,
    word: WordLike,
    max_steps: int,
    keep_trace: bool = False,
    observer: Optional[StepObserver] = None,
) -> RunResult:
    """Step until HALT or the cutoff; observer sees every row iter_run yields."""
    tape = prepare_tape(system, word)
    trace: Optional[List[Configuration]] = [] if keep_trace else None
    events: List[CommEvent] = []
    comm_count = 0
    previous: Optional[Configuration] = None

    for cfg, outcome in iter_run(system, tape, max_steps):
        if observer is not None:
            observer(cfg, outcome)
        comm_count += query_entries(system, previous, cfg)
        previous = cfg
        if trace is not None:
            trace.append(cfg)
        if outcome is None:
            return RunResult(
                verdict=Verdict.REJECT_CUTOFF,
                steps=cfg.clock,
                comm_count=comm_count,
                comm_events=events,
                final=cfg,
                trace=trace,
                max_steps=max_steps,
            )
        if outcome.kind is StepKind.HALT:
            accepted = is_accepting_halt(system, cfg, tape)
            return RunResult(
                verdict=Verdict.ACCEPT if accepted else Verdict.REJECT_HALT,
                steps=cfg.clock,
                comm_count=comm_count,
                comm_events=events,
                final=cfg,
                trace=trace,
                halt_reason=outcome.halt_reason,
                max_steps=max_steps,
            )
        events.extend(outcome.events)

    raise AssertionError("iter_run ended without a final outcome")


def decide(
    system: ValidatedSystem,
    word: WordLike,
    config: Optional[GlobalConfig] = None,
    observer: Optional[StepObserver] = None,
) -> RunResult:
    """Run with the linear cutoff; anything accepted is accepted within it."""
    config = config or app_configs
    tape = prepare_tape(system, word)
    bound = system.decide_bound(len(tape))
    if bound > config.DECIDE_STEP_CEILING:
        raise BoundOverflowError(bound, config.DECIDE_STEP_CEILING)
    return run(system, tape, bound, observer=observer)
