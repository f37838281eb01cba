"""Argument resolution and report formatting shared by the command groups."""
from pathlib import Path
from typing import List, Optional, Tuple

from pcfa_workbench.core.models import CommEvent, Configuration, StepOutcome
from pcfa_workbench.core.system_file import load_system
from pcfa_workbench.core.validator import ValidatedSystem, validate_system
from pcfa_workbench.errors import BadParamError, ParseError
from pcfa_workbench.gallery import gallery_registry
from pcfa_workbench.oca.models import OcaDef
from pcfa_workbench.oca.oca_file import load_oca

EXIT_OK = 0
EXIT_REJECT = 1
EXIT_ERROR = 2


def _gallery_item(name: str, kind: str):
    for entry in gallery_registry.entries(kind):
        if entry.name == name:
            return entry.builder()
    return None


def resolve_system(value: str) -> ValidatedSystem:
    """A system file path, or the name of a gallery system."""
    path = Path(value)
    if path.is_file():
        definition = load_system(path)
    else:
        definition = _gallery_item(value, "system")
        if definition is None:
            raise ParseError("no such system file or gallery system", None, value)
    return validate_system(definition)


def resolve_oca(value: Optional[str]) -> Optional[OcaDef]:
    """An OCA file path, or the name of a gallery automaton."""
    if value is None:
        return None
    path = Path(value)
    if path.is_file():
        return load_oca(path)
    M = _gallery_item(value, "automaton")
    if M is None:
        raise ParseError("no such OCA file or gallery automaton", None, value)
    return M


def parse_range(text: str) -> Tuple[int, int]:
    """`<from>..<to>`, both ends included."""
    low, sep, high = text.partition("..")
    try:
        bounds = (int(low), int(high if sep else low))
    except ValueError:
        raise BadParamError(f"bad range {text!r}; expected <from>..<to>")
    if bounds[0] > bounds[1]:
        raise BadParamError(f"empty range {text!r}")
    return bounds


def parse_alphabet(text: str) -> List[str]:
    """Comma-separated symbols, or one symbol per character when there is no comma."""
    if "," in text:
        symbols = [symbol.strip() for symbol in text.split(",") if symbol.strip()]
    else:
        symbols = list(text)
    if not symbols:
        raise BadParamError("empty alphabet")
    return symbols


def cycle_payload(payload: Optional[str], n: int) -> Optional[str]:
    """Repeat payload bits to length n so one pattern serves a whole sweep."""
    if payload is None:
        return None
    if not payload:
        raise BadParamError("empty payload")
    return "".join(payload[i % len(payload)] for i in range(n))


def format_event(event: CommEvent) -> str:
    text = f"{event.requester}<-{event.sender}:{event.delivered_state}"
    return text + "(reset)" if event.sender_reset else text


def format_trace_row(cfg: Configuration, outcome: Optional[StepOutcome]) -> str:
    """`clock=<t> kind=<KIND> <i>:<state>@<pos> ... [events=...]`"""
    kind = outcome.kind.value if outcome is not None else "CUTOFF"
    parts = [f"clock={cfg.clock}", f"kind={kind}"]
    parts.extend(f"{i}:{state}@{position}" for i, (state, position) in enumerate(zip(cfg.states, cfg.positions), start=1))
    if outcome is not None and outcome.events:
        parts.append("events=" + ",".join(format_event(event) for event in outcome.events))
    return " ".join(parts)
