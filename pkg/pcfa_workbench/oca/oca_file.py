"""Text format for one-way cellular automata.

    oca
    states: a x
    boundary: #
    inputs: a
    accepting: x
    # , a -> x
    a , a -> a

Lines starting with '#' are comments unless they read as a transition
`<left> , <own> -> <next>` (the boundary is a legal left neighbour).
"""
import logging
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from pcfa_workbench.constants import OCA_BOUNDARY
from pcfa_workbench.errors import OcaDefinitionError, ParseError
from pcfa_workbench.oca.models import OcaDef

logger = logging.getLogger(__name__)


def _is_transition(tokens: List[str]) -> bool:
    return len(tokens) == 5 and tokens[1] == "," and tokens[3] == "->"


def parse_oca(text: str, source: Optional[str] = None) -> OcaDef:
    seen_header = False
    fields: Dict[str, List[str]] = {}
    delta: Dict[Tuple[str, str], str] = {}

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        tokens = line.split()
        if _is_transition(tokens):
            if not seen_header:
                raise ParseError("transition before the 'oca' header", line_no, source)
            left, _, own, _, target = tokens
            if (left, own) in delta:
                raise ParseError(f"duplicate transition for ({left}, {own})", line_no, source)
            delta[(left, own)] = target
            continue
        if line.startswith("#"):
            continue
        if not seen_header:
            if tokens != ["oca"]:
                raise ParseError("expected 'oca' header", line_no, source)
            seen_header = True
            continue
        key = tokens[0]
        if key in ("states:", "boundary:", "inputs:", "accepting:"):
            fields[key[:-1]] = tokens[1:]
        else:
            raise ParseError(f"cannot parse line {line!r}", line_no, source)

    last_line = len(text.splitlines())
    if not seen_header:
        raise ParseError("missing 'oca' header", last_line, source)
    for required in ("states", "inputs"):
        if required not in fields:
            raise ParseError(f"missing '{required}:' line", last_line, source)
    boundary = fields.get("boundary", [OCA_BOUNDARY])
    if len(boundary) != 1:
        raise ParseError("expected exactly one boundary symbol", last_line, source)

    try:
        return OcaDef(
            states=frozenset(fields["states"]),
            boundary=boundary[0],
            inputs=frozenset(fields["inputs"]),
            accepting=frozenset(fields.get("accepting", [])),
            delta=delta,
        )
    except OcaDefinitionError as e:
        raise ParseError(str(e), None, source) from e


def print_oca(M: OcaDef) -> str:
    lines = [
        "oca",
        "states: " + " ".join(sorted(M.states)),
        f"boundary: {M.boundary}",
        "inputs: " + " ".join(sorted(M.inputs)),
        "accepting: " + " ".join(sorted(M.accepting)),
    ]
    # boundary rules first, then by neighbour
    order = sorted(M.delta.items(), key=lambda item: (item[0][0] != M.boundary, item[0]))
    for (left, own), target in order:
        lines.append(f"{left} , {own} -> {target}")
    return "\n".join(lines) + "\n"


def load_oca(path: Union[str, Path]) -> OcaDef:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ParseError(f"cannot read OCA file: {e.strerror}", None, str(path))
    M = parse_oca(text, source=str(path))
    logger.debug(f"[OcaFile] loaded {len(M.states)} states from {path}")
    return M
