"""Line-oriented text format for PCFA systems.

    # comment
    pcfa 2 mode=returning centralized=true
    alphabet: $ & a b
    queries: q1 q2
    component 1
    states s0 s1 q1 q2 acc
    initial s0
    accepting acc
    s0 , $ -> s1
    s1 , LAMBDA -> q2

Lines starting with `#` are comments unless they read as a transition
inside a component, so state names may start with `#`.

`states` is optional; without it a component's state set is what its
lines mention (component 1 also receives every query state).
"""
import logging
from pathlib import Path
from typing import Dict, List, Optional, Set, Tuple, Union

from pcfa_workbench.constants import Label
from pcfa_workbench.core.models import CommunicationMode, ComponentDef, SystemDef
from pcfa_workbench.errors import ParseError

logger = logging.getLogger(__name__)


def _is_transition(tokens: List[str]) -> bool:
    return len(tokens) == 5 and tokens[1] == "," and tokens[3] == "->"


class _ComponentDraft:
    def __init__(self, index: int, line_no: int):
        self.index = index
        self.line_no = line_no
        self.states: Optional[Set[str]] = None
        self.initial: Optional[str] = None
        self.accepting: Set[str] = set()
        self.transitions: Dict[Tuple[str, str], str] = {}

    def build(self, query_states: Tuple[str, ...], source: Optional[str]) -> ComponentDef:
        if self.initial is None:
            raise ParseError(f"component {self.index} has no initial state", self.line_no, source)
        states = self.states
        if states is None:
            states = {self.initial} | self.accepting
            for (state, _), target in self.transitions.items():
                states.update((state, target))
            if self.index == 1:
                states.update(query_states)
        return ComponentDef(
            states=frozenset(states),
            transitions=dict(self.transitions),
            initial=self.initial,
            accepting=frozenset(self.accepting),
        )


def parse_system(text: str, source: Optional[str] = None) -> SystemDef:
    """Parse system file text; errors carry 1-based line numbers."""
    k: Optional[int] = None
    mode = CommunicationMode.RETURNING
    centralized = True
    endmarker = Label.END
    alphabet: Optional[List[str]] = None
    query_states: Optional[Tuple[str, ...]] = None
    drafts: List[_ComponentDraft] = []

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        tokens = line.split()
        if line.startswith("#") and not (drafts and _is_transition(tokens)):
            continue

        if k is None:
            if tokens[0] != "pcfa" or len(tokens) < 2:
                raise ParseError("expected header 'pcfa <k> mode=... centralized=...'", line_no, source)
            try:
                k = int(tokens[1])
            except ValueError:
                raise ParseError(f"component count {tokens[1]!r} is not an integer", line_no, source)
            for option in tokens[2:]:
                key, _, value = option.partition("=")
                if key == "mode":
                    try:
                        mode = CommunicationMode(value)
                    except ValueError:
                        raise ParseError(f"unknown mode {value!r}", line_no, source)
                elif key == "centralized":
                    if value not in ("true", "false"):
                        raise ParseError(f"centralized must be true or false, got {value!r}", line_no, source)
                    centralized = value == "true"
                elif key == "end":
                    endmarker = value
                else:
                    raise ParseError(f"unknown header option {option!r}", line_no, source)
            continue

        if drafts and _is_transition(tokens):
            state, _, label, _, target = tokens
            current = drafts[-1]
            if (state, label) in current.transitions:
                raise ParseError(f"duplicate transition for ({state}, {label})", line_no, source)
            current.transitions[(state, label)] = target
            continue

        keyword = tokens[0]
        if keyword == "alphabet:":
            alphabet = tokens[1:]
        elif keyword == "queries:":
            query_states = tuple(tokens[1:])
        elif keyword == "component":
            expected = len(drafts) + 1
            if len(tokens) != 2 or tokens[1] != str(expected):
                raise ParseError(f"expected 'component {expected}'", line_no, source)
            drafts.append(_ComponentDraft(expected, line_no))
        elif not drafts:
            raise ParseError(f"unexpected line before the first component: {line!r}", line_no, source)
        elif keyword == "states":
            drafts[-1].states = set(tokens[1:])
        elif keyword == "initial":
            if len(tokens) != 2:
                raise ParseError("expected 'initial <state>'", line_no, source)
            drafts[-1].initial = tokens[1]
        elif keyword == "accepting":
            drafts[-1].accepting = set(tokens[1:])
        else:
            raise ParseError(f"cannot parse line {line!r}", line_no, source)

    last_line = len(text.splitlines())
    if k is None:
        raise ParseError("missing 'pcfa' header", last_line, source)
    if alphabet is None:
        raise ParseError("missing 'alphabet:' line", last_line, source)
    if query_states is None:
        raise ParseError("missing 'queries:' line", last_line, source)
    if len(drafts) != k:
        raise ParseError(f"header declares {k} components, found {len(drafts)}", last_line, source)

    return SystemDef(
        input_alphabet=frozenset(alphabet),
        components=tuple(draft.build(query_states, source) for draft in drafts),
        query_states=query_states,
        mode=mode,
        centralized=centralized,
        endmarker=endmarker,
    )


def print_system(definition: SystemDef) -> str:
    """Render a system; parse_system(print_system(d)) == d."""
    header = f"pcfa {definition.k} mode={definition.mode.value} centralized={'true' if definition.centralized else 'false'}"
    if definition.endmarker != Label.END:
        header += f" end={definition.endmarker}"
    lines = [
        header,
        "alphabet: " + " ".join(sorted(definition.input_alphabet)),
        "queries: " + " ".join(definition.query_states),
    ]
    for i, component in enumerate(definition.components, start=1):
        lines.append(f"component {i}")
        lines.append("states " + " ".join(sorted(component.states)))
        lines.append(f"initial {component.initial}")
        lines.append(" ".join(["accepting", *sorted(component.accepting)]))
        for (state, label), target in component.transitions.items():
            lines.append(f"{state} , {label} -> {target}")
    return "\n".join(lines) + "\n"


def load_system(path: Union[str, Path]) -> SystemDef:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ParseError(f"cannot read system file: {e.strerror}", None, str(path))
    definition = parse_system(text, source=str(path))
    logger.debug(f"[SystemFile] loaded {definition.k}-component system from {path}")
    return definition
