import logging
from math import prod
from typing import Dict, FrozenSet, Optional, Tuple

from pcfa_workbench.constants import Label
from pcfa_workbench.core.models import CommunicationMode, SystemDef
from pcfa_workbench.errors import SystemValidationError, ValidationCode

logger = logging.getLogger(__name__)


class ValidatedSystem:
    """A system that passed validate_system, with precompiled move tables.

    Component indices are 0-based here; reports and files use 1-based.
    """

    def __init__(self, definition: SystemDef):
        self.definition = definition
        self.k = definition.k
        self.alphabet: FrozenSet[str] = definition.input_alphabet
        self.endmarker = definition.endmarker
        self.returning = definition.mode is CommunicationMode.RETURNING
        self.centralized = definition.centralized
        self.query_states: Tuple[str, ...] = definition.query_states
        self.query_index: Dict[str, int] = {q: j for j, q in enumerate(definition.query_states)}
        self.initial: Tuple[str, ...] = tuple(c.initial for c in definition.components)
        self.accepting: Tuple[FrozenSet[str], ...] = tuple(c.accepting for c in definition.components)

        lam = []
        sym = []
        for component in definition.components:
            lam_table: Dict[str, str] = {}
            sym_table: Dict[Tuple[str, str], str] = {}
            for (state, label), target in component.transitions.items():
                if label == Label.LAMBDA:
                    lam_table[state] = target
                else:
                    sym_table[(state, label)] = target
            lam.append(lam_table)
            sym.append(sym_table)
        self.lam: Tuple[Dict[str, str], ...] = tuple(lam)
        self.sym: Tuple[Dict[Tuple[str, str], str], ...] = tuple(sym)

        self.state_product = prod(len(c.states) for c in definition.components)

    def decide_bound(self, word_len: int) -> int:
        """Step cutoff (prod |S_i|) * (|w| + 1) used by decide."""
        return self.state_product * (word_len + 1)

    def __repr__(self) -> str:
        return f"ValidatedSystem(k={self.k}, mode={self.definition.mode.value}, centralized={self.centralized})"


def _fail(code: ValidationCode, message: str, component: Optional[int] = None) -> None:
    raise SystemValidationError(code, message, component)


def validate_system(definition: SystemDef) -> ValidatedSystem:
    """Check every structural invariant and compile the move tables."""
    k = definition.k
    if k < 1:
        _fail(ValidationCode.BAD_DEFINITION, "a system needs at least one component")
    if len(definition.query_states) != k:
        _fail(ValidationCode.BAD_DEFINITION, f"{k} components but {len(definition.query_states)} query states")
    if len(set(definition.query_states)) != k:
        _fail(ValidationCode.BAD_DEFINITION, "query states must be distinct")
    if definition.endmarker == Label.LAMBDA:
        _fail(ValidationCode.BAD_DEFINITION, "the endmarker cannot be LAMBDA")
    for reserved in (definition.endmarker, Label.LAMBDA):
        if reserved in definition.input_alphabet:
            _fail(ValidationCode.BAD_DEFINITION, f"reserved label {reserved} inside the input alphabet")

    labels = definition.input_alphabet | {Label.LAMBDA, definition.endmarker}
    queries = frozenset(definition.query_states)
    all_states = set()

    for i, component in enumerate(definition.components, start=1):
        states = component.states
        all_states |= states
        if component.initial not in states:
            _fail(ValidationCode.BAD_REFERENCE, f"initial state {component.initial} not in the state set", i)
        for state in sorted(component.accepting - states):
            _fail(ValidationCode.BAD_REFERENCE, f"accepting state {state} not in the state set", i)
        for (source, label), target in sorted(component.transitions.items()):
            if source not in states:
                _fail(ValidationCode.BAD_REFERENCE, f"unknown source state {source}", i)
            if target not in states:
                _fail(ValidationCode.BAD_REFERENCE, f"unknown target state {target}", i)
            if label not in labels:
                _fail(ValidationCode.BAD_REFERENCE, f"unknown label {label} in ({source}, {label})", i)

    for q in definition.query_states:
        if q not in all_states:
            _fail(ValidationCode.BAD_REFERENCE, f"query state {q} belongs to no component")

    for i, component in enumerate(definition.components, start=1):
        lambda_sources = set()
        symbol_sources = set()
        for (source, label), target in sorted(component.transitions.items()):
            if source in queries:
                _fail(ValidationCode.QUERY_SOURCE, f"transition ({source}, {label}) leaves a query state", i)
            if label == Label.LAMBDA:
                lambda_sources.add(source)
            else:
                symbol_sources.add(source)
        for state in sorted(lambda_sources & symbol_sources):
            _fail(ValidationCode.LAMBDA_CONFLICT, f"state {state} has both LAMBDA and symbol transitions", i)

    if definition.centralized:
        for i, component in enumerate(definition.components[1:], start=2):
            if component.initial in queries:
                _fail(ValidationCode.NONCENTRAL_QUERY, f"non-master starts in query state {component.initial}", i)
            for (source, label), target in sorted(component.transitions.items()):
                if target in queries:
                    _fail(ValidationCode.NONCENTRAL_QUERY, f"non-master enters query state {target} on ({source}, {label})", i)

    validated = ValidatedSystem(definition)
    logger.debug(f"[Validator] accepted {validated!r} with state product {validated.state_product}")
    return validated
