from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, FrozenSet, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from pcfa_workbench.constants import Label


class CommunicationMode(str, Enum):
    RETURNING = "returning"
    NON_RETURNING = "nonreturning"


class StepKind(str, Enum):
    MOVE = "MOVE"
    COMMUNICATE = "COMMUNICATE"
    HALT = "HALT"


class HaltReason(str, Enum):
    STUCK_COMPONENT = "STUCK_COMPONENT"
    CYCLIC_QUERY = "CYCLIC_QUERY"


class Verdict(str, Enum):
    ACCEPT = "ACCEPT"
    REJECT_HALT = "REJECT_HALT"
    REJECT_CUTOFF = "REJECT_CUTOFF"

    @property
    def accepted(self) -> bool:
        return self is Verdict.ACCEPT


class ComponentDef(BaseModel):
    """One finite automaton of a system."""
    model_config = ConfigDict(frozen=True)

    states: FrozenSet[str] = Field(..., description="State set S_i")
    transitions: Dict[Tuple[str, str], str] = Field(
        default_factory=dict,
        description="Partial map (state, label) -> state; label is a symbol, LAMBDA or END",
    )
    initial: str = Field(..., description="Initial state s_0,i")
    accepting: FrozenSet[str] = Field(default_factory=frozenset, description="Accepting states F_i")

    def __hash__(self) -> int:
        return hash((self.states, tuple(sorted(self.transitions.items())), self.initial, self.accepting))


class SystemDef(BaseModel):
    """A k-component PCFA as written down, before validation."""
    model_config = ConfigDict(frozen=True)

    input_alphabet: FrozenSet[str]
    components: Tuple[ComponentDef, ...]
    query_states: Tuple[str, ...] = Field(..., description="q_1..q_k; q_i requests component i")
    mode: CommunicationMode = CommunicationMode.RETURNING
    centralized: bool = True
    endmarker: str = Label.END

    @property
    def k(self) -> int:
        return len(self.components)

    def __hash__(self) -> int:
        return hash((self.input_alphabet, self.components, self.query_states, self.mode, self.centralized, self.endmarker))


@dataclass(frozen=True)
class Configuration:
    """Global clock plus per-component state and tape position."""
    clock: int
    states: Tuple[str, ...]
    positions: Tuple[int, ...]

    def to_dict(self) -> Dict[str, Any]:
        return {"clock": self.clock, "states": list(self.states), "positions": list(self.positions)}


@dataclass(frozen=True)
class CommEvent:
    clock: int
    requester: int
    sender: int
    delivered_state: str
    sender_reset: bool

    def to_dict(self) -> Dict[str, Any]:
        return {
            "clock": self.clock,
            "requester": self.requester,
            "sender": self.sender,
            "delivered_state": self.delivered_state,
            "sender_reset": self.sender_reset,
        }


@dataclass(frozen=True)
class StepOutcome:
    kind: StepKind
    next: Optional[Configuration] = None
    halt_reason: Optional[HaltReason] = None
    events: Tuple[CommEvent, ...] = ()


@dataclass
class RunResult:
    verdict: Verdict
    steps: int
    comm_count: int
    comm_events: List[CommEvent]
    final: Configuration
    trace: Optional[List[Configuration]] = None
    halt_reason: Optional[HaltReason] = None
    max_steps: int = 0

    @property
    def accepted(self) -> bool:
        return self.verdict.accepted

    def to_dict(self) -> Dict[str, Any]:
        return {
            "verdict": self.verdict.value,
            "steps": self.steps,
            "comm_count": self.comm_count,
            "comm_events": [event.to_dict() for event in self.comm_events],
            "final": self.final.to_dict(),
            "halt_reason": self.halt_reason.value if self.halt_reason else None,
            "max_steps": self.max_steps,
        }
