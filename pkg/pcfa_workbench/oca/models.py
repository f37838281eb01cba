from dataclasses import dataclass
from typing import Dict, FrozenSet, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from pcfa_workbench.constants import OCA_BOUNDARY, OCA_FORBIDDEN_CHARS
from pcfa_workbench.errors import OcaDefinitionError


def _token_safe(name: str) -> bool:
    return bool(name) and not any(ch in OCA_FORBIDDEN_CHARS for ch in name)


class OcaDef(BaseModel):
    """A one-way cellular automaton <S, #, T, delta, F>."""
    model_config = ConfigDict(frozen=True)

    states: FrozenSet[str] = Field(..., description="State set S")
    boundary: str = Field(OCA_BOUNDARY, description="Symbol seen left of the leftmost cell")
    inputs: FrozenSet[str] = Field(..., description="Input alphabet T, a subset of S")
    accepting: FrozenSet[str] = Field(default_factory=frozenset, description="Accepting states F")
    delta: Dict[Tuple[str, str], str] = Field(
        default_factory=dict,
        description="Local rule (left neighbour or boundary, own state) -> next state",
    )

    @model_validator(mode="after")
    def _check_consistency(self) -> "OcaDef":
        if not _token_safe(self.boundary):
            raise OcaDefinitionError(f"boundary {self.boundary!r} is not a usable token")
        if self.boundary in self.states:
            raise OcaDefinitionError(f"boundary {self.boundary!r} is also a state")
        for state in sorted(self.states):
            if not _token_safe(state):
                raise OcaDefinitionError(f"state name {state!r} contains a reserved character")
        if not self.inputs:
            raise OcaDefinitionError("the input alphabet is empty")
        if not self.inputs <= self.states:
            raise OcaDefinitionError(f"inputs {sorted(self.inputs - self.states)} are not states")
        if not self.accepting <= self.states:
            raise OcaDefinitionError(f"accepting {sorted(self.accepting - self.states)} are not states")
        left_domain = self.states | {self.boundary}
        for (left, own), target in self.delta.items():
            if left not in left_domain or own not in self.states or target not in self.states:
                raise OcaDefinitionError(f"transition ({left}, {own}) -> {target} references an unknown symbol")
        return self

    def __hash__(self) -> int:
        return hash((self.states, self.boundary, self.inputs, self.accepting, tuple(sorted(self.delta.items()))))

    @property
    def unary_symbol(self) -> str:
        """Designated input symbol for unary words a^n."""
        return "a" if "a" in self.inputs else sorted(self.inputs)[0]


@dataclass(frozen=True)
class OcaConfiguration:
    cells: Tuple[str, ...]
    t: int = 0

    def __len__(self) -> int:
        return len(self.cells)

    @property
    def rightmost(self) -> str:
        return self.cells[-1]
