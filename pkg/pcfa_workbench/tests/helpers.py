"""Small system builders for tests"""
from typing import Dict, Iterable, Tuple

from pcfa_workbench.constants import Label
from pcfa_workbench.core import CommunicationMode, ComponentDef, SystemDef


def component(initial: str, transitions: Dict[Tuple[str, str], str], accepting: Iterable[str] = (), extra: Iterable[str] = ()) -> ComponentDef:
    states = {initial, *accepting, *extra}
    for (source, _), target in transitions.items():
        states.update((source, target))
    return ComponentDef(states=frozenset(states), transitions=transitions, initial=initial, accepting=frozenset(accepting))


def system(*components: ComponentDef, alphabet=("a",), mode=CommunicationMode.RETURNING, centralized=True, queries=None) -> SystemDef:
    return SystemDef(
        input_alphabet=frozenset(alphabet),
        components=components,
        query_states=tuple(queries or (f"q{i}" for i in range(1, len(components) + 1))),
        mode=mode,
        centralized=centralized,
    )


LAMBDA = Label.LAMBDA
END = Label.END
