from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Union

from pcfa_workbench.core.models import SystemDef
from pcfa_workbench.errors import BadParamError
from pcfa_workbench.oca.models import OcaDef


@dataclass(frozen=True)
class GalleryEntry:
    name: str
    kind: str  # "system" or "automaton"
    description: str
    builder: Callable[[], Union[SystemDef, OcaDef]]
    language: Optional[str] = None


class GalleryRegistry:
    """Named constructors for gallery systems and sample automata"""

    def __init__(self):
        self._entries: Dict[str, GalleryEntry] = {}

    def register(self, kind: str, name: str, description: str, language: Optional[str] = None):
        """
        Decorator to register a zero-argument builder under a stable name
        """
        def decorator(func: Callable):
            if name in self._entries:
                raise ValueError(f"gallery name {name!r} registered twice")
            self._entries[name] = GalleryEntry(
                name=name, kind=kind, description=description, builder=func, language=language
            )
            return func
        return decorator

    def get_entry(self, name: str) -> GalleryEntry:
        entry = self._entries.get(name)
        if entry is None:
            known = ", ".join(sorted(self._entries))
            raise BadParamError(f"unknown gallery entry {name!r}; known: {known}")
        return entry

    def build(self, name: str) -> Union[SystemDef, OcaDef]:
        return self.get_entry(name).builder()

    def entries(self, kind: Optional[str] = None) -> List[GalleryEntry]:
        return [entry for entry in self._entries.values() if kind is None or entry.kind == kind]


# Global singleton
gallery_registry = GalleryRegistry()


def register_system(name: str, description: str, language: Optional[str] = None):
    return gallery_registry.register("system", name, description, language)


def register_automaton(name: str, description: str):
    return gallery_registry.register("automaton", name, description)
