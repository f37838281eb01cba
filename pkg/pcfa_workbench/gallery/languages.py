from enum import Enum
from typing import FrozenSet, Optional

from pydantic import BaseModel, ConfigDict, model_validator

from pcfa_workbench.constants import LanguageToken
from pcfa_workbench.errors import BadParamError
from pcfa_workbench.oca.models import OcaDef

# markers of the computation-based languages
VALC_MARKERS = frozenset({"a", "b", "$1", "$2", "&"})
L_R_MARKERS = frozenset({"a", "b", "$1", "$2", "$3", "$4", "&", "0", "1", "0'", "1'"})


class LanguageKind(str, Enum):
    EXPO = LanguageToken.EXPO
    POLY = LanguageToken.POLY
    WBW = LanguageToken.WBW
    EXPO_WBW = LanguageToken.EXPO_WBW
    POLY_WBW = LanguageToken.POLY_WBW
    VALC_PRIME = LanguageToken.VALC_PRIME
    INVALC_PRIME = LanguageToken.INVALC_PRIME
    L_R = LanguageToken.L_R

    @property
    def needs_oca(self) -> bool:
        return self in (LanguageKind.VALC_PRIME, LanguageKind.INVALC_PRIME, LanguageKind.L_R)


class LanguageId(BaseModel):
    """A witness language; the computation-based kinds carry their automaton."""
    model_config = ConfigDict(frozen=True)

    kind: LanguageKind
    oca: Optional[OcaDef] = None

    @model_validator(mode="after")
    def _oca_matches_kind(self) -> "LanguageId":
        if self.kind.needs_oca and self.oca is None:
            raise BadParamError(f"language {self.kind.value} needs an OCA")
        if not self.kind.needs_oca and self.oca is not None:
            raise BadParamError(f"language {self.kind.value} takes no OCA")
        return self

    @property
    def token(self) -> str:
        return self.kind.value

    def __hash__(self) -> int:
        return hash((self.kind, self.oca))

    def __str__(self) -> str:
        return self.kind.value

    @classmethod
    def VALC_PRIME(cls, oca: OcaDef) -> "LanguageId":
        return cls(kind=LanguageKind.VALC_PRIME, oca=oca)

    @classmethod
    def INVALC_PRIME(cls, oca: OcaDef) -> "LanguageId":
        return cls(kind=LanguageKind.INVALC_PRIME, oca=oca)

    @classmethod
    def L_R(cls, oca: OcaDef) -> "LanguageId":
        return cls(kind=LanguageKind.L_R, oca=oca)


EXPO = LanguageId(kind=LanguageKind.EXPO)
POLY = LanguageId(kind=LanguageKind.POLY)
WBW = LanguageId(kind=LanguageKind.WBW)
EXPO_WBW = LanguageId(kind=LanguageKind.EXPO_WBW)
POLY_WBW = LanguageId(kind=LanguageKind.POLY_WBW)


def language_alphabet(lang: LanguageId) -> FrozenSet[str]:
    """Alphabet of a language.

    For the computation-based kinds only the marker symbols are listed;
    their pair symbols over A x A are recognised by `is_pair_symbol`.
    """
    kind = lang.kind
    if kind in (LanguageKind.EXPO, LanguageKind.POLY):
        return frozenset({"$", "a", "b", "&"})
    if kind is LanguageKind.WBW:
        return frozenset({"0", "1", "b"})
    if kind in (LanguageKind.EXPO_WBW, LanguageKind.POLY_WBW):
        return frozenset({"$", "0", "1", "a", "b", "&"})
    if kind is LanguageKind.L_R:
        return L_R_MARKERS
    return VALC_MARKERS


def parse_language(token: str, oca: Optional[OcaDef] = None) -> LanguageId:
    """Map a CLI token to a LanguageId."""
    try:
        kind = LanguageKind(token.strip().lower())
    except ValueError:
        known = ", ".join(kind.value for kind in LanguageKind)
        raise BadParamError(f"unknown language {token!r}; known: {known}")
    if kind.needs_oca and oca is None:
        raise BadParamError(f"language {token} needs an OCA (--oca FILE)")
    return LanguageId(kind=kind, oca=oca if kind.needs_oca else None)
