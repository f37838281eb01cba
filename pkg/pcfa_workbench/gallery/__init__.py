from pcfa_workbench.gallery import automata  # noqa: F401  registers the sample automata
from pcfa_workbench.gallery.crosscheck import CrosscheckReport, Disagreement, crosscheck
from pcfa_workbench.gallery.generators import generate_member
from pcfa_workbench.gallery.languages import (
    EXPO,
    EXPO_WBW,
    POLY,
    POLY_WBW,
    WBW,
    LanguageId,
    LanguageKind,
    language_alphabet,
    parse_language,
)
from pcfa_workbench.gallery.oracles import oracle
from pcfa_workbench.gallery.registry import gallery_registry, register_automaton, register_system
from pcfa_workbench.gallery.systems import build_expo, build_expo_wbw, build_poly, build_poly_wbw, build_wbw

__all__ = [
    "EXPO",
    "EXPO_WBW",
    "POLY",
    "POLY_WBW",
    "WBW",
    "CrosscheckReport",
    "Disagreement",
    "LanguageId",
    "LanguageKind",
    "build_expo",
    "build_expo_wbw",
    "build_poly",
    "build_poly_wbw",
    "build_wbw",
    "crosscheck",
    "gallery_registry",
    "generate_member",
    "language_alphabet",
    "oracle",
    "parse_language",
    "register_automaton",
    "register_system",
]
