"""Direct membership tests for the witness languages.

No automata are involved except for the computation-based languages,
whose embedded block is checked by re-simulating the OCA. Malformed
input is never an error, only a non-member.
"""
import logging
import re
from typing import Callable, Dict, List, Optional, Sequence

from pcfa_workbench.gallery.languages import L_R_MARKERS, VALC_MARKERS, LanguageId, LanguageKind
from pcfa_workbench.oca.models import OcaDef
from pcfa_workbench.oca.simulator import oca_run
from pcfa_workbench.oca.valc import decode_valc, is_pair_symbol
from pcfa_workbench.utils.words import Word, WordLike, single_char, tokenize

logger = logging.getLogger(__name__)

_EXPO = re.compile(r"\$(a+(?:ba+)+)&")
_POLY = re.compile(r"\$(a+(?:ba+)*)&")
_WBW = re.compile(r"([01]+)b([01]+)")
_COPY = re.compile(r"\$([01]+)b((?:a+[01][01])+)&")
_COPY_GROUP = re.compile(r"(a+)([01])([01])")


def _doubling(i: int) -> int:
    return 1 << i


def _odd(i: int) -> int:
    return 2 * i + 1


def _blocks_follow(blocks: Sequence[str], length_of: Callable[[int], int]) -> bool:
    return all(len(block) == length_of(i) for i, block in enumerate(blocks))


def _is_expo(text: str) -> bool:
    match = _EXPO.fullmatch(text)
    return match is not None and _blocks_follow(match.group(1).split("b"), _doubling)


def _is_poly(text: str) -> bool:
    match = _POLY.fullmatch(text)
    return match is not None and _blocks_follow(match.group(1).split("b"), _odd)


def _is_wbw(text: str) -> bool:
    match = _WBW.fullmatch(text)
    return match is not None and match.group(1) == match.group(2)


def _is_copy(text: str, length_of: Callable[[int], int]) -> bool:
    # $ w b a^{len(1)} w1 w1 ... a^{len(m)} wm wm &
    match = _COPY.fullmatch(text)
    if match is None:
        return False
    w = match.group(1)
    groups = _COPY_GROUP.findall(match.group(2))
    if len(groups) != len(w):
        return False
    return all(
        len(block) == length_of(i) and first == w[i] and second == w[i]
        for i, (block, first, second) in enumerate(groups)
    )


def _unary_suffix_ok(suffix: Sequence[str], m: int) -> bool:
    # a^{2^0} bb a^{2^1} bb ... a^{2^{m-1}} bb
    if len(suffix) != (1 << m) - 1 + 2 * m:
        return False
    expected: List[str] = []
    for i in range(m):
        expected.extend("a" * (1 << i))
        expected.extend(("b", "b"))
    return list(suffix) == expected


def _split_markers(tokens: Word, markers: Sequence[str]) -> Optional[List[Word]]:
    """Cut tokens at each marker in turn; every marker must occur exactly once."""
    pieces: List[Word] = []
    rest = tokens
    for marker in markers:
        if tokens.count(marker) != 1 or marker not in rest:
            return None
        at = rest.index(marker)
        pieces.append(rest[:at])
        rest = rest[at + 1:]
    pieces.append(rest)
    return pieces


def _is_valc_prime(M: OcaDef, tokens: Word) -> bool:
    # $1 x $2 a^{2^0} bb ... a^{2^{m-1}} bb &   with m = |x|
    if len(tokens) < 3 or tokens[-1] != "&":
        return False
    pieces = _split_markers(tokens[:-1], ("$1", "$2"))
    if pieces is None or pieces[0]:
        return False
    _, x, suffix = pieces
    if not x or not all(is_pair_symbol(M, token) for token in x):
        return False
    if not _unary_suffix_ok(suffix, len(x)):
        return False
    return decode_valc(M, x) is not None


def _is_invalc_prime(M: OcaDef, tokens: Word) -> bool:
    for token in tokens:
        if token not in VALC_MARKERS and not is_pair_symbol(M, token):
            return False
    return not _is_valc_prime(M, tokens)


def _is_l_r(M: OcaDef, tokens: Word) -> bool:
    # $1 x $2 u $3 u $4 a^{2^0} bb ... a^{2^{m-1}} bb &
    # x encodes the first acceptance on a^m, |u| = |x|, the first m bits of u primed
    if len(tokens) < 5 or tokens[-1] != "&":
        return False
    pieces = _split_markers(tokens[:-1], ("$1", "$2", "$3", "$4"))
    if pieces is None or pieces[0]:
        return False
    _, x, u, v, suffix = pieces
    if not x or not all(is_pair_symbol(M, token) for token in x):
        return False
    trace = decode_valc(M, x)
    if trace is None or any(symbol != M.unary_symbol for symbol in trace.input_word):
        return False
    m = len(trace.input_word)
    if oca_run(M, trace.input_word, max_t=trace.steps) != trace.steps:
        return False
    if len(u) != len(x) or u != v:
        return False
    if not all(bit in ("0'", "1'") for bit in u[:m]) or not all(bit in ("0", "1") for bit in u[m:]):
        return False
    return _unary_suffix_ok(suffix, m)


_TEXT_ORACLES: Dict[LanguageKind, Callable[[str], bool]] = {
    LanguageKind.EXPO: _is_expo,
    LanguageKind.POLY: _is_poly,
    LanguageKind.WBW: _is_wbw,
    LanguageKind.EXPO_WBW: lambda text: _is_copy(text, _doubling),
    LanguageKind.POLY_WBW: lambda text: _is_copy(text, _odd),
}

_TOKEN_ORACLES: Dict[LanguageKind, Callable[[OcaDef, Word], bool]] = {
    LanguageKind.VALC_PRIME: _is_valc_prime,
    LanguageKind.INVALC_PRIME: _is_invalc_prime,
    LanguageKind.L_R: _is_l_r,
}


def oracle(lang: LanguageId, word: WordLike) -> bool:
    """Exact membership of word in lang."""
    if lang.kind in _TEXT_ORACLES:
        tokens = tokenize(word)
        if not single_char(tokens):
            return False
        return _TEXT_ORACLES[lang.kind]("".join(tokens))
    markers = L_R_MARKERS if lang.kind is LanguageKind.L_R else VALC_MARKERS
    return _TOKEN_ORACLES[lang.kind](lang.oca, tokenize(word, markers))
