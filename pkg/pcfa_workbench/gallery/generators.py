"""Member words of the witness languages.

Single-character languages come back as plain strings, the
computation-based ones as whitespace-separated tokens.
"""
import logging
from typing import Callable, Dict, List, Optional, Sequence, Union

from pcfa_workbench.configs import GlobalConfig, app_configs
from pcfa_workbench.errors import BadParamError, OcaError
from pcfa_workbench.gallery.languages import LanguageId, LanguageKind
from pcfa_workbench.oca.models import OcaDef
from pcfa_workbench.oca.valc import encode_valc
from pcfa_workbench.utils.words import tokenize

logger = logging.getLogger(__name__)

Payload = Optional[Union[str, Sequence[str]]]


def alternating_bits(n: int) -> str:
    """0101... of length n."""
    return "".join("01"[i % 2] for i in range(n))


def _bits(payload: Payload, n: int, what: str) -> str:
    if payload is None:
        return alternating_bits(n)
    bits = "".join(payload)
    if len(bits) != n:
        raise BadParamError(f"{what} needs {n} payload bits, got {len(bits)}")
    if any(bit not in "01" for bit in bits):
        raise BadParamError("payload must be a bit string")
    return bits


def _check_length(length: int, config: GlobalConfig) -> None:
    if length > config.MAX_GENERATED_LENGTH:
        raise BadParamError(f"member length {length} exceeds MAX_GENERATED_LENGTH={config.MAX_GENERATED_LENGTH}")


def _need(m: int, lowest: int, what: str) -> None:
    if m < lowest:
        raise BadParamError(f"{what} needs m >= {lowest}, got {m}")


def _expo(m: int, payload: Payload, oca: Optional[OcaDef], config: GlobalConfig) -> str:
    _need(m, 1, "expo")
    _check_length((1 << (m + 1)) + m + 1, config)
    return "$" + "b".join("a" * (1 << i) for i in range(m + 1)) + "&"


def _poly(m: int, payload: Payload, oca: Optional[OcaDef], config: GlobalConfig) -> str:
    _need(m, 0, "poly")
    _check_length((m + 1) ** 2 + m + 2, config)
    return "$" + "b".join("a" * (2 * i + 1) for i in range(m + 1)) + "&"


def _wbw(m: int, payload: Payload, oca: Optional[OcaDef], config: GlobalConfig) -> str:
    _need(m, 1, "wbw")
    _check_length(2 * m + 1, config)
    w = _bits(payload, m, "wbw")
    return f"{w}b{w}"


def _copy(m: int, payload: Payload, block: Callable[[int], int], length: int, config: GlobalConfig) -> str:
    _need(m, 1, "word copy languages")
    _check_length(length, config)
    w = _bits(payload, m, "word copy languages")
    return "$" + w + "b" + "".join("a" * block(i) + w[i] * 2 for i in range(m)) + "&"


def _expo_wbw(m: int, payload: Payload, oca: Optional[OcaDef], config: GlobalConfig) -> str:
    return _copy(m, payload, lambda i: 1 << i, (1 << m) + 3 * m + 2, config)


def _poly_wbw(m: int, payload: Payload, oca: Optional[OcaDef], config: GlobalConfig) -> str:
    return _copy(m, payload, lambda i: 2 * i + 1, m * m + 3 * m + 3, config)


def _unary_suffix(m: int) -> List[str]:
    tokens: List[str] = []
    for i in range(m):
        tokens.extend("a" * (1 << i))
        tokens.extend(("b", "b"))
    return tokens


def _encode(M: OcaDef, word: Sequence[str]) -> List[str]:
    try:
        return encode_valc(M, word).tokens()
    except OcaError as e:
        raise BadParamError(f"no valid computation for input {' '.join(word)!r}: {e}") from e


def _valc_tokens(m: int, payload: Payload, M: OcaDef, config: GlobalConfig) -> List[str]:
    _need(m, 1, "valc-prime")
    if payload is None:
        word = [M.unary_symbol] * m
    else:
        word = list(tokenize(payload, M.inputs))
        if len(word) != m:
            raise BadParamError(f"payload has {len(word)} OCA input symbols, m is {m}")
    x = _encode(M, word)
    _check_length(len(x) + (1 << len(x)) + 2 * len(x) + 2, config)
    return ["$1", *x, "$2", *_unary_suffix(len(x)), "&"]


def _valc_prime(m: int, payload: Payload, oca: Optional[OcaDef], config: GlobalConfig) -> str:
    return " ".join(_valc_tokens(m, payload, oca, config))


def _invalc_prime(m: int, payload: Payload, oca: Optional[OcaDef], config: GlobalConfig) -> str:
    return " ".join(_valc_tokens(m, payload, oca, config)[:-1])


def _l_r(m: int, payload: Payload, M: Optional[OcaDef], config: GlobalConfig) -> str:
    _need(m, 1, "l-r")
    _check_length((1 << m) + 2 * m, config)
    x = _encode(M, [M.unary_symbol] * m)
    ell = len(x)
    _check_length(3 * ell + (1 << m) - 1 + 2 * m + 5, config)
    bits = _bits(payload, ell, "l-r")
    infix = [f"{bit}'" for bit in bits[:m]] + list(bits[m:])
    return " ".join(["$1", *x, "$2", *infix, "$3", *infix, "$4", *_unary_suffix(m), "&"])


_GENERATORS: Dict[LanguageKind, Callable[[int, Payload, Optional[OcaDef], GlobalConfig], str]] = {
    LanguageKind.EXPO: _expo,
    LanguageKind.POLY: _poly,
    LanguageKind.WBW: _wbw,
    LanguageKind.EXPO_WBW: _expo_wbw,
    LanguageKind.POLY_WBW: _poly_wbw,
    LanguageKind.VALC_PRIME: _valc_prime,
    LanguageKind.INVALC_PRIME: _invalc_prime,
    LanguageKind.L_R: _l_r,
}


def generate_member(
    lang: LanguageId,
    m: int,
    payload: Payload = None,
    config: Optional[GlobalConfig] = None,
) -> str:
    """The member of lang with parameter m.

    payload is w_1..w_m for the word-copy languages, the OCA input word
    for valc-prime and the infix bits for l-r; it defaults to 0101...
    (or a^m for valc-prime).
    """
    config = config or app_configs
    word = _GENERATORS[lang.kind](m, payload, lang.oca, config)
    logger.debug(f"[Generator] {lang.token} m={m} -> {len(word)} characters")
    return word
