"""Valid-computation encoding of OCA runs.

A computation on an input of n cells that accepts after m steps is
written as w(0) w(1) ... w(m): w(0) is the boundary followed by the
primed input, and every later w(t+1) consists of n subconfigurations

    # c_{t+1}(1..i-1) (c_{t+1}(i),c_t(i)) c_t(i+1..n)

for i = 1..n. The resulting string x_1..x_N is then folded into
overlapping pairs [x_1,x_2][x_2,x_3]...[x_{N-1},x_N].

Textual forms: primed input `c'`, composite `(p1,c)`, pair `[x,y]`.
"""
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from pcfa_workbench.errors import DeltaUndefinedError, NotAcceptedError, ParseError, TooShortError
from pcfa_workbench.oca.models import OcaConfiguration, OcaDef
from pcfa_workbench.oca.simulator import default_horizon, oca_run, oca_step, oca_word
from pcfa_workbench.utils.words import WordLike

logger = logging.getLogger(__name__)

Pair = Tuple[str, str]


def primed(symbol: str) -> str:
    return f"{symbol}'"


def composite(new: str, old: str) -> str:
    return f"({new},{old})"


def pair_token(x: str, y: str) -> str:
    return f"[{x},{y}]"


def parse_pair(token: str) -> Optional[Pair]:
    """Split `[x,y]` at its top-level comma; None when malformed."""
    if len(token) < 5 or token[0] != "[" or token[-1] != "]":
        return None
    inner = token[1:-1]
    depth = 0
    split_at = None
    for i, ch in enumerate(inner):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                return None
        elif ch == "," and depth == 0:
            if split_at is not None:
                return None
            split_at = i
    if depth != 0 or split_at is None:
        return None
    x, y = inner[:split_at], inner[split_at + 1:]
    if not x or not y:
        return None
    return x, y


def is_a_symbol(M: OcaDef, symbol: str) -> bool:
    """Membership in A = {#} u S' u S'xS' with S' = S u T'."""
    def plain(s: str) -> bool:
        return s in M.states or (s.endswith("'") and s[:-1] in M.inputs)

    if symbol == M.boundary or plain(symbol):
        return True
    if len(symbol) >= 5 and symbol[0] == "(" and symbol[-1] == ")":
        parts = symbol[1:-1].split(",")
        return len(parts) == 2 and plain(parts[0]) and plain(parts[1])
    return False


def is_pair_symbol(M: OcaDef, token: str) -> bool:
    """Membership in the paired alphabet A x A."""
    pair = parse_pair(token)
    return pair is not None and is_a_symbol(M, pair[0]) and is_a_symbol(M, pair[1])


@dataclass(frozen=True)
class ValcString:
    """A word over A x A; adjacency coherence is not enforced here."""
    pairs: Tuple[Pair, ...]

    @classmethod
    def from_symbols(cls, symbols: Sequence[str]) -> "ValcString":
        return cls(pairs=tuple(zip(symbols, symbols[1:])))

    @classmethod
    def parse(cls, text: str, source: Optional[str] = None) -> "ValcString":
        pairs = []
        for line_no, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            for token in line.split():
                pair = parse_pair(token)
                if pair is None:
                    raise ParseError(f"malformed pair token {token!r}", line_no, source)
                pairs.append(pair)
        return cls(pairs=tuple(pairs))

    @property
    def source_length(self) -> int:
        """Length of the unpaired string this folds."""
        return len(self.pairs) + 1 if self.pairs else 0

    def tokens(self) -> List[str]:
        return [pair_token(x, y) for x, y in self.pairs]

    def serialize(self) -> str:
        return " ".join(self.tokens())

    def is_coherent(self) -> bool:
        return all(a[1] == b[0] for a, b in zip(self.pairs, self.pairs[1:]))

    def unpaired(self) -> Optional[List[str]]:
        if not self.pairs or not self.is_coherent():
            return None
        return [x for x, _ in self.pairs] + [self.pairs[-1][1]]

    def __len__(self) -> int:
        return len(self.pairs)


@dataclass(frozen=True)
class ValcTrace:
    """What a valid computation decodes to."""
    input_word: Tuple[str, ...]
    steps: int
    configurations: Tuple[OcaConfiguration, ...]


def valc_length(n: int, t: int) -> int:
    """Paired length n + (n+1)*n*t of the encoding of t steps on n cells."""
    return n + (n + 1) * n * t


def _successor_segments(M: OcaDef, old: OcaConfiguration, new: OcaConfiguration) -> Iterable[List[str]]:
    n = len(old.cells)
    for i in range(n):
        yield [M.boundary, *new.cells[:i], composite(new.cells[i], old.cells[i]), *old.cells[i + 1:]]


def encode_valc(M: OcaDef, word: WordLike, max_t: Optional[int] = None) -> ValcString:
    """Encode the computation on word up to its first acceptance."""
    tape = oca_word(M, word)
    horizon = default_horizon(len(tape), max_t, None)
    accepted_at = oca_run(M, tape, max_t=horizon)
    if accepted_at is None:
        raise NotAcceptedError(horizon)
    if accepted_at < 3:
        raise TooShortError(accepted_at)

    symbols = [M.boundary, *(primed(x) for x in tape)]
    current = OcaConfiguration(cells=tape, t=0)
    for _ in range(accepted_at):
        following = oca_step(M, current)
        for segment in _successor_segments(M, current, following):
            symbols.extend(segment)
        current = following
    encoded = ValcString.from_symbols(symbols)
    logger.debug(f"[Valc] encoded n={len(tape)} t={accepted_at} into {len(encoded)} pairs")
    return encoded


def _as_pairs(s: Union[ValcString, Sequence[str], Sequence[Pair]]) -> Optional[Tuple[Pair, ...]]:
    if isinstance(s, ValcString):
        return s.pairs
    if isinstance(s, str):
        s = s.split()
    pairs = []
    for item in s:
        if isinstance(item, str):
            pair = parse_pair(item)
            if pair is None:
                return None
            pairs.append(pair)
        else:
            pairs.append(tuple(item))
    return tuple(pairs)


def decode_valc(M: OcaDef, s: Union[ValcString, Sequence[str], Sequence[Pair]]) -> Optional[ValcTrace]:
    """Decode a candidate and re-simulate M over it; None unless valid."""
    pairs = _as_pairs(s)
    if not pairs:
        return None
    symbols = ValcString(pairs=pairs).unpaired()
    if symbols is None or symbols[0] != M.boundary:
        return None

    segments: List[List[str]] = []
    for symbol in symbols:
        if symbol == M.boundary:
            segments.append([symbol])
        else:
            segments[-1].append(symbol)

    head = segments[0][1:]
    if not head:
        return None
    input_word = []
    for symbol in head:
        if not (symbol.endswith("'") and symbol[:-1] in M.inputs):
            return None
        input_word.append(symbol[:-1])
    n = len(input_word)

    body = segments[1:]
    if len(body) % n:
        return None
    m = len(body) // n
    if m < 3:
        return None

    current = OcaConfiguration(cells=tuple(input_word), t=0)
    configurations = [current]
    for t in range(m):
        try:
            following = oca_step(M, current)
        except DeltaUndefinedError:
            return None
        for i, expected in enumerate(_successor_segments(M, current, following)):
            if body[t * n + i] != expected:
                return None
        current = following
        configurations.append(current)

    if current.rightmost not in M.accepting:
        return None
    return ValcTrace(input_word=tuple(input_word), steps=m, configurations=tuple(configurations))


def is_valid_computation(M: OcaDef, s: Union[ValcString, Sequence[str], Sequence[Pair]]) -> bool:
    return decode_valc(M, s) is not None


def read_valc_tokens(path: Union[str, Path]) -> List[str]:
    """Raw whitespace-separated tokens of a VALC file; '#' lines are comments."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ParseError(f"cannot read VALC file: {e.strerror}", None, str(path))
    tokens: List[str] = []
    for raw in text.splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            tokens.extend(line.split())
    return tokens
