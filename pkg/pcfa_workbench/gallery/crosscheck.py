"""Exhaustive comparison of a system against a language oracle."""
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, List, Optional, Tuple

from pcfa_workbench.configs import GlobalConfig, app_configs
from pcfa_workbench.core.engine import decide
from pcfa_workbench.core.validator import ValidatedSystem
from pcfa_workbench.errors import AlphabetViolationError, BadParamError, BudgetExceededError
from pcfa_workbench.gallery.languages import LanguageId
from pcfa_workbench.gallery.oracles import oracle
from pcfa_workbench.utils.words import render

logger = logging.getLogger(__name__)

# verdict reported for words using symbols outside the system's alphabet
OUTSIDE_ALPHABET = "ALPHABET_VIOLATION"


@dataclass(frozen=True)
class Disagreement:
    word: str
    system_verdict: str
    oracle_verdict: bool


@dataclass
class CrosscheckReport:
    alphabet: Tuple[str, ...]
    max_len: int
    total_words: int = 0
    disagreements: List[Disagreement] = field(default_factory=list)
    accepted_by_system: int = 0
    accepted_by_oracle: int = 0

    @property
    def agree(self) -> bool:
        return not self.disagreements

    def summary(self) -> str:
        head = f"{self.total_words} words up to length {self.max_len}, {len(self.disagreements)} disagreements"
        if self.accepted_by_system == 0 and self.accepted_by_oracle == 0:
            return f"{head}; 0 accepted words on either side"
        return f"{head}; accepted by system {self.accepted_by_system}, by oracle {self.accepted_by_oracle}"


@dataclass
class _Chunk:
    count: int = 0
    accepted_by_system: int = 0
    accepted_by_oracle: int = 0
    disagreements: List[Disagreement] = field(default_factory=list)


def word_count(alphabet_size: int, max_len: int) -> int:
    """Number of words of length 0..max_len."""
    return sum(alphabet_size ** length for length in range(max_len + 1))


def _check_length(
    system: ValidatedSystem, lang: LanguageId, alphabet: Tuple[str, ...], length: int, config: GlobalConfig
) -> _Chunk:
    chunk = _Chunk()
    for word in product(alphabet, repeat=length):
        chunk.count += 1
        try:
            verdict = decide(system, word, config).verdict
            system_accepts = verdict.accepted
            system_verdict = verdict.value
        except AlphabetViolationError:
            system_accepts = False
            system_verdict = OUTSIDE_ALPHABET
        oracle_accepts = oracle(lang, word)
        chunk.accepted_by_system += system_accepts
        chunk.accepted_by_oracle += oracle_accepts
        if system_accepts != oracle_accepts:
            chunk.disagreements.append(Disagreement(render(word), system_verdict, oracle_accepts))
    return chunk


def _merge(report: CrosscheckReport, chunks: Iterable[_Chunk]) -> CrosscheckReport:
    for chunk in chunks:
        report.total_words += chunk.count
        report.accepted_by_system += chunk.accepted_by_system
        report.accepted_by_oracle += chunk.accepted_by_oracle
        report.disagreements.extend(chunk.disagreements)
    return report


def crosscheck(
    system: ValidatedSystem,
    lang: LanguageId,
    alphabet: Optional[Iterable[str]] = None,
    max_len: int = 8,
    config: Optional[GlobalConfig] = None,
    workers: Optional[int] = None,
) -> CrosscheckReport:
    """Compare decide with the oracle on every word up to max_len.

    Words are visited by length, then lexicographically over the sorted
    alphabet; disagreements keep that order whatever the fan-out.
    """
    config = config or app_configs
    symbols = tuple(sorted(set(alphabet if alphabet is not None else system.alphabet)))
    if max_len < 0:
        raise BadParamError("max_len must be non-negative")
    total = word_count(len(symbols), max_len)
    if total > config.CROSSCHECK_WORD_CEILING:
        raise BudgetExceededError(total, config.CROSSCHECK_WORD_CEILING)

    workers = workers or config.WORKERS
    report = CrosscheckReport(alphabet=symbols, max_len=max_len)
    lengths = range(max_len + 1)
    logger.info(f"[Crosscheck] {total} words over {len(symbols)} symbols with {workers} worker(s)")

    if workers <= 1:
        return _merge(report, (_check_length(system, lang, symbols, n, config) for n in lengths))

    with ProcessPoolExecutor(max_workers=workers) as executor:
        chunks = executor.map(
            _check_length,
            [system] * len(lengths),
            [lang] * len(lengths),
            [symbols] * len(lengths),
            lengths,
            [config] * len(lengths),
        )
        return _merge(report, chunks)
