"""run, decide, sweep and crosscheck."""
import argparse
import csv
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import IO, Iterable, List, Optional

from pcfa_workbench.cli.common import (
    EXIT_OK,
    EXIT_REJECT,
    cycle_payload,
    format_trace_row,
    parse_alphabet,
    parse_range,
    resolve_oca,
    resolve_system,
)
from pcfa_workbench.configs import GlobalConfig
from pcfa_workbench.constants import CSV_HEADER
from pcfa_workbench.core.engine import StepObserver, decide, run
from pcfa_workbench.core.metering import BoundFunction
from pcfa_workbench.core.models import Configuration, RunResult, StepOutcome
from pcfa_workbench.core.validator import ValidatedSystem
from pcfa_workbench.errors import BadParamError
from pcfa_workbench.gallery.crosscheck import crosscheck
from pcfa_workbench.gallery.generators import generate_member
from pcfa_workbench.gallery.languages import LanguageId, LanguageKind, parse_language
from pcfa_workbench.utils.words import tokenize

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SweepRow:
    m: int
    word_len: int
    verdict: str
    steps: int
    comm_count: int
    bound_value: Optional[float] = None
    ratio: Optional[float] = None

    def cells(self) -> List[str]:
        return [
            str(self.m),
            str(self.word_len),
            self.verdict,
            str(self.steps),
            str(self.comm_count),
            _decimal(self.bound_value),
            _decimal(self.ratio),
        ]


def _decimal(value: Optional[float]) -> str:
    if value is None:
        return ""
    if math.isinf(value):
        return "inf"
    return f"{value:.6f}"


def _print_result(result: RunResult, out: IO[str]) -> None:
    print(f"verdict={result.verdict.value}", file=out)
    print(f"steps={result.steps}", file=out)
    print(f"comms={result.comm_count}", file=out)
    if result.halt_reason is not None:
        print(f"halt={result.halt_reason.value}", file=out)


def _exit_for(result: RunResult) -> int:
    return EXIT_OK if result.accepted else EXIT_REJECT


def _trace_printer(out: IO[str]) -> StepObserver:
    def observe(cfg: Configuration, outcome: Optional[StepOutcome]) -> None:
        print(format_trace_row(cfg, outcome), file=out)
    return observe


def cmd_run(args: argparse.Namespace, config: GlobalConfig, out: IO[str]) -> int:
    system = resolve_system(args.system)
    tape = tokenize(args.word, system.alphabet)
    observer = _trace_printer(out) if args.trace else None
    if args.max_steps is None:
        result = decide(system, tape, config, observer=observer)
    else:
        result = run(system, tape, args.max_steps, observer=observer)
    _print_result(result, out)
    return _exit_for(result)


def cmd_decide(args: argparse.Namespace, config: GlobalConfig, out: IO[str]) -> int:
    system = resolve_system(args.system)
    result = decide(system, tokenize(args.word, system.alphabet), config)
    _print_result(result, out)
    return _exit_for(result)


def _payload_length(lang: LanguageId, m: int) -> int:
    if lang.kind in (LanguageKind.WBW, LanguageKind.EXPO_WBW, LanguageKind.POLY_WBW):
        return m
    return 0


def sweep_row(system: ValidatedSystem, lang: LanguageId, m: int, payload: Optional[str], config: GlobalConfig) -> SweepRow:
    bits = cycle_payload(payload, _payload_length(lang, m)) if _payload_length(lang, m) else None
    word = generate_member(lang, m, bits, config)
    tape = tokenize(word, system.alphabet)
    result = decide(system, tape, config)
    return SweepRow(m=m, word_len=len(tape), verdict=result.verdict.value, steps=result.steps, comm_count=result.comm_count)


def _with_bounds(rows: List[SweepRow], function: BoundFunction, scale: Fraction) -> List[SweepRow]:
    bounds = function.evaluate([row.word_len for row in rows]) * float(scale)
    bounded = []
    for row, bound in zip(rows, bounds):
        bound = float(bound)
        ratio = row.comm_count / bound if bound > 0 else (math.inf if row.comm_count else 0.0)
        bounded.append(SweepRow(
            m=row.m, word_len=row.word_len, verdict=row.verdict, steps=row.steps,
            comm_count=row.comm_count, bound_value=bound, ratio=ratio,
        ))
    return bounded


def sweep(
    system: ValidatedSystem,
    lang: LanguageId,
    ms: Iterable[int],
    config: GlobalConfig,
    payload: Optional[str] = None,
    bound: Optional[str] = None,
    scale: Fraction = Fraction(1),
) -> List[SweepRow]:
    """One row per parameter, in parameter order whatever the fan-out."""
    ms = list(ms)
    if scale <= 0:
        raise BadParamError("scale must be positive")
    function = BoundFunction.parse(bound) if bound else None
    if config.WORKERS <= 1 or len(ms) <= 1:
        rows = [sweep_row(system, lang, m, payload, config) for m in ms]
    else:
        n = len(ms)
        with ProcessPoolExecutor(max_workers=config.WORKERS) as executor:
            rows = list(executor.map(sweep_row, [system] * n, [lang] * n, ms, [payload] * n, [config] * n))
    if function is not None and rows:
        rows = _with_bounds(rows, function, scale)
    return rows


def cmd_sweep(args: argparse.Namespace, config: GlobalConfig, out: IO[str]) -> int:
    system = resolve_system(args.system)
    lang = parse_language(args.lang, resolve_oca(args.oca))
    low, high = parse_range(args.range)
    try:
        scale = Fraction(args.scale)
    except (ValueError, ZeroDivisionError):
        raise BadParamError(f"bad scale {args.scale!r}")
    rows = sweep(system, lang, range(low, high + 1), config, args.payload, args.bound, scale)
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        writer.writerow(row.cells())
    logger.info(f"[Sweep] {len(rows)} rows for {lang.token} m={low}..{high}")
    return EXIT_OK


def cmd_crosscheck(args: argparse.Namespace, config: GlobalConfig, out: IO[str]) -> int:
    system = resolve_system(args.system)
    lang = parse_language(args.lang, resolve_oca(args.oca))
    alphabet = parse_alphabet(args.alphabet) if args.alphabet else None
    report = crosscheck(system, lang, alphabet, args.max_len, config)
    print(report.summary(), file=out)
    for item in report.disagreements:
        oracle_verdict = "ACCEPT" if item.oracle_verdict else "REJECT"
        print(f"disagree word={item.word!r} system={item.system_verdict} oracle={oracle_verdict}", file=out)
    return EXIT_OK if report.agree else EXIT_REJECT


def add_argparsers(subparsers: argparse._SubParsersAction) -> List[argparse.ArgumentParser]:
    result: List[argparse.ArgumentParser] = []

    s = subparsers.add_parser("run", help="Run a system on a word")
    s.add_argument("system", help="system file or gallery name")
    s.add_argument("word")
    s.add_argument("--trace", action="store_true", help="print one line per clock tick")
    s.add_argument("--max-steps", type=int, default=None, help="cutoff (default: the decision bound)")
    s.set_defaults(main=cmd_run)
    result.append(s)

    s = subparsers.add_parser("decide", help="Decide membership with the linear cutoff")
    s.add_argument("system", help="system file or gallery name")
    s.add_argument("word")
    s.set_defaults(main=cmd_decide)
    result.append(s)

    s = subparsers.add_parser("sweep", help="Decide generated members and emit CSV")
    s.add_argument("system", help="system file or gallery name")
    s.add_argument("lang", help="language token")
    s.add_argument("range", help="<from>..<to>")
    s.add_argument("--bound", default=None, help="log2 | sqrt | linear | poly-log(r) | constant(c)")
    s.add_argument("--scale", default="1", help="rational factor applied to the bound")
    s.add_argument("--payload", default=None, help="w bits for the word-copy languages, repeated to length m")
    s.add_argument("--oca", default=None, help="OCA file or gallery automaton for computation languages")
    s.set_defaults(main=cmd_sweep)
    result.append(s)

    s = subparsers.add_parser("crosscheck", help="Compare a system with a language oracle")
    s.add_argument("system", help="system file or gallery name")
    s.add_argument("lang", help="language token")
    s.add_argument("--max-len", type=int, required=True)
    s.add_argument("--alphabet", default=None, help="symbols, comma-separated or one per character")
    s.add_argument("--oca", default=None, help="OCA file or gallery automaton for computation languages")
    s.set_defaults(main=cmd_crosscheck)
    result.append(s)

    return result
