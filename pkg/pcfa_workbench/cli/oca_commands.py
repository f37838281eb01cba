"""oca run | valc | check"""
import argparse
import logging
from typing import IO, List

from pcfa_workbench.cli.common import EXIT_OK, EXIT_REJECT, resolve_oca
from pcfa_workbench.configs import GlobalConfig
from pcfa_workbench.oca.simulator import default_horizon, oca_run, oca_word
from pcfa_workbench.oca.valc import decode_valc, encode_valc, read_valc_tokens, valc_length

logger = logging.getLogger(__name__)


def cmd_oca_run(args: argparse.Namespace, config: GlobalConfig, out: IO[str]) -> int:
    M = resolve_oca(args.oca)
    tape = oca_word(M, args.word)
    horizon = default_horizon(len(tape), args.max_t, config)
    accepted_at = oca_run(M, tape, max_t=horizon)
    if accepted_at is None:
        print(f"accepted_at=none horizon={horizon}", file=out)
        return EXIT_REJECT
    print(f"accepted_at={accepted_at}", file=out)
    return EXIT_OK


def cmd_oca_valc(args: argparse.Namespace, config: GlobalConfig, out: IO[str]) -> int:
    M = resolve_oca(args.oca)
    tape = oca_word(M, args.word)
    horizon = default_horizon(len(tape), args.max_t, config)
    encoded = encode_valc(M, tape, max_t=horizon)
    n = len(tape)
    t = oca_run(M, tape, max_t=horizon)
    expected = valc_length(n, t)
    print(encoded.serialize(), file=out)
    print(f"pairs={len(encoded)} n={n} t={t} expected={expected}", file=out)
    return EXIT_OK if len(encoded) == expected else EXIT_REJECT


def cmd_oca_check(args: argparse.Namespace, config: GlobalConfig, out: IO[str]) -> int:
    M = resolve_oca(args.oca)
    tokens = read_valc_tokens(args.valc_file)
    trace = decode_valc(M, tokens)
    if trace is None:
        print("INVALID", file=out)
        return EXIT_REJECT
    print(f"VALID n={len(trace.input_word)} t={trace.steps}", file=out)
    return EXIT_OK


def add_argparsers(subparsers: argparse._SubParsersAction) -> List[argparse.ArgumentParser]:
    oca = subparsers.add_parser("oca", help="One-way cellular automata")
    actions = oca.add_subparsers(dest="oca_command", required=True)

    s = actions.add_parser("run", help="First acceptance time of a word")
    s.add_argument("oca", help="OCA file or gallery automaton")
    s.add_argument("word")
    s.add_argument("--max-t", type=int, default=None, help="horizon (default: factor * n^2)")
    s.set_defaults(main=cmd_oca_run)

    s = actions.add_parser("valc", help="Encode the accepting computation as pair tokens")
    s.add_argument("oca", help="OCA file or gallery automaton")
    s.add_argument("word")
    s.add_argument("--max-t", type=int, default=None)
    s.set_defaults(main=cmd_oca_valc)

    s = actions.add_parser("check", help="Validate a pair-token file")
    s.add_argument("oca", help="OCA file or gallery automaton")
    s.add_argument("valc_file")
    s.set_defaults(main=cmd_oca_check)

    return [oca]
