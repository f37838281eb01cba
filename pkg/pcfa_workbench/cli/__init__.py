"""Command-line front end: python -m pcfa_workbench.cli or pcfa-workbench."""
import argparse
import logging
import sys
from typing import IO, List, Optional

from pcfa_workbench.cli import gallery_commands, oca_commands, system_commands
from pcfa_workbench.cli.common import EXIT_ERROR
from pcfa_workbench.configs import GlobalConfig, app_configs
from pcfa_workbench.errors import BadParamError, WorkbenchError
from pcfa_workbench.utils.logger import setup_logging

logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pcfa-workbench", description="Parallel communicating finite automata workbench")
    parser.add_argument("--workers", type=int, default=None, help="process fan-out for sweep and crosscheck")
    parser.add_argument("--log-level", default=None, help="DEBUG | INFO | WARNING | ERROR")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for module in (system_commands, gallery_commands, oca_commands):
        module.add_argparsers(subparsers)
    return parser


def _effective_config(args: argparse.Namespace) -> GlobalConfig:
    overrides = {}
    if args.workers is not None:
        if args.workers < 1:
            raise BadParamError("--workers must be at least 1")
        overrides["WORKERS"] = args.workers
    if args.log_level is not None:
        level = args.log_level.upper()
        if not isinstance(logging.getLevelName(level), int):
            raise BadParamError(f"unknown log level {args.log_level!r}")
        overrides["LOG_LEVEL"] = level
    return app_configs.model_copy(update=overrides) if overrides else app_configs


def main(argv: Optional[List[str]] = None, out: Optional[IO[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    out = out or sys.stdout
    try:
        config = _effective_config(args)
        setup_logging(config)
        return args.main(args, config, out)
    except WorkbenchError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR
    except Exception as e:
        logger.error(f"[CLI] unexpected failure in {args.command}: {e}", exc_info=True)
        return EXIT_ERROR
