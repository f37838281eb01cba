"""gallery list | emit"""
import argparse
from typing import IO, List

from pcfa_workbench.cli.common import EXIT_OK
from pcfa_workbench.configs import GlobalConfig
from pcfa_workbench.core.models import SystemDef
from pcfa_workbench.core.system_file import print_system
from pcfa_workbench.gallery import gallery_registry
from pcfa_workbench.oca.oca_file import print_oca


def cmd_gallery_list(args: argparse.Namespace, config: GlobalConfig, out: IO[str]) -> int:
    for entry in gallery_registry.entries():
        language = entry.language or "-"
        print(f"{entry.name}\t{entry.kind}\t{language}\t{entry.description}", file=out)
    return EXIT_OK


def cmd_gallery_emit(args: argparse.Namespace, config: GlobalConfig, out: IO[str]) -> int:
    built = gallery_registry.build(args.name)
    text = print_system(built) if isinstance(built, SystemDef) else print_oca(built)
    out.write(text)
    return EXIT_OK


def add_argparsers(subparsers: argparse._SubParsersAction) -> List[argparse.ArgumentParser]:
    gallery = subparsers.add_parser("gallery", help="Built-in systems and automata")
    actions = gallery.add_subparsers(dest="gallery_command", required=True)

    s = actions.add_parser("list", help="List gallery entries")
    s.set_defaults(main=cmd_gallery_list)

    s = actions.add_parser("emit", help="Print an entry in its file format")
    s.add_argument("name")
    s.set_defaults(main=cmd_gallery_emit)

    return [gallery]
