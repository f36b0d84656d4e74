"""
`gaplab` is the top-level command for the graph alignment toolkit.

Subcommands:
"""

import argparse
import importlib
import logging
import sys
from typing import Callable, Dict, List, Tuple

import gaplab
from gaplab.exceptions import GapLabError
from gaplab.logging import configure_log_directory, setup_logging

# each module defines `build_arg_parser` and `main`; heavy imports belong
# in its `<module>_main.py`, loaded only when the subcommand runs
COMMAND_TO_MODULE = {
    "generate": "generate",
    "align": "align",
    "oracle": "oracle",
    "admissible": "admissible",
    "correlate": "correlate",
    "ogp-scan": "ogp_scan",
    "experiment": "experiment",
    "trajectory": "trajectory",
}

Command = Tuple[Callable, Callable]


def _try_import(module_name: str):
    return importlib.import_module(f".{module_name}", "gaplab.bin")


def _build_commands() -> Tuple[Dict[str, Command], str]:
    commands: Dict[str, Command] = {}
    lines: List[str] = [__doc__.rstrip()]
    broken: List[str] = []
    for command, module_name in sorted(COMMAND_TO_MODULE.items()):
        try:
            module = _try_import(module_name)
        except Exception as ex:
            broken.append(f'WARNING: "gaplab {command}" is unavailable due to:'
                          f'\n\t{type(ex).__name__}: {ex}')
            continue
        commands[command] = (module.build_arg_parser, module.main)
        lines.append(f"    $ gaplab {command} --help")
    if broken:
        lines.append("")
        lines.extend(broken)
    return commands, "\n".join(lines)


COMMANDS, DESCRIPTION = _build_commands()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gaplab",
        description=DESCRIPTION,
        formatter_class=argparse.RawTextHelpFormatter,
    )
    parser.add_argument(
        "--version", "-V",
        action="version",
        version=gaplab.__version__,
        help="Show the gaplab version number and exit."
    )
    parser.add_argument(
        "--log", "-l", dest="log_level",
        default="INFO",
        type=str,
        help="Python logging level (e.g. DEBUG, INFO, WARNING)"
    )
    parser.add_argument(
        "--log-dir", dest="log_dir",
        type=str,
        default="",
        help="Directory for DEBUG log files.  No file logging when omitted."
    )
    subparsers = parser.add_subparsers(help="Possible subcommands")
    for name, (build_func, run_func) in COMMANDS.items():
        sub = subparsers.add_parser(name)
        build_func(sub)
        sub.set_defaults(func=run_func)
    return parser


def main():
    """Parse ``sys.argv``, set up logging and run the subcommand."""
    parser = build_parser()
    kwargs = vars(parser.parse_args())
    log_level = kwargs.pop("log_level")
    log_dir = kwargs.pop("log_dir")
    if log_dir:
        configure_log_directory(log_dir)
    setup_logging(log_level)
    logger = logging.getLogger("gaplab")

    func = kwargs.pop("func", None)
    if func is None:
        parser.print_help()
        return None
    logger.debug("%s(**%r)", func.__name__, kwargs)
    try:
        return func(**kwargs)
    except GapLabError as ex:
        logger.error(f"{type(ex).__name__}: {ex}")
        logger.debug("", exc_info=True)
        return 1


if __name__ == "__main__":
    sys.exit(main())
