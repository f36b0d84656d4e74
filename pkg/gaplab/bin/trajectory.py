"""
`gaplab trajectory` records the per-step gains of one greedy run on a
G(n, p) pair and checks them against the first, middle and last step
predictions of the dense regime.

The trajectory CSV goes to --out (default stdout); the event summary is
logged and, with --events, written as json.

Example:
gaplab trajectory --n 2000 --p 3 --p-rule pc-multiple --eta 0.05 --slack 0.5
"""
from __future__ import annotations

import argparse
import logging

from gaplab.bin.arguments import add_instance_args, add_out_arg

logger = logging.getLogger(__name__)


DESCRIPTION = __doc__


def build_arg_parser(argparser=None):
    if argparser is None:
        argparser = argparse.ArgumentParser()

    argparser.description = DESCRIPTION
    argparser.formatter_class = argparse.RawTextHelpFormatter

    add_instance_args(argparser)
    argparser.add_argument(
        "--eta",
        type=float,
        default=0.05,
        help="Window parameter in [0, 0.5)"
    )
    argparser.add_argument(
        "--slack",
        type=float,
        default=0.5,
        help="Middle steps must clear s p^2 + sqrt(2 (1 - slack) s p^2 log n)"
    )
    argparser.add_argument(
        "--good-event",
        dest="good_event",
        action="store_true",
        help="Also check the regularity of G on the greedy window"
    )
    argparser.add_argument(
        "--events",
        type=str,
        default=None,
        help="Write the event summary json to this path"
    )
    add_out_arg(argparser, help_text="Trajectory CSV path, default stdout")


def main(*args, **kwargs):
    from gaplab.bin.trajectory_main import main
    return main(*args, **kwargs)
