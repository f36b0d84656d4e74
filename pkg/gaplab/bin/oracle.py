"""
`gaplab oracle` computes the exact maximum overlap of a small G(n, p) pair
by enumerating all n! permutations, runs the greedy aligner on the same
pair, and checks that greedy never beats the optimum.

Example:
gaplab oracle --n 6 --p 0.4 --seed 3
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
        default=0.0,
        help="Window parameter of the greedy run"
    )
    argparser.add_argument(
        "--cap",
        type=int,
        default=10,
        help="Largest n to enumerate"
    )
    argparser.add_argument(
        "--workers",
        type=int,
        default=1,
        help="Processes to enumerate first-image branches on"
    )
    add_out_arg(argparser)


def main(*args, **kwargs):
    from gaplab.bin.oracle_main import main
    return main(*args, **kwargs)
