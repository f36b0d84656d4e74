"""
`gaplab ogp-scan` runs the greedy aligner along the interpolation path
between two independent graphs G' = G^0 and G = G^N against a fixed
second graph Gs, and reports the overlap-gap, success, stability and
separated-ends events as json.  The four cannot hold together; if they do
the command fails.

With --alpha, instead searches a (2, alpha)-correlated pair for two
beta0-optimal permutations whose overlap falls inside the forbidden band,
printing the first such pair.

Example:
gaplab ogp-scan --n 6 --p 0.5 --beta0 0.999 --band-eta 0.05 --seed 2
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
        "--beta0",
        type=float,
        default=0.999,
        help="Optimality level of the solutions, in (sqrt(25/27), 1)"
    )
    argparser.add_argument(
        "--band-eta",
        dest="band_eta",
        type=float,
        default=0.05,
        help="Half width of the forbidden band around n/3, as a fraction of n"
    )
    argparser.add_argument(
        "--eta",
        type=float,
        default=0.0,
        help="Window parameter of the greedy runs"
    )
    argparser.add_argument(
        "--regime",
        choices=("sparse", "dense"),
        default="dense",
        help="Scale the optimality level is measured in"
    )
    argparser.add_argument(
        "--cap",
        type=int,
        default=10,
        help="Largest n for exhaustive solution sets"
    )
    argparser.add_argument(
        "--alpha",
        type=float,
        default=None,
        help="Search a (2, alpha) pair for a forbidden pair instead of scanning"
    )
    add_out_arg(argparser)


def main(*args, **kwargs):
    from gaplab.bin.ogp_scan_main import main
    return main(*args, **kwargs)
