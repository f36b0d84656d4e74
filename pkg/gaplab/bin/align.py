"""
`gaplab align` runs the greedy online aligner on one pair of graphs and
prints the run record as a json line.

The pair is sampled from G(n, p) (streams G and Gs under --seed) unless
both --g and --gs edge-list files are given.

Example:
gaplab align --n 1000 --p 0.05 --eta 0.05 --seed 7
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

    add_instance_args(argparser, n_required=False)
    argparser.add_argument(
        "--eta",
        type=float,
        default=0.05,
        help="Window parameter in [0, 0.5)"
    )
    argparser.add_argument(
        "--g",
        type=str,
        default=None,
        help="Edge-list file of the first graph"
    )
    argparser.add_argument(
        "--gs",
        type=str,
        default=None,
        help="Edge-list file of the second graph"
    )
    argparser.add_argument(
        "--tie-break",
        dest="tie_break",
        choices=("uniform", "perturbation"),
        default="uniform",
        help="Uniform draw from the argmax set, or U(0, 1/n^2) perturbation"
    )
    argparser.add_argument(
        "--literal",
        action="store_true",
        help="Materialize the perturbation noise matrix"
    )
    argparser.add_argument(
        "--greedy-tail",
        dest="greedy_tail",
        action="store_true",
        help="Match the final segment greedily as well"
    )
    argparser.add_argument(
        "--timing",
        action="store_true",
        help="Fill in runtime_ms (output is then no longer reproducible)"
    )
    argparser.add_argument(
        "--trajectory",
        type=str,
        default=None,
        help="Also write the per-step trajectory CSV to this path"
    )
    add_out_arg(argparser)


def main(*args, **kwargs):
    from gaplab.bin.align_main import main
    return main(*args, **kwargs)
