"""
`gaplab correlate` builds correlated instances.

Without --alpha, samples a tree-correlated family and prints its manifest:
one line per tree node with the column block it owns, the edge labels it
draws and its stream label.  The full-size tree from --epsilon is
usually too large to instantiate, so --branching and --depth pick the
tree that is actually sampled.  With --align the greedy aligner runs on
every leaf against a shared second graph; with --detect-beta the
exhaustive forbidden-structure search runs (small n only).

With --alpha, samples a (2, alpha)-correlated pair into --out-dir.

Example:
gaplab correlate --n 200 --p 0.3 --branching 2 --depth 2 --align --seed 5
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
        "--epsilon",
        type=float,
        default=0.3,
        help="Gap parameter selecting the alpha schedule and branching factor"
    )
    argparser.add_argument(
        "--branching",
        type=int,
        default=None,
        help="Children per node of the sampled tree"
    )
    argparser.add_argument(
        "--depth",
        type=int,
        default=None,
        help="Depth of the sampled tree; alphas become k / depth"
    )
    argparser.add_argument(
        "--leaf-cap",
        dest="leaf_cap",
        type=int,
        default=64,
        help="Refuse trees with more leaves than this"
    )
    argparser.add_argument(
        "--alpha",
        type=float,
        default=None,
        help="Sample a (2, alpha)-correlated pair instead of a tree family"
    )
    argparser.add_argument(
        "--out-dir",
        dest="out_dir",
        type=str,
        default=None,
        help="Directory for the edge lists of the sampled graphs"
    )
    argparser.add_argument(
        "--align",
        action="store_true",
        help="Run coupled greedy alignments on every leaf"
    )
    argparser.add_argument(
        "--eta",
        type=float,
        default=0.0,
        help="Window parameter of the coupled greedy runs"
    )
    argparser.add_argument(
        "--detect-beta",
        dest="detect_beta",
        type=float,
        default=None,
        help="Search for the forbidden structure at this optimality level"
    )
    argparser.add_argument(
        "--regime",
        choices=("sparse", "dense"),
        default="dense",
        help="Scale the optimality level is measured in"
    )
    add_out_arg(argparser, help_text="Manifest file, default stdout")


def main(*args, **kwargs):
    from gaplab.bin.correlate_main import main
    return main(*args, **kwargs)
