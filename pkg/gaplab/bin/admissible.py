"""
`gaplab admissible` checks the edge-count, induced-subgraph and OL
concentration clauses of p-admissibility and prints the report as json.

The graph is sampled from G(n, p) unless --graph gives an edge-list file;
--p is the reference probability either way.  A failed clause is reported,
not treated as an error.

Example:
gaplab admissible --n 100 --p 3 --p-rule pc-multiple --seed 1
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
        "--graph",
        type=str,
        default=None,
        help="Edge-list file to check instead of a sampled graph"
    )
    argparser.add_argument(
        "--mode",
        choices=("exact", "monte-carlo"),
        default="monte-carlo",
        help="Enumerate everything (n <= 8) or sample"
    )
    argparser.add_argument(
        "--subset-samples",
        dest="subset_samples",
        type=int,
        default=10_000,
        help="Random vertex subsets in Monte Carlo mode"
    )
    argparser.add_argument(
        "--permutation-samples",
        dest="permutation_samples",
        type=int,
        default=1_000,
        help="Random permutations in Monte Carlo mode"
    )
    add_out_arg(argparser)


def main(*args, **kwargs):
    from gaplab.bin.admissible_main import main
    return main(*args, **kwargs)
