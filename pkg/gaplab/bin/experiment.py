"""
`gaplab experiment` runs a convergence sweep: independent G(n, p) pairs
aligned greedily at every grid point, several replicates each.

Either give a json config with --config, or build a grid from --n (one or
more sizes), --p and --p-rule.  Flags given alongside --config override
the file.  Records (json lines) and the summary (CSV) go to --out and
--summary; when neither is set, --format picks which one is printed.

Example:
gaplab experiment --n 1000 2000 --p 3 --p-rule pc-multiple --eta 0.02 --reps 5
"""
from __future__ import annotations

import argparse
import logging

from gaplab.bin.arguments import P_RULE_CHOICES, add_seed_arg

logger = logging.getLogger(__name__)


DESCRIPTION = __doc__


def build_arg_parser(argparser=None):
    if argparser is None:
        argparser = argparse.ArgumentParser()

    argparser.description = DESCRIPTION
    argparser.formatter_class = argparse.RawTextHelpFormatter

    argparser.add_argument(
        "--config",
        type=str,
        default=None,
        help="Experiment configuration json file, flat (flag names) or nested"
    )
    argparser.add_argument(
        "--id",
        dest="experiment_id",
        type=str,
        default=None,
        help="Experiment id, part of every replicate's stream label"
    )
    argparser.add_argument(
        "--n",
        type=int,
        nargs="+",
        default=None,
        help="Graph sizes of the grid"
    )
    argparser.add_argument(
        "--p",
        type=float,
        default=None,
        help="Edge probability, or the parameter of --p-rule"
    )
    argparser.add_argument(
        "--p-rule",
        dest="p_rule",
        choices=P_RULE_CHOICES,
        default="absolute",
    )
    argparser.add_argument(
        "--eta",
        type=float,
        default=None,
    )
    argparser.add_argument(
        "--reps",
        type=int,
        default=None,
        help="Replicates per grid point"
    )
    argparser.add_argument(
        "--workers",
        type=int,
        default=None,
        help="Worker processes; results do not depend on this"
    )
    add_seed_arg(argparser)
    argparser.add_argument(
        "--out",
        type=str,
        default=None,
        help="Records (json lines) path"
    )
    argparser.add_argument(
        "--summary",
        type=str,
        default=None,
        help="Summary CSV path"
    )
    argparser.add_argument(
        "--format",
        dest="output_format",
        choices=("csv", "jsonl"),
        default="csv",
        help="What to print when no output path is set"
    )
    argparser.add_argument(
        "--timing",
        action="store_true",
        help="Record runtime_ms per replicate"
    )
    argparser.add_argument(
        "--save-config",
        dest="config_out",
        type=str,
        default=None,
        help="Write the effective configuration to this path"
    )


def main(*args, **kwargs):
    from gaplab.bin.experiment_main import main
    return main(*args, **kwargs)
