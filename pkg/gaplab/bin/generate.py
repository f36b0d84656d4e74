"""
`gaplab generate` samples one G(n, p) graph and writes it as an edge list.

Example:
gaplab generate --n 100 --p 0.05 --seed 7 --out g.txt
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
        "--stream",
        type=str,
        default="G",
        help="Stream label under the root seed (align uses G and Gs)"
    )
    add_out_arg(argparser)


def main(*args, **kwargs):
    from gaplab.bin.generate_main import main
    return main(*args, **kwargs)
