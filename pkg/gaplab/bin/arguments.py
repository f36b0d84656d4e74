"""
Flags shared by several subcommands.  Kept free of heavy imports so that
building the parsers stays cheap; see `gaplab.bin.resolve` for turning
the parsed values into objects.
"""
import argparse

P_RULE_CHOICES = ("absolute", "pc-multiple", "power")


def add_seed_arg(argparser: argparse.ArgumentParser):
    argparser.add_argument(
        "--seed",
        type=int,
        default=None,
        help="Root seed.  Defaults to $GAPLAB_SEED, else 0."
    )


def add_instance_args(argparser: argparse.ArgumentParser, n_required: bool = True):
    argparser.add_argument(
        "--n",
        type=int,
        required=n_required,
        help="Number of vertices"
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
        help=(
            "How --p is read: an absolute probability, a multiple of "
            "p_c = sqrt(log n / n), or the exponent a of n^-a"
        )
    )
    add_seed_arg(argparser)


def add_out_arg(argparser: argparse.ArgumentParser, help_text: str = "Output file, default stdout"):
    argparser.add_argument(
        "--out",
        type=str,
        default=None,
        help=help_text
    )
