from __future__ import annotations

import functools
import itertools
import logging
import sys
from contextlib import contextmanager
from copy import copy
from typing import Tuple

import pytest

from gaplab.graph_core.graph import Graph
from gaplab.graph_core.sampling import sample_er
from gaplab.graph_core.seed import Seed
from gaplab.logging import setup_logging


@pytest.fixture(autouse=True)
def central_logging_setup(caplog):
    # Set pytest debugging level, and capture that output
    # Without this logging calls made after the test may fire after the listener
    # thread is closed.
    caplog.set_level(logging.DEBUG)
    # set debug level in case people are curious
    setup_logging(logging.DEBUG)


@pytest.fixture(autouse=True)
def clear_seed_env(monkeypatch: pytest.MonkeyPatch):
    # a developer's GAPLAB_SEED must not leak into seed-default tests
    monkeypatch.delenv("GAPLAB_SEED", raising=False)


@contextmanager
def cli_args(args):
    """
    Context manager for running a block of code with a specific set of
    command-line arguments.
    """
    prev_args = sys.argv
    sys.argv = args
    yield
    sys.argv = prev_args


@contextmanager
def restore_logging():
    """
    Context manager for reverting our logging config after testing a function
    that configures the logging.
    """
    prev_handlers = copy(logging.root.handlers)
    yield
    logging.root.handlers = prev_handlers


def arg_variants(variants: Tuple[Tuple[Tuple[str, ...], ...], ...]):
    """
    Collapse argument variants into all possible combinations.
    """
    for idx, arg_set in enumerate(itertools.product(*variants), 1):
        item = functools.reduce(
            lambda x, y: x+y,
            arg_set,
        )
        summary = f"args{idx}_" + ",".join(item)
        yield pytest.param(item, id=summary)


def er_pair(n: int, p: float, root: int = 0) -> Tuple[Graph, Graph]:
    seed = Seed(root)
    return sample_er(n, p, seed.child("G")), sample_er(n, p, seed.child("Gs"))


@pytest.fixture
def path_graph() -> Graph:
    # 1 - 2 - 3 - 4
    return Graph.from_edges(4, [(1, 2), (2, 3), (3, 4)])
