"""
Parsed flag values -> seeds, probabilities and output streams.
"""
import sys
from contextlib import contextmanager
from typing import IO, Iterator, Optional

from gaplab.exceptions import ConfigurationError
from gaplab.graph_core.seed import Seed
from gaplab.harness.config import (ExperimentConfig, GridPoint, make_p_rule,
                                   resolve_grid)


def resolve_p(n: int, p: Optional[float], p_rule: str) -> float:
    """Edge probability for ``n`` under the chosen rule."""
    if p is None:
        raise ConfigurationError("--p is required")
    points, failures = resolve_grid(
        ExperimentConfig(grid=[GridPoint(n=n, p_rule=make_p_rule(p, p_rule))])
    )
    if failures:
        raise ConfigurationError(failures[0].reason)
    return points[0].p


def resolve_seed(seed: Optional[int]) -> Seed:
    return Seed(seed) if seed is not None else Seed.from_env()


@contextmanager
def output_stream(path: Optional[str]) -> Iterator[IO[str]]:
    """An opened ``path``, or stdout when no path is given."""
    if path is None:
        yield sys.stdout
        return
    with open(path, "w", newline="") as fd:
        yield fd
