"""
Per-step diagnostics of a greedy run.

For step ``s`` (1-based) ``n_s`` counts the earlier neighbors of ``s`` in
``g`` and ``o_s`` counts those whose images are adjacent to ``pi*(s)`` in
``gs``; the ``o_s`` sum to the overlap of the run.
"""
from __future__ import annotations

import csv
import logging
import math
from dataclasses import astuple, dataclass, fields
from pathlib import Path
from typing import IO, List, Optional, Sequence, Tuple, Union

import numpy as np

from gaplab.exceptions import MissingTrajectoryError
from gaplab.graph_core.graph import Graph, check_same_size
from gaplab.graph_core.permutation import Permutation

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TrajectoryRecord:
    s: int
    n_s: int
    o_s: int
    standardized_gain: Optional[float]


def step_gains(g: Graph, gs: Graph, pi: Permutation) -> Tuple[np.ndarray, np.ndarray]:
    """Arrays (n_s, o_s) indexed by 0-based step."""
    n = check_same_size(g, gs, pi)
    later = g.edges[:, 1]
    n_s = np.bincount(later, minlength=n)
    if g.edge_count == 0:
        return n_s, np.zeros(n, dtype=np.int64)
    images = pi.forward[g.edges]
    hit = gs.has_pairs(images[:, 0], images[:, 1])
    o_s = np.bincount(later[hit], minlength=n)
    return n_s, o_s


def standardized_gain(s: int, o_s: int, p: float, n: int) -> Optional[float]:
    """(o_s - s p^2) / sqrt(2 s p^2 log n), None when the denominator vanishes."""
    mean = s * p * p
    if mean <= 0 or n < 2:
        return None
    return (o_s - mean) / math.sqrt(2.0 * mean * math.log(n))


def to_records(n_s: np.ndarray, o_s: np.ndarray, p: float) -> List[TrajectoryRecord]:
    n = n_s.size
    return [
        TrajectoryRecord(
            s=s,
            n_s=int(n_s[s - 1]),
            o_s=int(o_s[s - 1]),
            standardized_gain=standardized_gain(s, int(o_s[s - 1]), p, n),
        )
        for s in range(1, n + 1)
    ]


def trajectory(result) -> List[TrajectoryRecord]:
    """The captured trajectory of an `AlignmentResult`."""
    if result.trajectory is None:
        raise MissingTrajectoryError(
            "Run was not configured with capture_trajectory=True"
        )
    return result.trajectory


TRAJECTORY_COLUMNS = tuple(f.name for f in fields(TrajectoryRecord))


def write_trajectory_csv(records: Sequence[TrajectoryRecord], target: Union[str, Path, IO[str]]):
    """CSV with columns s, n_s, o_s, standardized_gain; undefined gains are empty."""
    if isinstance(target, (str, Path)):
        with open(target, "w", newline="") as fd:
            return write_trajectory_csv(records, fd)
    writer = csv.writer(target, lineterminator="\n")
    writer.writerow(TRAJECTORY_COLUMNS)
    for record in records:
        writer.writerow(["" if value is None else value for value in astuple(record)])


@dataclass
class StepEvents:
    """
    Checks of a dense greedy trajectory against the per-step predictions.

    first_holds : the identity prefix gains at least its mean minus eta D_{n,p}
    middle_fraction : share of greedy steps with
        o_s >= s p^2 + sqrt(2 (1 - slack) s p^2 log n)
    last_holds : every completion step has o_s >= s p^2 - sqrt(10 n p^2 log n)
    mean_middle_gain : mean standardized gain over the greedy steps
    """
    a_eta: int
    b_eta: int
    slack: float
    first_holds: bool
    middle_fraction: float
    middle_steps: int
    last_holds: bool
    mean_middle_gain: Optional[float]


def step_events(records: Sequence[TrajectoryRecord], p: float, eta: float,
                slack: float, window: Tuple[int, int]) -> StepEvents:
    n = len(records)
    a_eta, b_eta = window
    s = np.array([r.s for r in records], dtype=np.float64)
    o = np.array([r.o_s for r in records], dtype=np.float64)
    mean = s * p * p
    log_n = math.log(n) if n > 1 else 0.0
    dense_scale = math.sqrt(float(n) ** 3 * p * p * log_n)

    first = slice(0, a_eta)
    first_holds = bool(o[first].sum() >= mean[first].sum() - eta * dense_scale)

    middle = slice(a_eta, b_eta)
    threshold = mean[middle] + np.sqrt(2.0 * (1.0 - slack) * mean[middle] * log_n)
    middle_steps = b_eta - a_eta
    cleared = int(np.count_nonzero((mean[middle] > 0) & (o[middle] >= threshold)))
    middle_fraction = cleared / middle_steps if middle_steps else 0.0

    last = slice(b_eta, n)
    last_bound = mean[last] - math.sqrt(10.0 * n * p * p * log_n)
    last_holds = bool(np.all(o[last] >= last_bound))

    gains = [r.standardized_gain for r in records[a_eta:b_eta] if r.standardized_gain is not None]
    mean_gain = float(np.mean(gains)) if gains else None
    return StepEvents(
        a_eta=a_eta,
        b_eta=b_eta,
        slack=slack,
        first_holds=first_holds,
        middle_fraction=middle_fraction,
        middle_steps=middle_steps,
        last_holds=last_holds,
        mean_middle_gain=mean_gain,
    )


@dataclass
class GoodEvent:
    """
    Regularity of ``g`` on the greedy window: earlier-neighbor counts near
    s p, and pairwise common earlier neighbors at most 2 n p^2.
    """
    degree_holds: bool
    worst_degree_excess: float
    intersection_holds: bool
    max_intersection: int
    intersection_bound: float

    @property
    def holds(self) -> bool:
        return self.degree_holds and self.intersection_holds


def dense_good_event(g: Graph, p: float, window: Tuple[int, int]) -> GoodEvent:
    n = g.n
    a_eta, b_eta = window
    log_n = math.log(n) if n > 1 else 0.0
    steps = np.arange(a_eta, b_eta)
    n_s = np.bincount(g.edges[:, 1], minlength=n)[steps]
    expected = (steps + 1) * p
    with np.errstate(invalid="ignore"):
        excess = np.abs(n_s - expected) - np.sqrt(4.0 * expected * log_n)
    worst = float(excess.max()) if excess.size else -math.inf

    # column s of `earlier` marks the earlier neighbors of step s
    earlier = np.zeros((n, steps.size), dtype=np.float32)
    in_window = (g.edges[:, 1] >= a_eta) & (g.edges[:, 1] < b_eta)
    edges = g.edges[in_window]
    earlier[edges[:, 0], edges[:, 1] - a_eta] = 1.0
    common = earlier.T @ earlier
    np.fill_diagonal(common, 0.0)
    max_common = int(common.max()) if common.size else 0
    bound = 2.0 * n * p * p
    return GoodEvent(
        degree_holds=bool(worst <= 0),
        worst_degree_excess=worst,
        intersection_holds=max_common <= bound,
        max_intersection=max_common,
        intersection_bound=bound,
    )
