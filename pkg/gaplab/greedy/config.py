from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Tuple

from gaplab.exceptions import DomainError
from gaplab.graph_core.seed import Seed

# guards floor(eta * n) against products like 0.29 * 100 = 28.999999999999996
FLOOR_TOLERANCE = 1e-9


class TieBreak(Enum):
    UniformSample = "uniform"
    Perturbation = "perturbation"


@dataclass(frozen=True)
class GreedyConfig:
    """
    Parameters of the greedy online aligner.

    Steps ``s <= floor(eta n)`` are matched to themselves, steps up to
    ``floor((1 - eta) n)`` are matched greedily, and the remaining vertices
    are completed in ascending order (or greedily with ``greedy_tail``).

    Attributes
    ----------
    eta : float
        Window parameter in [0, 1/2).  ``eta = 0`` is the plain greedy
        matcher.
    tie_break : TieBreak
        ``UniformSample`` draws a uniform member of the argmax set.
        ``Perturbation`` ranks the argmax set by i.i.d. uniform keys, the
        lazy form of perturbing the second graph by U(0, 1/n^2) noise.
    seed : Seed
        Root of the per-step tie-break streams.
    capture_trajectory : bool
        Keep one `TrajectoryRecord` per step.
    literal_perturbation : bool
        With ``Perturbation``, draw explicit U(0, 1/n^2) noise for every
        entry of the second graph a step reads, instead of the lazy ranking.
    greedy_tail : bool
        Match the final segment greedily too.
    p : float, optional
        Edge probability used for centering.  Defaults to the pooled edge
        density of the two inputs.
    dense_threshold : float
        Second-graph density above which scores are summed from the dense
        adjacency matrix instead of neighbor lists.
    """
    eta: float = 0.0
    tie_break: TieBreak = TieBreak.UniformSample
    seed: Seed = field(default_factory=lambda: Seed(0))
    capture_trajectory: bool = False
    literal_perturbation: bool = False
    greedy_tail: bool = False
    p: Optional[float] = None
    dense_threshold: float = 0.15

    def __post_init__(self):
        if not 0 <= self.eta < 0.5:
            raise DomainError(f"eta must lie in [0, 0.5), got {self.eta}")
        if self.p is not None and not 0 <= self.p <= 1:
            raise DomainError(f"p must lie in [0, 1], got {self.p}")

    def window(self, n: int) -> Tuple[int, int]:
        """(a_eta, b_eta) = (floor(eta n), floor((1 - eta) n))."""
        a_eta = math.floor(self.eta * n + FLOOR_TOLERANCE)
        b_eta = math.floor((1 - self.eta) * n + FLOOR_TOLERANCE)
        return a_eta, b_eta

    @property
    def algorithm_tag(self) -> str:
        tag = "greedy"
        if self.tie_break is TieBreak.Perturbation:
            tag += "-perturbed-literal" if self.literal_perturbation else "-perturbed"
        if self.greedy_tail:
            tag += "-tail"
        return tag
