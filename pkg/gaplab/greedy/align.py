"""
Greedy online alignment.

Step ``s`` (1-based) sees only the edges of ``g`` between ``s`` and earlier
vertices, the whole of ``gs`` and the choices already made.  It picks
``pi*(s)`` among the unused vertices ``r`` maximizing

    sum over j < s with g_js = 1 of gs_{pi*(j), r}

Randomness for step ``s`` comes from the streams
``cfg.seed / "tie-break" / owner / s`` and, for literal perturbation,
``cfg.seed / "perturbation" / owner / s``; ``owner`` is the tree node that
owns the step in coupled runs and ``(0,)`` for a standalone run.
"""
from __future__ import annotations

import dataclasses
import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from gaplab.exceptions import DomainError, PreconditionError
from gaplab.graph_core.graph import (Graph, check_same_size,
                                     expected_pair_density, pair_count)
from gaplab.graph_core.permutation import Permutation
from gaplab.greedy.config import GreedyConfig, TieBreak
from gaplab.greedy.trajectory import (TrajectoryRecord, step_gains,
                                      to_records)
from gaplab.thresholds.regime import (Regime, classify_regime,
                                      normalized_ratio, regime_scale)
from gaplab.typing_helper import StepOwner

logger = logging.getLogger(__name__)

STANDALONE_OWNER = (0,)
# literal noise draws up to n^2 reals per run; larger n is refused
LITERAL_PERTURBATION_CAP = 4000


@dataclass
class AlignmentResult:
    pi_star: Permutation
    overlap_value: int
    centered_value: float
    ratio: Optional[float]
    p: float
    regime: Regime
    scale: Optional[float]
    algorithm: str
    accumulation_ops: int
    # closed-form cost of a full scan per step, not counted
    naive_ops: int
    trajectory: Optional[List[TrajectoryRecord]] = None


def _standalone_owner(step: int) -> Tuple[int, ...]:
    return STANDALONE_OWNER


class _ScoreKernel:
    """Per-step integer scores sum_{j in N_s} gs[pi(j), :]."""

    def __init__(self, gs: Graph, dense_threshold: float):
        self.gs = gs
        self.n = gs.n
        self.degrees = np.diff(gs.indptr)
        self.dense = None
        if expected_pair_density(gs) > dense_threshold:
            self.dense = gs.dense().astype(np.int32)

    def scores(self, images: np.ndarray) -> Tuple[np.ndarray, int]:
        increments = int(self.degrees[images].sum())
        if images.size == 0:
            return np.zeros(self.n, dtype=np.int64), 0
        if self.dense is not None:
            return self.dense[images].sum(axis=0, dtype=np.int64), increments
        starts = self.gs.indptr[images]
        lengths = self.degrees[images]
        offsets = np.cumsum(lengths) - lengths
        flat = (np.arange(increments, dtype=np.int64)
                - np.repeat(offsets, lengths) + np.repeat(starts, lengths))
        return np.bincount(self.gs.indices[flat], minlength=self.n), increments


def _check_literal_cap(n: int) -> None:
    if n > LITERAL_PERTURBATION_CAP:
        raise PreconditionError(
            f"Literal perturbation materializes n^2 reals; n={n} exceeds "
            f"{LITERAL_PERTURBATION_CAP}"
        )


def _literal_noise(rows: int, n: int, cfg: GreedyConfig,
                   owner: Tuple[int, ...], step: int) -> np.ndarray:
    """
    Summed U(0, 1/n^2) noise on the ``rows`` entries of ``gs`` read at ``step``.

    The sum stays below ``1/n``, so it only orders candidates that tie on
    the integer score.
    """
    rng = cfg.seed.child("perturbation", owner, step).generator()
    return rng.uniform(0.0, 1.0 / (n * n), size=(rows, n)).sum(axis=0)


def _break_tie(ties: np.ndarray, cfg: GreedyConfig, owner: Tuple[int, ...], step: int) -> int:
    if ties.size == 1:
        return int(ties[0])
    rng = cfg.seed.child("tie-break", owner, step).generator()
    if cfg.tie_break is TieBreak.Perturbation:
        return int(ties[np.argmax(rng.random(ties.size))])
    return int(ties[rng.integers(ties.size)])


def run_greedy(g: Graph, gs: Graph, cfg: GreedyConfig,
               owner_of: StepOwner = _standalone_owner) -> AlignmentResult:
    """
    Greedy alignment with a caller-supplied owner of each step's randomness.

    `greedy_align` uses a constant owner; coupled tree runs pass the tree
    node whose column block contains the step.
    """
    n = check_same_size(g, gs)
    if n < 2:
        raise PreconditionError(f"Alignment needs n >= 2, got n={n}")
    a_eta, b_eta = cfg.window(n)
    last_greedy = n if cfg.greedy_tail else b_eta

    pi = np.full(n, -1, dtype=np.int64)
    remaining = np.ones(n, dtype=bool)
    pi[:a_eta] = np.arange(a_eta)
    remaining[:a_eta] = False

    kernel = _ScoreKernel(gs, cfg.dense_threshold)
    literal = cfg.tie_break is TieBreak.Perturbation and cfg.literal_perturbation
    if literal:
        _check_literal_cap(n)

    accumulation_ops = 0
    naive_ops = 0
    for step in range(a_eta + 1, last_greedy + 1):
        v = step - 1
        nbrs = g.neighbors0(v)
        prior = nbrs[:np.searchsorted(nbrs, v)]
        images = pi[prior]
        scores, increments = kernel.scores(images)
        accumulation_ops += increments
        naive_ops += (step - 1) * (n - step + 1)

        owner = owner_of(step)
        best = scores[remaining].max()
        ties = np.flatnonzero((scores == best) & remaining)
        if literal and images.size:
            perturbed = scores + _literal_noise(images.size, n, cfg, owner, step)
            perturbed[~remaining] = -np.inf
            ties = np.flatnonzero(perturbed == perturbed.max())
        choice = _break_tie(ties, cfg, owner, step)
        pi[v] = choice
        remaining[choice] = False

    # ascending completion of the final segment
    tail = np.arange(last_greedy, n)
    pi[tail] = np.flatnonzero(remaining)

    pi_star = Permutation(pi)
    p = cfg.p if cfg.p is not None else expected_pair_density(g, gs)
    n_s, o_s = step_gains(g, gs, pi_star)
    overlap_value = int(o_s.sum())
    centered = overlap_value - pair_count(n) * p * p
    regime = classify_regime(n, p)
    try:
        scale = regime_scale(n, p, regime)
    except DomainError:
        scale = None
    result = AlignmentResult(
        pi_star=pi_star,
        overlap_value=overlap_value,
        centered_value=centered,
        ratio=normalized_ratio(centered, scale),
        p=p,
        regime=regime,
        scale=scale,
        algorithm=cfg.algorithm_tag,
        accumulation_ops=accumulation_ops,
        naive_ops=naive_ops,
        trajectory=to_records(n_s, o_s, p) if cfg.capture_trajectory else None,
    )
    logger.debug(
        f"{result.algorithm}: n={n} eta={cfg.eta} overlap={overlap_value} "
        f"ratio={result.ratio}"
    )
    return result


def greedy_align(g: Graph, gs: Graph, cfg: GreedyConfig) -> AlignmentResult:
    """
    Align ``g`` to ``gs`` greedily, vertex by vertex.

    Parameters
    ----------
    g, gs : Graph
        Graphs on the same vertex set.
    cfg : GreedyConfig
        Window, tie-breaking and capture options.

    Returns
    -------
    AlignmentResult
    """
    return run_greedy(g, gs, cfg)


def greedy_align_perturbed(g: Graph, gs: Graph, cfg: GreedyConfig) -> AlignmentResult:
    """
    Greedy alignment against ``gs`` perturbed by i.i.d. U(0, 1/n^2) noise.

    The perturbation never outweighs an integer score gap, so each choice
    lies in the unperturbed argmax set; among that set it is uniform.
    """
    return run_greedy(g, gs, dataclasses.replace(cfg, tie_break=TieBreak.Perturbation))
