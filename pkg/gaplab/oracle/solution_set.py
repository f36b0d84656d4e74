"""
beta-optimal solution sets of small instances.

A permutation is beta-optimal when its centered overlap reaches
``beta * scale``, the scale being S_{n,p} or D_{n,p} per regime.  At small
n the asymptotic scales can be meaningless, so every threshold also
accepts an absolute centered value that replaces ``beta * scale``.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Iterator, Optional

import numpy as np

from gaplab.exceptions import DomainError
from gaplab.graph_core.graph import (Graph, check_same_size,
                                     expected_pair_density)
from gaplab.graph_core.permutation import Permutation
from gaplab.oracle.brute import BRUTE_CAP, check_cap
from gaplab.oracle.enumeration import batch_overlaps, branch_table, chunks
from gaplab.thresholds.regime import Regime, regime_scale
from gaplab.thresholds.scales import e_np

logger = logging.getLogger(__name__)

# integer overlaps within this of a real threshold count as reaching it
THRESHOLD_TOLERANCE = 1e-9


@dataclass(frozen=True)
class SolutionThreshold:
    """
    Attributes
    ----------
    beta : float
        Multiple of the regime scale.
    regime : Regime
        Selects S_{n,p} (Sparse) or D_{n,p} (Dense).
    p : float, optional
        Edge probability for centering and scaling; defaults to the pooled
        edge density of the instance.
    absolute : float, optional
        Centered threshold used instead of ``beta * scale``.
    """
    beta: float = 0.0
    regime: Regime = Regime.Dense
    p: Optional[float] = None
    absolute: Optional[float] = None

    def resolve(self, n: int, *graphs: Graph) -> ResolvedThreshold:
        p = self.p if self.p is not None else expected_pair_density(*graphs)
        if self.absolute is not None:
            scale = None
            centered = float(self.absolute)
        else:
            if self.regime is Regime.Critical:
                raise DomainError("No solution-set scale in the critical window")
            scale = regime_scale(n, p, self.regime)
            centered = self.beta * scale
        mean = e_np(n, p)
        required = math.ceil(mean + centered - THRESHOLD_TOLERANCE)
        return ResolvedThreshold(p=p, scale=scale, centered=centered, required_overlap=required)


@dataclass(frozen=True)
class ResolvedThreshold:
    p: float
    scale: Optional[float]
    centered: float
    required_overlap: int


@dataclass
class SolutionSet:
    beta: float
    scale: Optional[float]
    threshold: float
    required_overlap: int
    members: np.ndarray

    @property
    def count(self) -> int:
        return int(self.members.shape[0])

    def __len__(self) -> int:
        return self.count

    def __iter__(self) -> Iterator[Permutation]:
        for row in self.members:
            yield Permutation(row)

    def __contains__(self, pi: Permutation) -> bool:
        return bool(np.any(np.all(self.members == pi.forward, axis=1)))


def solution_set(g: Graph, gs: Graph, threshold: SolutionThreshold,
                 cap: int = BRUTE_CAP) -> SolutionSet:
    """Every permutation (lexicographic order) clearing the threshold."""
    n = check_same_size(g, gs)
    check_cap(n, cap)
    resolved = threshold.resolve(n, g, gs)
    target = gs.dense()
    members = []
    for first in range(n):
        for block in chunks(branch_table(n, first)):
            values = batch_overlaps(block, g.edges, target)
            members.append(block[values >= resolved.required_overlap])
    rows = np.concatenate(members) if members else np.zeros((0, n), dtype=np.int8)
    logger.debug(f"solution_set: n={n} required overlap {resolved.required_overlap}, "
                 f"{rows.shape[0]} members")
    return SolutionSet(
        beta=threshold.beta,
        scale=resolved.scale,
        threshold=resolved.centered,
        required_overlap=resolved.required_overlap,
        members=rows,
    )


def enumerate_solution_set(g: Graph, gs: Graph, beta: float, regime: Regime,
                           cap: int = BRUTE_CAP, p: Optional[float] = None,
                           absolute_threshold: Optional[float] = None) -> SolutionSet:
    """
    S_beta(g, gs): all permutations with centered overlap >= beta * scale.

    Raises
    ------
    CapExceededError
        If n exceeds ``cap``.
    DomainError
        If the regime scale is undefined for (n, p).
    """
    return solution_set(
        g, gs, SolutionThreshold(beta=beta, regime=regime, p=p, absolute=absolute_threshold), cap
    )


def in_solution_set(g: Graph, gs: Graph, pi: Permutation, threshold: SolutionThreshold) -> bool:
    """Membership test for one permutation, without enumeration."""
    n = check_same_size(g, gs, pi)
    resolved = threshold.resolve(n, g, gs)
    value = batch_overlaps(pi.forward[None, :], g.edges, gs.dense())[0]
    return bool(value >= resolved.required_overlap)
