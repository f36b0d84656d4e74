"""
Level schedule of a tree-correlated family.

A schedule is a grid 0 = alpha_0 < ... < alpha_N = 1 with

    sum_k (alpha_k - alpha_{k-1}) sqrt(alpha_k + alpha_{k-1}) < beta_c + eps/3

and a branching factor

    D > max_k alpha_{k-1} / (2 delta (alpha_k - alpha_{k-1})),
    1 + delta = (beta_c + 2 eps/3) / (beta_c + eps/3).
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Sequence, Tuple

from gaplab.exceptions import DomainError, GapLabError
from gaplab.thresholds.scales import BETA_C

logger = logging.getLogger(__name__)

MAX_LEVELS = 100_000


def uniform_alphas(levels: int) -> Tuple[float, ...]:
    if levels < 1:
        raise DomainError(f"A schedule needs at least one level, got {levels}")
    return tuple(k / levels for k in range(levels + 1))


def riemann_sum(alphas: Sequence[float]) -> float:
    return math.fsum(
        (hi - lo) * math.sqrt(hi + lo) for lo, hi in zip(alphas[:-1], alphas[1:])
    )


def riemann_bound(epsilon: float) -> float:
    return BETA_C + epsilon / 3


def delta_for(epsilon: float) -> float:
    return (BETA_C + 2 * epsilon / 3) / (BETA_C + epsilon / 3) - 1


def branching_lower_bound(alphas: Sequence[float], delta: float) -> float:
    """max_k alpha_{k-1} / (2 delta (alpha_k - alpha_{k-1})); D must exceed it."""
    return max(lo / (2 * delta * (hi - lo)) for lo, hi in zip(alphas[:-1], alphas[1:]))


@dataclass(frozen=True)
class AlphaSchedule:
    n_levels: int
    alphas: Tuple[float, ...]
    riemann_sum: float
    epsilon: float
    d_branch: int
    delta: float

    def riemann_sum_holds(self) -> bool:
        return self.riemann_sum < riemann_bound(self.epsilon)

    def branching_holds(self) -> bool:
        return self.d_branch > branching_lower_bound(self.alphas, self.delta)

    def check(self):
        """Raise if either defining inequality fails."""
        if not self.riemann_sum_holds():
            raise GapLabError(
                f"Riemann sum {self.riemann_sum} not below {riemann_bound(self.epsilon)}"
            )
        if not self.branching_holds():
            raise GapLabError(f"Branching factor {self.d_branch} too small")
        if self.alphas[0] != 0 or self.alphas[-1] != 1 or len(self.alphas) != self.n_levels + 1:
            raise GapLabError(f"Malformed level grid {self.alphas}")


def choose_schedule(epsilon: float) -> AlphaSchedule:
    """
    Uniform grid alpha_k = k / N with the smallest N that satisfies the
    Riemann-sum bound and has mesh 1/N <= eps/3, plus the smallest D that
    satisfies the branching bound.
    """
    if not 0 < epsilon < 1:
        raise DomainError(f"epsilon must lie in (0, 1), got {epsilon}")
    bound = riemann_bound(epsilon)
    levels = max(1, math.ceil(3 / epsilon - 1e-9))
    while riemann_sum(uniform_alphas(levels)) >= bound:
        levels += 1
        if levels > MAX_LEVELS:
            raise GapLabError(f"No schedule found for epsilon={epsilon}")
    alphas = uniform_alphas(levels)
    delta = delta_for(epsilon)
    d_branch = math.floor(branching_lower_bound(alphas, delta)) + 1
    schedule = AlphaSchedule(
        n_levels=levels,
        alphas=alphas,
        riemann_sum=riemann_sum(alphas),
        epsilon=epsilon,
        d_branch=d_branch,
        delta=delta,
    )
    schedule.check()
    logger.debug(f"choose_schedule({epsilon}) -> N={levels}, D={d_branch}, delta={delta:.4f}")
    return schedule
