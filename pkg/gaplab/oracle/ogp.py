"""
Two-instance overlap gap: near-optimal solutions of (2, alpha)-correlated
instances never overlap in ((rho0 - eta) n, (rho0 + eta) n).
"""
from __future__ import annotations

import dataclasses
import logging
import math
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np
from scipy.optimize import brentq

from gaplab.correlated.pairs import interpolation_path
from gaplab.exceptions import DomainError, IncompatibleEventsError
from gaplab.graph_core.graph import (Graph, check_same_size,
                                     expected_pair_density, pair_count)
from gaplab.graph_core.permutation import (Permutation, permutation_distance,
                                           permutation_overlap)
from gaplab.greedy.config import GreedyConfig
from gaplab.oracle.brute import BRUTE_CAP, check_cap
from gaplab.oracle.solution_set import (SolutionSet, SolutionThreshold,
                                        in_solution_set, solution_set)
from gaplab.thresholds.regime import Regime
from gaplab.typing_helper import OnlineAlgorithm

logger = logging.getLogger(__name__)

RHO0 = 1 / 3
BETA0_MIN = math.sqrt(25 / 27)
# rows x members x n booleans per agreement batch
AGREEMENT_BATCH = 1 << 24


def band_excess(rho0: float, beta0: float, eta: float) -> float:
    """2 - rho0 + eta - 2 beta0^2 / (1 + (rho0 + eta)^2); the band is valid below zero."""
    return 2 - rho0 + eta - 2 * beta0 * beta0 / (1 + (rho0 + eta) ** 2)


@dataclass(frozen=True)
class ForbiddenBandConfig:
    """
    Forbidden overlap band around ``rho0 n`` for beta0-optimal solutions.

    ``strict=False`` skips validation; it exists for degenerate bands in
    tests (``eta = 0``, arbitrary ``rho0``).
    """
    beta0: float
    eta: float
    rho0: float = RHO0
    strict: bool = field(default=True, compare=False)

    def __post_init__(self):
        if not self.strict:
            return
        if not BETA0_MIN < self.beta0 < 1:
            raise DomainError(f"beta0 must lie in (sqrt(25/27), 1), got {self.beta0}")
        if self.eta <= 0 or band_excess(self.rho0, self.beta0, self.eta) >= 0:
            raise DomainError(
                f"eta={self.eta} violates the band condition for beta0={self.beta0} "
                f"(largest admissible eta is {self.max_eta(self.beta0, self.rho0):.6f})"
            )

    @staticmethod
    def max_eta(beta0: float, rho0: float = RHO0) -> float:
        """Supremum of the admissible eta for ``beta0``."""
        if band_excess(rho0, beta0, 0.0) >= 0:
            return 0.0
        return brentq(lambda eta: band_excess(rho0, beta0, eta), 0.0, 1.0, xtol=1e-14)

    def bounds(self, n: int) -> Tuple[float, float]:
        """Open interval ((rho0 - eta) n, (rho0 + eta) n)."""
        return (self.rho0 - self.eta) * n, (self.rho0 + self.eta) * n

    def in_band(self, overlap: int, n: int) -> bool:
        lo, hi = self.bounds(n)
        return lo < overlap < hi


def _first_pair_in_band(first: SolutionSet, second: SolutionSet, band: ForbiddenBandConfig,
                        n: int) -> Optional[Tuple[Permutation, Permutation]]:
    if first.count == 0 or second.count == 0:
        return None
    lo, hi = band.bounds(n)
    other = second.members.astype(np.int16)
    rows = max(1, AGREEMENT_BATCH // max(1, second.count * n))
    for start in range(0, first.count, rows):
        block = first.members[start:start + rows].astype(np.int16)
        agreement = (block[:, None, :] == other[None, :, :]).sum(axis=2)
        hits = np.argwhere((agreement > lo) & (agreement < hi))
        if hits.size:
            i, j = hits[0]
            return Permutation(first.members[start + i]), Permutation(second.members[j])
    return None


def _shared_threshold(band: ForbiddenBandConfig, regime: Regime, graphs: Tuple[Graph, ...],
                      p: Optional[float], absolute: Optional[float]) -> SolutionThreshold:
    return SolutionThreshold(
        beta=band.beta0,
        regime=regime,
        p=p if p is not None else expected_pair_density(*graphs),
        absolute=absolute,
    )


def detect_forbidden_2ogp(g1: Graph, g2: Graph, gs: Graph, band: ForbiddenBandConfig,
                          regime: Regime, cap: int = BRUTE_CAP, p: Optional[float] = None,
                          absolute_threshold: Optional[float] = None
                          ) -> Optional[Tuple[Permutation, Permutation]]:
    """
    First pair (pi1, pi2), lexicographic in pi1 then pi2, with
    pi_i in S_beta0(g_i, gs) and overlap(pi1, pi2) inside the band.
    None when no such pair exists.
    """
    n = check_same_size(g1, g2, gs)
    check_cap(n, cap)
    threshold = _shared_threshold(band, regime, (g1, g2, gs), p, absolute_threshold)
    return _first_pair_in_band(
        solution_set(g1, gs, threshold, cap), solution_set(g2, gs, threshold, cap), band, n
    )


@dataclass
class InterpolationReport:
    """
    Events along the interpolation path G^0 = g_prime, ..., G^N = g.

    ogp_holds : no forbidden pair between G^0 and any G^k (None when n
        exceeds the exhaustive cap)
    suc_holds : the algorithm output is beta0-optimal on every G^k
    stable_holds : consecutive outputs differ in at most eta n positions
    ends_holds : outputs on G^0 and G^N overlap in at most (rho0 - eta) n
    """
    n: int
    path_length: int
    ogp_holds: Optional[bool]
    suc_holds: bool
    stable_holds: bool
    ends_holds: bool
    distances: List[int]
    overlaps_with_start: List[int]
    forbidden_step: Optional[int] = None

    @property
    def all_hold(self) -> bool:
        return bool(self.ogp_holds) and self.suc_holds and self.stable_holds and self.ends_holds


def interpolation_ogp_scan(
    g: Graph,
    g_prime: Graph,
    gs: Graph,
    band: ForbiddenBandConfig,
    algorithm: OnlineAlgorithm,
    cfg: GreedyConfig,
    regime: Regime = Regime.Dense,
    cap: int = BRUTE_CAP,
    p: Optional[float] = None,
    absolute_threshold: Optional[float] = None,
) -> InterpolationReport:
    """
    Run ``algorithm`` on every graph of the interpolation path and evaluate
    the four events.

    Raises
    ------
    IncompatibleEventsError
        If all four events hold; they cannot hold together, so this is a bug.
    """
    n = check_same_size(g, g_prime, gs)
    total = pair_count(n)
    path = [interpolation_path(g, g_prime, k) for k in range(total + 1)]
    threshold = _shared_threshold(band, regime, (g, g_prime, gs), p, absolute_threshold)

    outputs = [algorithm(graph, gs, cfg).pi_star for graph in path]
    distances = [permutation_distance(a, b) for a, b in zip(outputs[:-1], outputs[1:])]
    overlaps = [permutation_overlap(outputs[0], pi) for pi in outputs]

    suc_holds = all(in_solution_set(graph, gs, pi, threshold) for graph, pi in zip(path, outputs))
    stable_holds = all(d <= band.eta * n for d in distances)
    ends_holds = overlaps[-1] <= (band.rho0 - band.eta) * n

    ogp_holds = None
    forbidden_step = None
    if n <= cap:
        start = solution_set(path[0], gs, threshold, cap)
        ogp_holds = True
        for k, graph in enumerate(path):
            if _first_pair_in_band(start, solution_set(graph, gs, threshold, cap), band, n):
                ogp_holds = False
                forbidden_step = k
                break
    else:
        logger.info(f"n={n} exceeds cap {cap}; OGP event not evaluated")

    report = InterpolationReport(
        n=n,
        path_length=total,
        ogp_holds=ogp_holds,
        suc_holds=suc_holds,
        stable_holds=stable_holds,
        ends_holds=ends_holds,
        distances=distances,
        overlaps_with_start=overlaps,
        forbidden_step=forbidden_step,
    )
    if report.all_hold:
        raise IncompatibleEventsError(
            f"OGP, success, stability and separated ends all hold: {dataclasses.asdict(report)}"
        )
    return report
