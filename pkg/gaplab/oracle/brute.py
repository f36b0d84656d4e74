"""
Exact alignment of small graphs by exhaustive enumeration.
"""
from __future__ import annotations

import functools
import logging
import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from gaplab.exceptions import CapExceededError
from gaplab.graph_core.graph import Graph, check_same_size
from gaplab.graph_core.permutation import Permutation
from gaplab.oracle.enumeration import (minimal_change_branch,
                                       minimal_change_overlaps)
from gaplab.parallel import ordered_map

logger = logging.getLogger(__name__)

BRUTE_CAP = 10


@dataclass(frozen=True)
class BruteResult:
    value: int
    argmax: Permutation
    argmax_count: int


def check_cap(n: int, cap: int):
    if n > cap:
        raise CapExceededError(f"Exhaustive search over {n}! permutations exceeds cap n <= {cap}")


def _branch_best(first: int, n: int, adjacency: np.ndarray,
                 target: np.ndarray) -> Tuple[int, np.ndarray, int]:
    block = minimal_change_branch(n, first)
    values = minimal_change_overlaps(block, adjacency, target)
    best = int(values.max())
    winners = block[values == best]
    # minimal-change order is not lexicographic; pick the smallest word
    best_row = winners[np.lexsort(winners.T[::-1])[0]].copy()
    return best, best_row, int(winners.shape[0])


def brute_max_overlap(g: Graph, gs: Graph, cap: int = BRUTE_CAP, workers: int = 1) -> BruteResult:
    """
    Maximum overlap over all n! permutations.

    The first maximizer in lexicographic order of the one-line word is
    returned with the number of maximizers.  Within a branch on the first
    image the rest are visited in minimal-change order, each overlap an
    O(n) update of the previous one.  Branches are searched in parallel
    when ``workers > 1``; the reduction order is fixed, so the result does
    not depend on the worker count.
    """
    n = check_same_size(g, gs)
    check_cap(n, cap)
    task = functools.partial(_branch_best, n=n, adjacency=g.dense(), target=gs.dense())
    branches = ordered_map(task, list(range(n)), workers)
    value = max(best for best, _, _ in branches)
    argmax = next(row for best, row, _ in branches if best == value)
    count = sum(c for best, _, c in branches if best == value)
    logger.debug(f"brute_max_overlap: n={n} value={value} ties={count}/{math.factorial(n)}")
    return BruteResult(value=value, argmax=Permutation(argmax), argmax_count=count)
