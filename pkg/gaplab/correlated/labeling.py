"""
Colexicographic numbering of unordered pairs, 1-based as in the edge
order e_1 = (1, 2), e_2 = (1, 3), e_3 = (2, 3), e_4 = (1, 4), ...
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Tuple

from gaplab.exceptions import PreconditionError
from gaplab.graph_core.graph import labels_to_pairs, pair_count

FLOOR_TOLERANCE = 1e-9


def edge_index(i: int, j: int, n: int) -> int:
    """k = C(j - 1, 2) + i for 1 <= i < j <= n."""
    if not 1 <= i < j <= n:
        raise PreconditionError(f"Need 1 <= i < j <= n, got ({i}, {j}) with n={n}")
    return pair_count(j - 1) + i


def edge_pair(k: int, n: int) -> Tuple[int, int]:
    """Inverse of `edge_index`."""
    if not 1 <= k <= pair_count(n):
        raise PreconditionError(f"Edge label {k} outside 1..{pair_count(n)}")
    i, j = labels_to_pairs([k - 1])[0]
    return int(i) + 1, int(j) + 1


def shared_label_count(n: int, alpha: float) -> int:
    """floor(alpha C(n, 2)), the length of the edge-label prefix E_alpha."""
    if not 0 <= alpha <= 1:
        raise PreconditionError(f"alpha must lie in [0, 1], got {alpha}")
    return min(pair_count(n), math.floor(alpha * pair_count(n) + FLOOR_TOLERANCE))


def prefix_span(alpha: float, n: int) -> int:
    """
    Smallest j >= 1 with C(j, 2) >= floor(alpha C(n, 2)): the labels of
    E_alpha all live among the first j vertices, roughly sqrt(2 alpha) n.
    """
    target = shared_label_count(n, alpha)
    j = max(1, math.isqrt(2 * target))
    while pair_count(j) < target:
        j += 1
    while j > 1 and pair_count(j - 1) >= target:
        j -= 1
    return j


def column_bound(alpha: float, n: int) -> int:
    """floor(alpha n), the last vertex column inside an alpha-prefix."""
    return min(n, math.floor(alpha * n + FLOOR_TOLERANCE))


@dataclass(frozen=True)
class EdgeLabeling:
    n: int

    @property
    def N(self) -> int:
        return pair_count(self.n)

    def index(self, i: int, j: int) -> int:
        return edge_index(i, j, self.n)

    def pair(self, k: int) -> Tuple[int, int]:
        return edge_pair(k, self.n)

    def column_label_range(self, lo: int, hi: int) -> Tuple[int, int]:
        """0-based label range [C(lo, 2), C(hi, 2)) of pairs with lo < j <= hi."""
        return pair_count(lo), pair_count(hi)
