"""
Overlap functionals between two graphs under a vertex permutation.
"""
from __future__ import annotations

from typing import Iterator, Tuple

import numpy as np

from gaplab.exceptions import PreconditionError
from gaplab.graph_core.graph import Graph, check_same_size, pair_count
from gaplab.graph_core.permutation import Permutation


def matched_edge_mask(g: Graph, h: Graph, pi: Permutation) -> np.ndarray:
    """For each edge (i, j) of g, whether (pi(i), pi(j)) is an edge of h."""
    check_same_size(g, h, pi)
    if g.edge_count == 0:
        return np.zeros(0, dtype=bool)
    images = pi.forward[g.edges]
    return h.has_pairs(images[:, 0], images[:, 1])


def overlap(g: Graph, h: Graph, pi: Permutation) -> int:
    """O(pi) = #{i < j : g_ij = 1 and h_pi(i)pi(j) = 1}."""
    return int(np.count_nonzero(matched_edge_mask(g, h, pi)))


def centered_overlap(g: Graph, h: Graph, pi: Permutation, p: float) -> float:
    """O(pi) - C(n, 2) p^2."""
    return overlap(g, h, pi) - pair_count(g.n) * p * p


def ol_set(g: Graph, pi: Permutation) -> Iterator[Tuple[int, int]]:
    """
    Stream OL(g, pi): 1-based pairs (i, j), i < j, that are edges of g and
    whose images are edges of g.  Use `ol_count` for the size alone.
    """
    mask = matched_edge_mask(g, g, pi)
    for i, j in g.edges[mask]:
        yield int(i) + 1, int(j) + 1


def ol_count(g: Graph, pi: Permutation) -> int:
    """|OL(g, pi)| without materializing the pairs."""
    return overlap(g, g, pi)


def expected_ol(n: int, p: float, f: int, t: int) -> float:
    """
    Mean of |OL(G, pi)| over G ~ G(n, p) for a permutation with f fixed
    points and t transpositions:

        [C(f, 2) + t] (p - p^2) + C(n, 2) p^2
    """
    if not 0 <= f <= n or not 0 <= t <= (n - f) // 2:
        raise PreconditionError(f"Infeasible cycle counts f={f}, t={t} for n={n}")
    return (pair_count(f) + t) * (p - p * p) + pair_count(n) * p * p
