"""
Replay check of the online contract: the first k choices may depend only
on the edges of ``g`` among the first k vertices.
"""
import logging

import numpy as np

from gaplab.exceptions import PreconditionError
from gaplab.graph_core.graph import Graph, check_same_size, pair_count
from gaplab.greedy.config import GreedyConfig
from gaplab.typing_helper import OnlineAlgorithm

logger = logging.getLogger(__name__)


def agree_on_prefix(g: Graph, g_alt: Graph, k: int) -> bool:
    """Whether g and g_alt share every pair (i, j) with i < j <= k."""
    check_same_size(g, g_alt)
    cutoff = pair_count(k)
    return np.array_equal(g.labels[g.labels < cutoff], g_alt.labels[g_alt.labels < cutoff])


def online_prefix_check(algorithm: OnlineAlgorithm, g: Graph, g_alt: Graph, gs: Graph,
                        k: int, cfg: GreedyConfig) -> bool:
    """
    Replay ``algorithm`` on ``g`` and ``g_alt`` with the same configuration
    and compare pi*(1..k).

    Raises
    ------
    PreconditionError
        If the two graphs differ on a pair inside the first k vertices;
        the contract says nothing about such inputs.
    """
    n = check_same_size(g, g_alt, gs)
    if not 0 <= k <= n:
        raise PreconditionError(f"Step k={k} outside 0..{n}")
    if not agree_on_prefix(g, g_alt, k):
        raise PreconditionError(
            f"Graphs differ on a pair with both endpoints <= {k}; prefix check inapplicable"
        )
    first = algorithm(g, gs, cfg).pi_star.forward[:k]
    second = algorithm(g_alt, gs, cfg).pi_star.forward[:k]
    same = bool(np.array_equal(first, second))
    if not same:
        logger.warning(f"Online contract violated within the first {k} steps")
    return same
