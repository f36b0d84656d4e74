"""
(2, alpha)-correlated pairs and interpolation paths.
"""
import logging
from typing import Tuple

import numpy as np

from gaplab.correlated.labeling import shared_label_count
from gaplab.exceptions import PreconditionError
from gaplab.graph_core.graph import Graph, check_same_size, pair_count
from gaplab.graph_core.sampling import check_probability, sample_label_range
from gaplab.graph_core.seed import Seed

logger = logging.getLogger(__name__)


def sample_2alpha(n: int, p: float, alpha: float, seed: Seed) -> Tuple[Graph, Graph]:
    """
    Two G(n, p) graphs that share their first floor(alpha N) edge labels
    and are independent on the rest.

    The shared block is drawn from ``seed / "shared"``, the private blocks
    from ``seed / "first"`` and ``seed / "second"``.
    """
    p = check_probability(p)
    total = pair_count(n)
    shared = shared_label_count(n, alpha)
    common = sample_label_range(0, shared, p, seed.child("shared"))
    first = sample_label_range(shared, total, p, seed.child("first"))
    second = sample_label_range(shared, total, p, seed.child("second"))
    logger.debug(f"sample_2alpha(n={n}, alpha={alpha}): {shared} shared labels")
    return (
        Graph.from_labels(n, np.concatenate([common, first])),
        Graph.from_labels(n, np.concatenate([common, second])),
    )


def interpolation_path(g: Graph, g_prime: Graph, k: int) -> Graph:
    """G^k: the first k edge labels taken from g, the rest from g_prime."""
    n = check_same_size(g, g_prime)
    if not 0 <= k <= pair_count(n):
        raise PreconditionError(f"Interpolation step {k} outside 0..{pair_count(n)}")
    return Graph.from_labels(
        n, np.concatenate([g.labels[g.labels < k], g_prime.labels[g_prime.labels >= k]])
    )
