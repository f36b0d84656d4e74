"""
Erdős–Rényi sampling over the colex pair order.
"""
import logging
import math
import numbers

import numpy as np

from gaplab.exceptions import DomainError, PreconditionError
from gaplab.graph_core.graph import Graph, pair_count
from gaplab.graph_core.seed import Seed

logger = logging.getLogger(__name__)

CHUNK = 1 << 22


def check_probability(p: float) -> float:
    if not isinstance(p, numbers.Real) or math.isnan(p) or not 0 <= p <= 1:
        raise DomainError(f"Edge probability must lie in [0, 1], got {p!r}")
    return float(p)


def sample_label_range(lo: int, hi: int, p: float, seed: Seed) -> np.ndarray:
    """
    Labels in ``[lo, hi)`` kept independently with probability p.

    The stream for ``seed`` is consumed in label order, so the same
    (range, p, seed) always produces the same labels.
    """
    p = check_probability(p)
    if hi <= lo or p == 0:
        return np.zeros(0, dtype=np.int64)
    if p == 1:
        return np.arange(lo, hi, dtype=np.int64)
    rng = seed.generator()
    kept = []
    for start in range(lo, hi, CHUNK):
        size = min(CHUNK, hi - start)
        kept.append(np.flatnonzero(rng.random(size) < p).astype(np.int64) + start)
    return np.concatenate(kept)


def sample_er(n: int, p: float, seed: Seed) -> Graph:
    """One draw from G(n, p), deterministic given the seed."""
    if n < 1:
        raise PreconditionError(f"n must be positive, got {n}")
    labels = sample_label_range(0, pair_count(n), p, seed)
    logger.debug(f"sample_er(n={n}, p={p}, seed={seed}) -> {labels.size} edges")
    return Graph.from_labels(n, labels)
