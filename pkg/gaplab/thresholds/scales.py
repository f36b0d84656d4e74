"""
Closed-form scales of the random graph alignment problem.

All logarithms are natural.  ``p_c(n) = sqrt(log n / n)`` separates the
sparse and dense regimes; in each regime the maximum centered overlap
grows like `s_np` resp. `d_np`.
"""
import logging
import math

import numpy as np

from gaplab.exceptions import DomainError
from gaplab.graph_core.graph import pair_count

logger = logging.getLogger(__name__)

BETA_C = math.sqrt(8.0 / 9.0)


def beta_c() -> float:
    """Online threshold sqrt(8/9) = integral of sqrt(2x) over [0, 1]."""
    return BETA_C


def p_c(n: int) -> float:
    return math.sqrt(math.log(n) / n)


def e_np(n: int, p: float) -> float:
    """Mean overlap of any fixed permutation, C(n, 2) p^2."""
    return pair_count(n) * p * p


def _sparse_inner_ratio(n: int, p: float) -> float:
    if p <= 0 or n < 2:
        raise DomainError(f"Sparse scale undefined for n={n}, p={p}")
    log_n = math.log(n)
    ratio = log_n / (n * p * p)
    if ratio <= 1:
        raise DomainError(
            f"Sparse scale undefined: n p^2 = {n * p * p:.6g} >= log n = {log_n:.6g}"
        )
    if p < log_n / n:
        logger.warning(f"p={p} is below log(n)/n={log_n / n:.3g}; the graph is "
                       "likely disconnected and the sparse scale is outside its range")
    return ratio


def sparse_step_gain(n: int, p: float) -> float:
    """Typical per-step gain log n / log(log n / (n p^2)) of the sparse regime."""
    return math.log(n) / math.log(_sparse_inner_ratio(n, p))


def s_np(n: int, p: float) -> float:
    """Sparse scale n log n / log(log n / (n p^2)); equals n times `sparse_step_gain`."""
    return n * math.log(n) / math.log(_sparse_inner_ratio(n, p))


def d_np(n: int, p: float) -> float:
    """Dense scale sqrt(n^3 p^2 log n)."""
    if p < 0:
        raise DomainError(f"Negative edge probability {p}")
    return math.sqrt(float(n) ** 3 * p * p * math.log(n))


def dense_step_gain(n_s: int, p: float, n: int, alpha: float) -> float:
    """Tail location N p + sqrt(2 alpha N p log n) of a Binomial(N, p) maximum."""
    mean = n_s * p
    return mean + math.sqrt(2.0 * alpha * mean * math.log(n))


def predicted_greedy_dense(n: int, p: float) -> float:
    """C(n, 2) p^2 + beta_c D_{n,p}."""
    return e_np(n, p) + BETA_C * d_np(n, p)


def heuristic_greedy_sparse(n: int, p: float) -> float:
    """
    Finite-n sum of the per-step sparse maxima,
    sum over s of log(n-s+1) / log(log(n-s+1) / (s p^2)), restricted to
    steps where the inner ratio exceeds one.
    """
    if p <= 0:
        return 0.0
    s = np.arange(1, n + 1, dtype=np.float64)
    candidates = n - s + 1
    log_c = np.log(candidates)
    with np.errstate(divide="ignore", invalid="ignore"):
        inner = log_c / (s * p * p)
        valid = (candidates >= 2) & (inner > 1)
        terms = np.where(valid, log_c / np.log(np.where(valid, inner, np.e)), 0.0)
    return float(terms.sum())


def heuristic_greedy_dense(n: int, p: float) -> float:
    """Finite-n sum of s p^2 + sqrt(2 s p^2 log(n-s+1)) over all steps."""
    s = np.arange(1, n + 1, dtype=np.float64)
    mean = s * p * p
    return float(np.sum(mean + np.sqrt(2.0 * mean * np.log(n - s + 1))))


def sparse_target(eta: float) -> float:
    """Asymptotic ratio guaranteed to the greedy aligner in the sparse regime."""
    return 1.0 - 4.0 * eta


def dense_target(eta: float) -> float:
    """Asymptotic ratio guaranteed to the greedy aligner in the dense regime."""
    return BETA_C - 20.0 * eta
