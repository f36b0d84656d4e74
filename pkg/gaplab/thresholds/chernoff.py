"""
Chernoff tail bounds for X ~ Binomial(N, P).
"""
import math

from gaplab.exceptions import DomainError


def _check(N: int, P: float):
    if N < 1 or not 0 < P < 1:
        raise DomainError(f"Chernoff bound needs N >= 1 and 0 < P < 1, got N={N}, P={P}")


def chernoff_upper(N: int, P: float, delta: float) -> float:
    """Bound on P[X >= (1 + delta) N P]."""
    _check(N, P)
    if delta < 0:
        raise DomainError(f"delta must be non-negative, got {delta}")
    return math.exp(-N * P * ((1 + delta) * math.log1p(delta) - delta))


def chernoff_lower(N: int, P: float, delta: float) -> float:
    """Bound on P[X <= (1 - delta) N P]."""
    _check(N, P)
    if delta < 0:
        raise DomainError(f"delta must be non-negative, got {delta}")
    return math.exp(-delta * delta * N * P / 2)


def chernoff_two_sided(N: int, P: float, K: float) -> float:
    """Bound on P[|X - N P| >= K].  Vacuous (2) at K = 0."""
    _check(N, P)
    if K < 0:
        raise DomainError(f"K must be non-negative, got {K}")
    return 2 * math.exp(-K * K / (2 * (N * P + K)))
