"""
Regime classification and the scale used to normalize centered overlaps.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from gaplab.exceptions import DomainError
from gaplab.thresholds.scales import d_np, e_np, p_c, s_np

logger = logging.getLogger(__name__)

C_LO = 0.5
C_HI = 2.0


class Regime(Enum):
    Sparse = "sparse"
    Dense = "dense"
    Critical = "critical"


def classify_regime(n: int, p: float, c_lo: float = C_LO, c_hi: float = C_HI) -> Regime:
    """
    Sparse when p <= c_lo p_c, Dense when p >= c_hi p_c, Critical between.

    The cutoffs are a finite-n convention.  p <= 0 is tagged Sparse and
    p >= 1 Dense.
    """
    if p <= 0:
        return Regime.Sparse
    if p >= 1:
        return Regime.Dense
    critical = p_c(n)
    if p <= c_lo * critical:
        return Regime.Sparse
    if p >= c_hi * critical:
        return Regime.Dense
    return Regime.Critical


def regime_scale(n: int, p: float, regime: Regime) -> Optional[float]:
    """
    S_{n,p} for Sparse, D_{n,p} for Dense, None for Critical.

    Raises DomainError where S_{n,p} is undefined.
    """
    if regime is Regime.Sparse:
        return s_np(n, p)
    if regime is Regime.Dense:
        return d_np(n, p)
    return None


def normalized_ratio(centered: float, scale: Optional[float]) -> Optional[float]:
    """centered / scale; 0 when nothing was gained, None without a usable scale."""
    if centered == 0:
        return 0.0
    if scale is None or scale == 0:
        return None
    return centered / scale


@dataclass(frozen=True)
class RegimeParams:
    n: int
    p: float
    e_np: float
    s_np: Optional[float]
    d_np: float
    p_c: float
    regime: Regime

    @classmethod
    def from_np(cls, n: int, p: float, c_lo: float = C_LO, c_hi: float = C_HI) -> RegimeParams:
        """``s_np`` is left None outside log n / n <= p, n p^2 < log n."""
        sparse = None
        if n >= 2 and p >= math.log(n) / n:
            try:
                sparse = s_np(n, p)
            except DomainError:
                pass
        return cls(
            n=n,
            p=p,
            e_np=e_np(n, p),
            s_np=sparse,
            d_np=d_np(n, p),
            p_c=p_c(n),
            regime=classify_regime(n, p, c_lo, c_hi),
        )

    @property
    def ratio_to_pc(self) -> float:
        return self.p / self.p_c

    @property
    def scale(self) -> Optional[float]:
        if self.regime is Regime.Sparse:
            return self.s_np
        if self.regime is Regime.Dense:
            return self.d_np
        return None
