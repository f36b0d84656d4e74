"""
Raw run records (JSON lines) and per-grid-point summaries (CSV).
"""
from __future__ import annotations

import csv
import json
import logging
import math
import statistics
from dataclasses import astuple, dataclass, fields
from pathlib import Path
from typing import IO, Dict, List, Optional, Sequence, Union

from apischema import serialize

from gaplab.greedy.align import AlignmentResult
from gaplab.thresholds.regime import Regime
from gaplab.thresholds.scales import dense_target, e_np, sparse_target

logger = logging.getLogger(__name__)

Target = Union[str, Path, IO[str]]


@dataclass
class RunRecord:
    """
    One replicate at one grid point.  ``centered`` is always
    ``overlap - e_np(n, p)`` and ``ratio`` is ``centered / scale`` when a
    scale is defined.
    """
    experiment_id: str
    grid_index: int
    replicate: int
    n: int
    p: float
    eta: float
    seed: int
    stream: str
    regime: Regime
    overlap: int
    centered: float
    scale: Optional[float]
    ratio: Optional[float]
    algorithm: str
    naive_ops: int
    accumulation_ops: int
    runtime_ms: Optional[float] = None

    @classmethod
    def from_result(cls, result: AlignmentResult, *, experiment_id: str, grid_index: int,
                    replicate: int, n: int, eta: float, seed: int, stream: str,
                    runtime_ms: Optional[float] = None) -> RunRecord:
        return cls(
            experiment_id=experiment_id,
            grid_index=grid_index,
            replicate=replicate,
            n=n,
            p=result.p,
            eta=eta,
            seed=seed,
            stream=stream,
            regime=result.regime,
            overlap=result.overlap_value,
            centered=result.overlap_value - e_np(n, result.p),
            scale=result.scale,
            ratio=result.ratio,
            algorithm=result.algorithm,
            naive_ops=result.naive_ops,
            accumulation_ops=result.accumulation_ops,
            runtime_ms=runtime_ms,
        )

    def to_json(self) -> str:
        return json.dumps(serialize(RunRecord, self), sort_keys=True)


def _open_target(target: Target, write):
    with open(target, "w", newline="") as fd:
        return write(fd)


def write_records_jsonl(records: Sequence[RunRecord], target: Target) -> None:
    """One json object per line, keys sorted."""
    if isinstance(target, (str, Path)):
        return _open_target(target, lambda fd: write_records_jsonl(records, fd))
    for record in records:
        target.write(record.to_json())
        target.write("\n")


@dataclass
class SummaryRow:
    experiment_id: str
    grid_index: int
    n: int
    p: float
    regime: str
    count: int
    defined: int
    mean_ratio: Optional[float]
    stderr_ratio: Optional[float]
    min_ratio: Optional[float]
    max_ratio: Optional[float]
    median_ratio: Optional[float]
    target: Optional[float]


def _target_for(regime: Regime, eta: float) -> Optional[float]:
    if regime is Regime.Sparse:
        return sparse_target(eta)
    if regime is Regime.Dense:
        return dense_target(eta)
    return None


def summarize(records: Sequence[RunRecord]) -> List[SummaryRow]:
    """
    Ratio statistics per grid point, in grid order.  Replicates without a
    defined ratio count towards ``count`` but not ``defined``.
    """
    groups: Dict[int, List[RunRecord]] = {}
    for record in records:
        groups.setdefault(record.grid_index, []).append(record)
    rows = []
    for grid_index in sorted(groups):
        group = sorted(groups[grid_index], key=lambda r: r.replicate)
        first = group[0]
        ratios = [r.ratio for r in group if r.ratio is not None]
        mean = stderr = low = high = median = None
        if ratios:
            mean = math.fsum(ratios) / len(ratios)
            stderr = statistics.stdev(ratios) / math.sqrt(len(ratios)) if len(ratios) > 1 else 0.0
            low, high = min(ratios), max(ratios)
            median = statistics.median(ratios)
        rows.append(SummaryRow(
            experiment_id=first.experiment_id,
            grid_index=grid_index,
            n=first.n,
            p=first.p,
            regime=first.regime.value,
            count=len(group),
            defined=len(ratios),
            mean_ratio=mean,
            stderr_ratio=stderr,
            min_ratio=low,
            max_ratio=high,
            median_ratio=median,
            target=_target_for(first.regime, first.eta),
        ))
    return rows


SUMMARY_COLUMNS = tuple(f.name for f in fields(SummaryRow))


def write_summary_csv(rows: Sequence[SummaryRow], target: Target) -> None:
    """Header plus one row per grid point; undefined statistics are empty."""
    if isinstance(target, (str, Path)):
        return _open_target(target, lambda fd: write_summary_csv(rows, fd))
    writer = csv.writer(target, lineterminator="\n")
    writer.writerow(SUMMARY_COLUMNS)
    for row in rows:
        writer.writerow(["" if value is None else repr(value) if isinstance(value, float) else value
                         for value in astuple(row)])
