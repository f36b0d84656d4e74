"""
Per-step trajectory of one greedy run, checked against the predicted
first, middle and last step gains.
"""
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import IO, List, Optional, Union

from gaplab.graph_core.sampling import sample_er
from gaplab.graph_core.seed import Seed
from gaplab.greedy.align import AlignmentResult, greedy_align
from gaplab.greedy.config import GreedyConfig
from gaplab.greedy.trajectory import (GoodEvent, StepEvents, TrajectoryRecord,
                                      dense_good_event, step_events,
                                      trajectory, write_trajectory_csv)
from gaplab.thresholds.regime import Regime, classify_regime

logger = logging.getLogger(__name__)

DEFAULT_SLACK = 0.5


@dataclass
class TrajectoryReport:
    n: int
    p: float
    eta: float
    regime: Regime
    result: AlignmentResult
    records: List[TrajectoryRecord]
    events: StepEvents
    good_event: Optional[GoodEvent] = None


def run_trajectory(n: int, p: float, eta: float, seed: Seed, slack: float = DEFAULT_SLACK,
                   good_event: bool = False,
                   csv_target: Optional[Union[str, Path, IO[str]]] = None) -> TrajectoryReport:
    """
    Sample G, Gs ~ G(n, p) from ``seed / "G"`` and ``seed / "Gs"``, align
    them with trajectory capture and evaluate the step events.

    Parameters
    ----------
    slack : float
        Middle steps clear ``s p^2 + sqrt(2 (1 - slack) s p^2 log n)``.
    good_event : bool
        Also check the regularity event on G over the greedy window.
    csv_target : path or file, optional
        Where to write the trajectory CSV.
    """
    regime = classify_regime(n, p)
    if regime is not Regime.Dense:
        logger.warning(f"Trajectory predictions assume the dense regime; (n={n}, p={p}) is "
                       f"{regime.value}")
    g = sample_er(n, p, seed.child("G"))
    gs = sample_er(n, p, seed.child("Gs"))
    cfg = GreedyConfig(eta=eta, seed=seed.child("align"), capture_trajectory=True, p=p)
    result = greedy_align(g, gs, cfg)
    records = trajectory(result)
    window = cfg.window(n)
    events = step_events(records, p, eta, slack, window)
    report = TrajectoryReport(
        n=n,
        p=p,
        eta=eta,
        regime=regime,
        result=result,
        records=records,
        events=events,
        good_event=dense_good_event(g, p, window) if good_event else None,
    )
    if csv_target is not None:
        write_trajectory_csv(records, csv_target)
    logger.info(f"Trajectory n={n} p={p:.4g}: middle fraction {events.middle_fraction:.3f}, "
                f"first {events.first_holds}, last {events.last_holds}")
    return report
