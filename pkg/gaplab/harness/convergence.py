"""
Convergence sweeps: greedy alignment of independent G(n, p) pairs over a
grid of (n, p) points.

Replicate ``r`` at grid point ``i`` draws from the streams
``root / experiment_id / i / r / {"G", "Gs", "align"}``, so records do not
depend on the worker count or the order replicates finish in.
"""
import logging
from dataclasses import dataclass, field
from typing import List, Tuple

from gaplab.graph_core.sampling import sample_er
from gaplab.graph_core.seed import Seed
from gaplab.greedy.align import greedy_align
from gaplab.greedy.config import GreedyConfig
from gaplab.harness.config import ExperimentConfig, GridFailure, resolve_grid
from gaplab.harness.helpers.timer import Stopwatch, Timer
from gaplab.harness.records import (RunRecord, SummaryRow, summarize,
                                    write_records_jsonl, write_summary_csv)
from gaplab.parallel import ordered_imap

logger = logging.getLogger(__name__)

PROGRESS_PERIOD = 10.0


@dataclass(frozen=True)
class ReplicateJob:
    experiment_id: str
    grid_index: int
    replicate: int
    n: int
    p: float
    eta: float
    root: int
    timing: bool
    greedy: GreedyConfig


@dataclass
class ConvergenceResult:
    records: List[RunRecord]
    summary: List[SummaryRow]
    failures: List[GridFailure] = field(default_factory=list)


def replicate_seed(root: Seed, experiment_id: str, grid_index: int, replicate: int) -> Seed:
    return root.child(experiment_id, grid_index, replicate)


def run_replicate(job: ReplicateJob) -> RunRecord:
    seed = replicate_seed(Seed(job.root), job.experiment_id, job.grid_index, job.replicate)
    g = sample_er(job.n, job.p, seed.child("G"))
    gs = sample_er(job.n, job.p, seed.child("Gs"))
    cfg = GreedyConfig(
        eta=job.eta,
        tie_break=job.greedy.tie_break,
        seed=seed.child("align"),
        greedy_tail=job.greedy.greedy_tail,
        p=job.p,
    )
    with Stopwatch() as stopwatch:
        result = greedy_align(g, gs, cfg)
    return RunRecord.from_result(
        result,
        experiment_id=job.experiment_id,
        grid_index=job.grid_index,
        replicate=job.replicate,
        n=job.n,
        eta=job.eta,
        seed=job.root,
        stream=str(seed),
        runtime_ms=stopwatch.elapsed_ms if job.timing else None,
    )


def build_jobs(cfg: ExperimentConfig) -> Tuple[List[ReplicateJob], List[GridFailure]]:
    root = cfg.root_seed()
    greedy = GreedyConfig(eta=cfg.eta, tie_break=cfg.tie_break, greedy_tail=cfg.greedy_tail)
    points, failures = resolve_grid(cfg)
    jobs = [
        ReplicateJob(
            experiment_id=cfg.experiment_id,
            grid_index=point.grid_index,
            replicate=replicate,
            n=point.n,
            p=point.p,
            eta=cfg.eta,
            root=root.root,
            timing=cfg.timing,
            greedy=greedy,
        )
        for point in points
        for replicate in range(cfg.replicates)
    ]
    return jobs, failures


def run_convergence(cfg: ExperimentConfig) -> ConvergenceResult:
    """
    Run every replicate of every resolvable grid point, then write the
    records and summary to the configured paths.

    Parameters
    ----------
    cfg : ExperimentConfig

    Returns
    -------
    ConvergenceResult
        Records in (grid point, replicate) order, one summary row per grid
        point that produced records, and the grid points that failed to
        resolve.
    """
    cfg.validate()
    jobs, failures = build_jobs(cfg)
    logger.info(f"Experiment {cfg.experiment_id}: {len(jobs)} runs on {cfg.workers} worker(s)")
    progress = Timer("progress", PROGRESS_PERIOD, auto_start=True, is_periodic=True)
    records = []
    for record in ordered_imap(run_replicate, jobs, cfg.workers):
        records.append(record)
        if progress.is_elapsed():
            logger.info(f"Experiment {cfg.experiment_id}: {len(records)}/{len(jobs)} runs done")
    summary = summarize(records)
    if cfg.records_path:
        write_records_jsonl(records, cfg.records_path)
        logger.info(f"Wrote {len(records)} records to {cfg.records_path}")
    if cfg.summary_path:
        write_summary_csv(summary, cfg.summary_path)
        logger.info(f"Wrote {len(summary)} summary rows to {cfg.summary_path}")
    return ConvergenceResult(records=records, summary=summary, failures=failures)
