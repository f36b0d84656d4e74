import logging
import sys
from typing import List, Optional

from gaplab.exceptions import ConfigurationError
from gaplab.harness.config import (ExperimentConfig, GridPoint, load_config,
                                   make_p_rule, save_config)
from gaplab.harness.convergence import run_convergence
from gaplab.harness.records import write_records_jsonl, write_summary_csv

logger = logging.getLogger(__name__)


def build_config(config: Optional[str], experiment_id: Optional[str], n: Optional[List[int]],
                 p: Optional[float], p_rule: str, eta: Optional[float], reps: Optional[int],
                 workers: Optional[int], seed: Optional[int], out: Optional[str],
                 summary: Optional[str], timing: bool) -> ExperimentConfig:
    """The config file (or defaults) with every given flag applied on top."""
    cfg = load_config(config) if config is not None else ExperimentConfig()
    if n is not None:
        if p is None:
            raise ConfigurationError("--p is required with --n")
        cfg.grid = [GridPoint(n=size, p_rule=make_p_rule(p, p_rule)) for size in n]
    overrides = {
        "experiment_id": experiment_id,
        "eta": eta,
        "replicates": reps,
        "workers": workers,
        "seed": seed,
        "records_path": out,
        "summary_path": summary,
    }
    for name, value in overrides.items():
        if value is not None:
            setattr(cfg, name, value)
    if timing:
        cfg.timing = True
    cfg.validate()
    return cfg


def main(config: Optional[str], experiment_id: Optional[str], n: Optional[List[int]],
         p: Optional[float], p_rule: str, eta: Optional[float], reps: Optional[int],
         workers: Optional[int], seed: Optional[int], out: Optional[str],
         summary: Optional[str], output_format: str, timing: bool,
         config_out: Optional[str]) -> int:
    cfg = build_config(config, experiment_id, n, p, p_rule, eta, reps, workers, seed, out,
                       summary, timing)
    if config_out is not None:
        save_config(config_out, cfg)
        logger.info(f"Wrote configuration to {config_out}")
    result = run_convergence(cfg)
    if cfg.records_path is None and cfg.summary_path is None:
        if output_format == "jsonl":
            write_records_jsonl(result.records, sys.stdout)
        else:
            write_summary_csv(result.summary, sys.stdout)
    for failure in result.failures:
        logger.warning(f"Grid point {failure.grid_index} produced no records: {failure.reason}")
    return 0
