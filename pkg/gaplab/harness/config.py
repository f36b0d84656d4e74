"""
Experiment configuration.

Config files are JSON documents.  The flat form mirrors the command line
flags of ``gaplab experiment``, with one p-rule shared by every size::

    {"id": "dense-sweep", "n": [1000, 2000], "p": 3, "p_rule": "pc-multiple",
     "eta": 0.02, "reps": 5, "seed": 7}

The nested form is what ``--save-config`` writes and allows a different
p-rule per grid point::

    {
      "experiment_id": "dense-sweep",
      "grid": [{"n": 1000, "p_rule": {"PcMultiple": {"multiple": 3.0}}}],
      "eta": 0.02,
      "replicates": 5,
      "seed": 7,
      "records_path": "records.jsonl",
      "summary_path": "summary.csv"
    }
"""
from __future__ import annotations

import json
import logging
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

from apischema import ValidationError, deserialize, serialize

from gaplab.exceptions import ConfigurationError
from gaplab.graph_core.seed import Seed
from gaplab.greedy.config import TieBreak
from gaplab.serialization import as_tagged_union
from gaplab.thresholds.scales import p_c

logger = logging.getLogger(__name__)


@as_tagged_union
@dataclass
class PRule:
    """How a grid point turns its n into an edge probability."""

    def resolve(self, n: int) -> float:
        raise NotImplementedError

    def describe(self) -> str:
        raise NotImplementedError


@dataclass
class AbsoluteP(PRule):
    value: float = 0.0

    def resolve(self, n: int) -> float:
        return self.value

    def describe(self) -> str:
        return f"p={self.value}"


@dataclass
class PcMultiple(PRule):
    """``multiple * sqrt(log n / n)``, the default for dense sweeps."""
    multiple: float = 3.0

    def resolve(self, n: int) -> float:
        return self.multiple * p_c(n)

    def describe(self) -> str:
        return f"p={self.multiple}*p_c"


@dataclass
class PowerOfN(PRule):
    exponent: float = 0.5

    def resolve(self, n: int) -> float:
        return float(n) ** -self.exponent

    def describe(self) -> str:
        return f"p=n^-{self.exponent}"


# command line names of the p-rules
P_RULES = {
    "absolute": lambda value: AbsoluteP(value=value),
    "pc-multiple": lambda value: PcMultiple(multiple=value),
    "power": lambda value: PowerOfN(exponent=value),
}


def make_p_rule(p: float, p_rule: str) -> PRule:
    if p_rule not in P_RULES:
        raise ConfigurationError(f"Unknown p-rule {p_rule!r}, expected one of {sorted(P_RULES)}")
    return P_RULES[p_rule](p)


@dataclass
class GridPoint:
    n: int
    p_rule: PRule = field(default_factory=AbsoluteP)


@dataclass
class ExperimentConfig:
    experiment_id: str = "experiment"
    grid: List[GridPoint] = field(default_factory=list)
    eta: float = 0.05
    replicates: int = 1
    seed: Optional[int] = None
    records_path: Optional[str] = None
    summary_path: Optional[str] = None
    workers: int = 1
    timing: bool = False
    tie_break: TieBreak = TieBreak.UniformSample
    greedy_tail: bool = False

    def validate(self) -> None:
        if self.replicates < 1:
            raise ConfigurationError(f"replicates must be at least 1, got {self.replicates}")
        if self.workers < 1:
            raise ConfigurationError(f"workers must be at least 1, got {self.workers}")
        if not 0 <= self.eta < 0.5:
            raise ConfigurationError(f"eta must lie in [0, 0.5), got {self.eta}")
        if not self.grid:
            raise ConfigurationError("Experiment grid is empty")

    def root_seed(self) -> Seed:
        """Configured seed, else ``GAPLAB_SEED``, else 0."""
        if self.seed is not None:
            return Seed(self.seed)
        return Seed.from_env()


@dataclass
class ResolvedPoint:
    grid_index: int
    n: int
    p: float
    rule: str


@dataclass
class GridFailure:
    grid_index: int
    reason: str


def resolve_grid(cfg: ExperimentConfig) -> Tuple[List[ResolvedPoint], List[GridFailure]]:
    """
    Concrete (n, p) for every grid point.  Points that cannot be resolved
    are returned as failures and logged; the rest of the grid is unaffected.
    """
    points = []
    failures = []
    for index, point in enumerate(cfg.grid):
        try:
            if point.n < 2:
                raise ConfigurationError(f"n must be at least 2, got {point.n}")
            p = point.p_rule.resolve(point.n)
            if math.isnan(p) or not 0 <= p <= 1:
                raise ConfigurationError(
                    f"{point.p_rule.describe()} resolves to {p} outside [0, 1] at n={point.n}"
                )
        except (ConfigurationError, ValueError, ZeroDivisionError) as ex:
            logger.warning(f"Grid point {index} skipped: {ex}")
            failures.append(GridFailure(grid_index=index, reason=str(ex)))
            continue
        points.append(ResolvedPoint(index, point.n, float(p), point.p_rule.describe()))
    return points, failures


# flat config keys and the ExperimentConfig field each one sets
FLAT_KEYS = {
    "id": "experiment_id",
    "eta": "eta",
    "reps": "replicates",
    "workers": "workers",
    "seed": "seed",
    "out": "records_path",
    "summary": "summary_path",
    "timing": "timing",
    "tie_break": "tie_break",
    "greedy_tail": "greedy_tail",
}


def is_flat(document) -> bool:
    return isinstance(document, dict) and "n" in document and "grid" not in document


def from_flat(document: Dict[str, Any]) -> ExperimentConfig:
    """
    Nested config from a flat document keyed like the command line flags.

    ``n`` is one size or a list of sizes, all sharing ``p`` and ``p_rule``.
    """
    unknown = set(document) - set(FLAT_KEYS) - {"n", "p", "p_rule"}
    if unknown:
        raise ConfigurationError(f"Unknown config keys {sorted(unknown)}")
    p = document.get("p")
    if isinstance(p, bool) or not isinstance(p, (int, float)):
        raise ConfigurationError(f"A flat config needs a numeric p, got {p!r}")
    sizes = document["n"] if isinstance(document["n"], list) else [document["n"]]
    rule = serialize(PRule, make_p_rule(float(p), document.get("p_rule", "absolute")))
    nested = {FLAT_KEYS[key]: value for key, value in document.items() if key in FLAT_KEYS}
    nested["grid"] = [{"n": size, "p_rule": rule} for size in sizes]
    return deserialize(ExperimentConfig, nested)


def load_config(path: Union[str, Path]) -> ExperimentConfig:
    """
    Deserialize a json file into a validated `ExperimentConfig`.

    Raises
    ------
    ConfigurationError
        If the file is unreadable, is not valid json or does not match the
        schema.
    """
    try:
        with open(path, "r") as fd:
            document = json.load(fd)
        if is_flat(document):
            cfg = from_flat(document)
        else:
            cfg = deserialize(ExperimentConfig, document)
    except json.JSONDecodeError as ex:
        raise ConfigurationError(f"{path} is not valid json: {ex}") from ex
    except ValidationError as ex:
        raise ConfigurationError(f"{path} does not describe an experiment: {ex}") from ex
    except OSError as ex:
        raise ConfigurationError(f"Cannot read {path}: {ex}") from ex
    cfg.validate()
    return cfg


def save_config(path: Union[str, Path], cfg: ExperimentConfig) -> None:
    ser = serialize(ExperimentConfig, cfg)
    with open(path, "w") as fd:
        json.dump(ser, fd, indent=2)
        fd.write("\n")
