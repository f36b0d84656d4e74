import logging
from typing import Optional, Tuple

from gaplab.bin.resolve import output_stream, resolve_p, resolve_seed
from gaplab.exceptions import ConfigurationError
from gaplab.graph_core.graph import Graph, check_same_size
from gaplab.graph_core.io import read_edge_list
from gaplab.graph_core.sampling import sample_er
from gaplab.graph_core.seed import Seed
from gaplab.greedy.align import greedy_align
from gaplab.greedy.config import GreedyConfig, TieBreak
from gaplab.greedy.trajectory import write_trajectory_csv
from gaplab.harness.helpers.timer import Stopwatch
from gaplab.harness.records import RunRecord

logger = logging.getLogger(__name__)


def load_pair(n: Optional[int], p: Optional[float], p_rule: str, root: Seed,
              g_path: Optional[str], gs_path: Optional[str]) -> Tuple[Graph, Graph, Optional[float]]:
    """The two graphs and the centering probability (None: pooled density)."""
    if (g_path is None) != (gs_path is None):
        raise ConfigurationError("--g and --gs must be given together")
    if g_path is not None:
        g = read_edge_list(g_path)
        gs = read_edge_list(gs_path)
        size = check_same_size(g, gs)
        prob = resolve_p(size, p, p_rule) if p is not None else None
        return g, gs, prob
    if n is None:
        raise ConfigurationError("--n is required without --g/--gs")
    prob = resolve_p(n, p, p_rule)
    return sample_er(n, prob, root.child("G")), sample_er(n, prob, root.child("Gs")), prob


def main(n: Optional[int], p: Optional[float], p_rule: str, seed: Optional[int], eta: float,
         g: Optional[str], gs: Optional[str], tie_break: str, literal: bool,
         greedy_tail: bool, timing: bool, trajectory: Optional[str],
         out: Optional[str]) -> int:
    root = resolve_seed(seed)
    first, second, prob = load_pair(n, p, p_rule, root, g, gs)
    cfg = GreedyConfig(
        eta=eta,
        tie_break=TieBreak(tie_break),
        seed=root.child("align"),
        capture_trajectory=trajectory is not None,
        literal_perturbation=literal,
        greedy_tail=greedy_tail,
        p=prob,
    )
    with Stopwatch() as stopwatch:
        result = greedy_align(first, second, cfg)
    record = RunRecord.from_result(
        result,
        experiment_id="align",
        grid_index=0,
        replicate=0,
        n=first.n,
        eta=eta,
        seed=root.root,
        stream=str(root),
        runtime_ms=stopwatch.elapsed_ms if timing else None,
    )
    if trajectory is not None:
        write_trajectory_csv(result.trajectory, trajectory)
        logger.info(f"Wrote trajectory to {trajectory}")
    with output_stream(out) as fd:
        fd.write(record.to_json() + "\n")
    return 0
