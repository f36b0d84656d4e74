import logging
from pathlib import Path
from typing import Optional

from gaplab.bin.resolve import output_stream, resolve_p, resolve_seed
from gaplab.correlated.coupled import coupled_greedy_runs
from gaplab.correlated.labeling import shared_label_count
from gaplab.correlated.pairs import sample_2alpha
from gaplab.correlated.schedule import choose_schedule
from gaplab.correlated.tree_family import is_prefix_consistent, sample_tree_family
from gaplab.exceptions import ConfigurationError
from gaplab.graph_core.io import write_edge_list
from gaplab.graph_core.sampling import sample_er
from gaplab.graph_core.seed import Seed
from gaplab.greedy.config import GreedyConfig
from gaplab.oracle.branching import detect_forbidden_branching
from gaplab.rendering import format_path, render_manifest, render_witness
from gaplab.thresholds.regime import Regime

logger = logging.getLogger(__name__)


def write_pair(n: int, prob: float, alpha: float, root: Seed, out_dir: Optional[str]) -> int:
    if out_dir is None:
        raise ConfigurationError("--out-dir is required with --alpha")
    first, second = sample_2alpha(n, prob, alpha, root.child("pair"))
    directory = Path(out_dir)
    directory.mkdir(parents=True, exist_ok=True)
    write_edge_list(first, directory / "first.txt")
    write_edge_list(second, directory / "second.txt")
    logger.info(f"(2, {alpha}) pair with {shared_label_count(n, alpha)} shared labels "
                f"written to {directory}")
    return 0


def main(n: int, p: Optional[float], p_rule: str, seed: Optional[int], epsilon: float,
         branching: Optional[int], depth: Optional[int], leaf_cap: int, alpha: Optional[float],
         out_dir: Optional[str], align: bool, eta: float, detect_beta: Optional[float],
         regime: str, out: Optional[str]) -> int:
    prob = resolve_p(n, p, p_rule)
    root = resolve_seed(seed)
    if alpha is not None:
        return write_pair(n, prob, alpha, root, out_dir)

    family = sample_tree_family(
        n, prob, choose_schedule(epsilon), root.child("family"),
        d_override=branching, n_override=depth, leaf_cap=leaf_cap,
    )
    if out_dir is not None:
        directory = Path(out_dir)
        directory.mkdir(parents=True, exist_ok=True)
        for leaf in family.leaves:
            write_edge_list(family.leaf_graph(leaf), directory / f"leaf_{format_path(leaf)}.txt")

    blocks = [render_manifest(family)]
    code = 0
    if align or detect_beta is not None:
        gs = sample_er(n, prob, root.child("Gs"))
    if align:
        cfg = GreedyConfig(eta=eta, seed=root.child("align"), p=prob)
        outputs = {leaf: result.pi_star for leaf, result in coupled_greedy_runs(family, gs, cfg).items()}
        blocks.append("# coupled greedy outputs\n" + render_witness(outputs))
        if not is_prefix_consistent(family, outputs):
            logger.error("Coupled greedy outputs disagree on a shared prefix")
            code = 1
    if detect_beta is not None:
        witness = detect_forbidden_branching(family, gs, detect_beta, Regime(regime))
        if witness is None:
            blocks.append("# no forbidden structure\n")
        else:
            blocks.append("# forbidden structure\n" + render_witness(witness))
    with output_stream(out) as fd:
        fd.write("".join(blocks))
    return code
