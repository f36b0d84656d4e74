import json
import logging
from typing import Optional

from gaplab.bin.resolve import output_stream, resolve_p, resolve_seed
from gaplab.graph_core.sampling import sample_er
from gaplab.greedy.align import greedy_align
from gaplab.greedy.config import GreedyConfig
from gaplab.oracle.brute import brute_max_overlap

logger = logging.getLogger(__name__)


def main(n: int, p: Optional[float], p_rule: str, seed: Optional[int], eta: float, cap: int,
         workers: int, out: Optional[str]) -> int:
    """
    Print brute force and greedy values as one json object.  Returns 1 if
    the greedy value exceeds the exhaustive maximum.
    """
    prob = resolve_p(n, p, p_rule)
    root = resolve_seed(seed)
    g = sample_er(n, prob, root.child("G"))
    gs = sample_er(n, prob, root.child("Gs"))
    brute = brute_max_overlap(g, gs, cap=cap, workers=workers)
    greedy = greedy_align(g, gs, GreedyConfig(eta=eta, seed=root.child("align"), p=prob))
    dominated = greedy.overlap_value <= brute.value
    summary = {
        "n": n,
        "p": prob,
        "seed": root.root,
        "brute": brute.value,
        "argmax": brute.argmax.one_line(),
        "argmax_count": brute.argmax_count,
        "greedy": greedy.overlap_value,
        "greedy_permutation": greedy.pi_star.one_line(),
        "dominated": dominated,
    }
    with output_stream(out) as fd:
        fd.write(json.dumps(summary, sort_keys=True) + "\n")
    if not dominated:
        logger.error(f"Greedy overlap {greedy.overlap_value} exceeds the maximum {brute.value}")
        return 1
    return 0
