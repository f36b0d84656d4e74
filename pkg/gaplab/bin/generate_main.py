import logging
from typing import Optional

from gaplab.bin.resolve import output_stream, resolve_p, resolve_seed
from gaplab.graph_core.io import format_edge_list
from gaplab.graph_core.sampling import sample_er

logger = logging.getLogger(__name__)


def main(n: int, p: Optional[float], p_rule: str, seed: Optional[int], stream: str,
         out: Optional[str]) -> int:
    prob = resolve_p(n, p, p_rule)
    root = resolve_seed(seed)
    g = sample_er(n, prob, root.child(stream))
    with output_stream(out) as fd:
        fd.write(format_edge_list(g))
    logger.info(f"Sampled G({n}, {prob:.6g}) with {g.edge_count} edges from seed {root.child(stream)}")
    return 0
