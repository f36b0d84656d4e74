import logging
from typing import Optional

from gaplab.admissibility.checks import CheckMode
from gaplab.admissibility.report import is_admissible
from gaplab.bin.resolve import output_stream, resolve_p, resolve_seed
from gaplab.exceptions import ConfigurationError
from gaplab.graph_core.io import read_edge_list
from gaplab.graph_core.sampling import sample_er

logger = logging.getLogger(__name__)


def main(n: Optional[int], p: Optional[float], p_rule: str, seed: Optional[int],
         graph: Optional[str], mode: str, subset_samples: int, permutation_samples: int,
         out: Optional[str]) -> int:
    root = resolve_seed(seed)
    if graph is not None:
        g = read_edge_list(graph)
        prob = resolve_p(g.n, p, p_rule)
    elif n is None:
        raise ConfigurationError("--n is required without --graph")
    else:
        prob = resolve_p(n, p, p_rule)
        g = sample_er(n, prob, root.child("G"))
    report = is_admissible(
        g, prob, CheckMode(mode),
        subset_samples=subset_samples,
        permutation_samples=permutation_samples,
        seed=root.child("admissibility"),
    )
    with output_stream(out) as fd:
        fd.write(report.to_json(indent=2) + "\n")
    logger.info(f"Admissible: {report.overall}")
    return 0
