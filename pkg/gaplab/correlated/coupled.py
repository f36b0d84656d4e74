"""
Simultaneous greedy runs on every leaf of a tree-correlated family.
"""
import functools
import logging
from typing import Dict

from gaplab.correlated.tree_family import CorrelatedFamily, Path
from gaplab.graph_core.graph import Graph, check_same_size
from gaplab.greedy.align import AlignmentResult, run_greedy
from gaplab.greedy.config import GreedyConfig

logger = logging.getLogger(__name__)


def coupled_greedy_runs(family: CorrelatedFamily, gs: Graph,
                        cfg: GreedyConfig) -> Dict[Path, AlignmentResult]:
    """
    Run the greedy aligner on every leaf graph against ``gs``.

    Step ``k`` of leaf ``v`` draws its tie-break from the stream owned by
    the ancestor of ``v`` at the level containing column ``k``.  Leaves
    below a common node therefore see identical inputs and identical
    randomness on that node's columns, and their permutations agree there.
    """
    check_same_size(family.leaf_graph(family.leaves[0]), gs)
    results = {}
    for leaf in family.leaves:
        results[leaf] = run_greedy(
            family.leaf_graph(leaf), gs, cfg, owner_of=functools.partial(family.owner, leaf)
        )
    logger.debug(f"Coupled greedy runs on {len(results)} leaves")
    return results
