"""
typing helper:
Callable signatures that modules pass to each other, with the role of each
argument, as an entry point for reading the code.
"""
from typing import TYPE_CHECKING, Callable

if TYPE_CHECKING:
    from gaplab.graph_core.graph import Graph
    from gaplab.greedy.align import AlignmentResult
    from gaplab.greedy.config import GreedyConfig

# An aligner that fixes pi*(1), pi*(2), ... in order.
# Parameter Types:
#   Graph: the graph revealed column by column
#   Graph: the fully known second graph
#   GreedyConfig: window, tie-break seed and capture options
# Return Types:
#   AlignmentResult: permutation plus overlap diagnostics
# Swapping in another aligner only requires this signature; the online
# replay check and the interpolation scan call nothing else.
OnlineAlgorithm = Callable[["Graph", "Graph", "GreedyConfig"], "AlignmentResult"]

# Owner of the randomness of a greedy step.
# Parameter Types:
#   int: 1-based step
# Return Types:
#   tuple[int, ...]: path of the tree node whose block contains the step
StepOwner = Callable[[int], tuple]
