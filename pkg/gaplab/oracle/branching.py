"""
Forbidden structure on a tree-correlated family: a beta-optimal
permutation for every leaf such that any two leaves u, v agree on
pi(1..floor(alpha_{|u ∧ v|} n)).
"""
import logging
from typing import Dict, List, Mapping, Optional

import numpy as np

from gaplab.correlated.tree_family import (CorrelatedFamily, Path,
                                           is_prefix_consistent)
from gaplab.exceptions import CapExceededError
from gaplab.graph_core.graph import Graph, check_same_size
from gaplab.graph_core.permutation import Permutation
from gaplab.oracle.brute import BRUTE_CAP, check_cap
from gaplab.oracle.solution_set import (SolutionThreshold, in_solution_set,
                                        solution_set)
from gaplab.thresholds.regime import Regime

logger = logging.getLogger(__name__)

BRANCHING_LEAF_CAP = 8


def _family_threshold(family: CorrelatedFamily, beta: float, regime: Regime,
                      absolute_threshold: Optional[float]) -> SolutionThreshold:
    return SolutionThreshold(beta=beta, regime=regime, p=family.p, absolute=absolute_threshold)


def detect_forbidden_branching(family: CorrelatedFamily, gs: Graph, beta: float,
                               regime: Regime, cap: int = BRUTE_CAP,
                               absolute_threshold: Optional[float] = None,
                               leaf_cap: int = BRANCHING_LEAF_CAP
                               ) -> Optional[Dict[Path, Permutation]]:
    """
    Search prefix-consistent tuples of solutions, leaves in lexicographic
    order and members of each solution set in lexicographic order.

    A leaf's candidates are the members of its solution set that agree with
    every already fixed leaf on their shared columns; the first complete
    assignment is returned.

    Raises
    ------
    CapExceededError
        If n exceeds ``cap`` or the family has more than ``leaf_cap`` leaves.
    """
    leaves = family.leaves
    if len(leaves) > leaf_cap:
        raise CapExceededError(f"{len(leaves)} leaves exceeds the cap of {leaf_cap}")
    n = check_same_size(family.leaf_graph(leaves[0]), gs)
    check_cap(n, cap)
    threshold = _family_threshold(family, beta, regime, absolute_threshold)
    members = [solution_set(family.leaf_graph(leaf), gs, threshold, cap).members for leaf in leaves]
    if any(m.shape[0] == 0 for m in members):
        return None

    chosen: List[np.ndarray] = []

    def candidates(index: int) -> np.ndarray:
        rows = members[index]
        keep = np.ones(rows.shape[0], dtype=bool)
        for earlier, row in enumerate(chosen):
            cols = family.agreement_columns(leaves[earlier], leaves[index])
            if cols:
                keep &= np.all(rows[:, :cols] == row[:cols], axis=1)
        return rows[keep]

    def search(index: int) -> bool:
        if index == len(leaves):
            return True
        for row in candidates(index):
            chosen.append(row)
            if search(index + 1):
                return True
            chosen.pop()
        return False

    if not search(0):
        return None
    witness = {leaf: Permutation(row) for leaf, row in zip(leaves, chosen)}
    logger.debug(f"Forbidden branching structure found on {len(leaves)} leaves")
    return witness


def is_forbidden_structure(family: CorrelatedFamily, gs: Graph,
                           assignment: Mapping[Path, Permutation], beta: float,
                           regime: Regime, absolute_threshold: Optional[float] = None) -> bool:
    """Check both conditions for a given leaf -> permutation assignment."""
    if sorted(assignment) != family.leaves:
        return False
    threshold = _family_threshold(family, beta, regime, absolute_threshold)
    optimal = all(
        in_solution_set(family.leaf_graph(leaf), gs, pi, threshold)
        for leaf, pi in assignment.items()
    )
    return optimal and is_prefix_consistent(family, assignment)
