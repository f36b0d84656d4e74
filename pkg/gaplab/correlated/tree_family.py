"""
Tree-correlated graph families.

Nodes of a D-regular rooted tree of depth N are child-index paths; the root
is ``()``.  A node ``v`` at level ``k >= 1`` owns the independent edge
indicators of every pair (i, j), i < j, whose column j lies in
``(floor(alpha_{k-1} n), floor(alpha_k n)]``.  The graph of a leaf takes each
column block from its ancestor at that level, so two leaves agree on all
columns up to ``floor(alpha_m n)`` where m is the depth of their meet.
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from gaplab.correlated.labeling import column_bound
from gaplab.correlated.schedule import AlphaSchedule, uniform_alphas
from gaplab.exceptions import CapExceededError, PreconditionError
from gaplab.graph_core.graph import Graph, pair_count
from gaplab.graph_core.permutation import Permutation
from gaplab.graph_core.sampling import check_probability, sample_label_range
from gaplab.graph_core.seed import Seed

logger = logging.getLogger(__name__)

Path = Tuple[int, ...]

LEAF_CAP = 64


@dataclass(frozen=True)
class ManifestEntry:
    path: Path
    level: int
    column_lo: int
    column_hi: int
    label_lo: int
    label_hi: int
    seed_label: str


@dataclass
class CorrelatedFamily:
    n: int
    p: float
    branching: int
    depth: int
    alphas: Tuple[float, ...]
    seed: Seed
    schedule: Optional[AlphaSchedule] = None
    _blocks: Dict[Path, np.ndarray] = field(default_factory=dict, init=False, repr=False)
    _leaf_graphs: Dict[Path, Graph] = field(default_factory=dict, init=False, repr=False)

    def __post_init__(self):
        if len(self.alphas) != self.depth + 1:
            raise PreconditionError(
                f"{len(self.alphas)} grid points given for depth {self.depth}"
            )

    @property
    def leaves(self) -> List[Path]:
        """Leaf paths in lexicographic order."""
        return list(itertools.product(range(self.branching), repeat=self.depth))

    def nodes(self) -> List[Path]:
        """All non-root nodes, level by level, lexicographic within a level."""
        return [
            path
            for level in range(1, self.depth + 1)
            for path in itertools.product(range(self.branching), repeat=level)
        ]

    def column_bound(self, level: int) -> int:
        """floor(alpha_level n)."""
        return column_bound(self.alphas[level], self.n)

    def block_columns(self, path: Path) -> Tuple[int, int]:
        """1-based columns (lo, hi] owned by a node."""
        level = len(path)
        return self.column_bound(level - 1), self.column_bound(level)

    def block_label_range(self, path: Path) -> Tuple[int, int]:
        """0-based label range [C(lo, 2), C(hi, 2)) owned by a node."""
        lo, hi = self.block_columns(path)
        return pair_count(lo), pair_count(hi)

    def block_seed(self, path: Path) -> Seed:
        return self.seed.child("block", tuple(path))

    def block_labels(self, path: Path) -> np.ndarray:
        path = tuple(path)
        if path not in self._blocks:
            lo, hi = self.block_label_range(path)
            self._blocks[path] = sample_label_range(lo, hi, self.p, self.block_seed(path))
        return self._blocks[path]

    def leaf_graph(self, leaf: Sequence[int]) -> Graph:
        """Graph of a leaf, assembled on first request."""
        leaf = tuple(leaf)
        if len(leaf) != self.depth or any(not 0 <= c < self.branching for c in leaf):
            raise PreconditionError(f"{leaf} is not a leaf of this family")
        if leaf not in self._leaf_graphs:
            blocks = [self.block_labels(leaf[:level]) for level in range(1, self.depth + 1)]
            self._leaf_graphs[leaf] = Graph.from_labels(self.n, np.concatenate(blocks))
        return self._leaf_graphs[leaf]

    @staticmethod
    def meet_depth(u: Sequence[int], v: Sequence[int]) -> int:
        """|u ∧ v|, the length of the common prefix."""
        depth = 0
        for a, b in zip(u, v):
            if a != b:
                break
            depth += 1
        return depth

    def agreement_columns(self, u: Sequence[int], v: Sequence[int]) -> int:
        """floor(alpha_{|u ∧ v|} n): leaves u and v agree on every column up to it."""
        return self.column_bound(self.meet_depth(u, v))

    def level_of(self, step: int) -> int:
        """The level whose column block contains ``step`` (1-based)."""
        for level in range(1, self.depth + 1):
            if step <= self.column_bound(level):
                return level
        raise PreconditionError(f"Step {step} beyond n={self.n}")

    def owner(self, leaf: Sequence[int], step: int) -> Path:
        """Ancestor of ``leaf`` that owns the randomness of ``step``."""
        return tuple(leaf[:self.level_of(step)])

    def manifest(self) -> List[ManifestEntry]:
        entries = []
        for path in self.nodes():
            lo, hi = self.block_columns(path)
            label_lo, label_hi = self.block_label_range(path)
            entries.append(ManifestEntry(
                path=path,
                level=len(path),
                column_lo=lo,
                column_hi=hi,
                label_lo=label_lo,
                label_hi=label_hi,
                seed_label=str(self.block_seed(path)),
            ))
        return entries


def sample_tree_family(
    n: int,
    p: float,
    schedule: AlphaSchedule,
    seed: Seed,
    d_override: Optional[int] = None,
    n_override: Optional[int] = None,
    leaf_cap: int = LEAF_CAP,
) -> CorrelatedFamily:
    """
    Build a tree-correlated family.

    The schedule's own branching factor and depth describe the full-size
    tree; ``d_override`` and ``n_override`` (depth) select a small tree to
    actually instantiate.  With a depth override the grid is uniform,
    alpha_k = k / depth.

    Raises
    ------
    CapExceededError
        If branching ** depth exceeds ``leaf_cap``.
    """
    p = check_probability(p)
    branching = d_override if d_override is not None else schedule.d_branch
    depth = n_override if n_override is not None else schedule.n_levels
    if branching < 1 or depth < 1:
        raise PreconditionError(f"Need branching >= 1 and depth >= 1, got {branching}, {depth}")
    leaf_count = branching ** depth
    if leaf_count > leaf_cap:
        raise CapExceededError(
            f"{branching}^{depth} = {leaf_count} leaves exceeds the cap of {leaf_cap}"
        )
    alphas = uniform_alphas(depth) if n_override is not None else schedule.alphas
    logger.debug(f"Tree family n={n} p={p} D={branching} depth={depth} leaves={leaf_count}")
    return CorrelatedFamily(
        n=n,
        p=p,
        branching=branching,
        depth=depth,
        alphas=tuple(alphas),
        seed=seed,
        schedule=schedule,
    )


def is_prefix_consistent(family: CorrelatedFamily, assignment: Mapping[Path, Permutation]) -> bool:
    """pi_u(i) = pi_v(i) for all i <= floor(alpha_{|u ∧ v|} n), every pair of leaves."""
    items = sorted(assignment.items())
    for (u, pi_u), (v, pi_v) in itertools.combinations(items, 2):
        cols = family.agreement_columns(u, v)
        if not np.array_equal(pi_u.forward[:cols], pi_v.forward[:cols]):
            return False
    return True
