"""
The three regularity clauses of a p-admissible graph.

* edge count:  | |E(G)| - C(n, 2) p | <= 2 sqrt(n^2 p log n)
* every induced subgraph H on k vertices:
  | |E(H)| - C(k, 2) p | <= n^2 p / (log n)^(1/4)
* every permutation pi with F fixed points and T transpositions:
  | |OL(G, pi)| - E|OL| | <= 2 sqrt(F n p log n) + 3 sqrt(2 n^3 p^2 log n)

Exact mode enumerates every subset (n <= 20) or permutation (n <= 8).
Monte Carlo mode checks a seeded sample; the subset sample always includes
the prefix sets {1..k}, the identity is always among the permutations, and
a sample at least as large as the full space falls back to enumeration.

A failed clause is a verdict, not an error.
"""
import enum
import logging
import math
from dataclasses import dataclass, field
from typing import List, Tuple

import numpy as np

from gaplab.exceptions import CapExceededError, DomainError
from gaplab.graph_core.graph import POPCOUNT, Graph, pair_count
from gaplab.graph_core.overlap import expected_ol
from gaplab.graph_core.seed import Seed
from gaplab.oracle.enumeration import TABLE_CAP, batch_overlaps, permutation_table

logger = logging.getLogger(__name__)

SUBSET_EXACT_CAP = 20
OL_EXACT_CAP = 8
SUBSET_BATCH = 2048
PERMUTATION_BATCH = 256


class CheckMode(str, enum.Enum):
    Exact = "exact"
    MonteCarlo = "monte-carlo"


def _check_inputs(g: Graph, p: float):
    if not 0 < p < 1:
        raise DomainError(f"Admissibility needs p in (0, 1), got {p}")
    if g.n < 2:
        raise DomainError(f"Admissibility needs n >= 2, got {g.n}")


def edge_count_bound(n: int, p: float) -> float:
    return 2 * math.sqrt(n * n * p * math.log(n))


def subgraph_bound(n: int, p: float) -> float:
    return n * n * p / math.log(n) ** 0.25


def ol_bound(n: int, p: float, fixed_points) -> np.ndarray:
    """Vectorized over ``fixed_points``."""
    log_n = math.log(n)
    f = np.asarray(fixed_points, dtype=np.float64)
    return 2 * np.sqrt(f * n * p * log_n) + 3 * math.sqrt(2 * n ** 3 * p * p * log_n)


@dataclass
class EdgeClause:
    edge_count: int
    expected: float
    lhs: float
    bound: float
    passed: bool


@dataclass
class SubgraphClause:
    mode: CheckMode
    worst_violation: float
    bound: float
    passed: bool
    samples: int
    worst_subset: List[int] = field(default_factory=list)


@dataclass
class OLClause:
    """``worst_violation`` is the largest deviation-to-bound ratio."""
    mode: CheckMode
    worst_violation: float
    passed: bool
    samples: int
    worst_permutation: List[int] = field(default_factory=list)


def check_edge_count(g: Graph, p: float) -> EdgeClause:
    _check_inputs(g, p)
    expected = pair_count(g.n) * p
    lhs = abs(g.edge_count - expected)
    bound = edge_count_bound(g.n, p)
    return EdgeClause(
        edge_count=g.edge_count,
        expected=expected,
        lhs=lhs,
        bound=bound,
        passed=bool(lhs <= bound),
    )


def _popcount(values: np.ndarray) -> np.ndarray:
    values = values.astype(np.int64)
    return (POPCOUNT[values & 0xFF].astype(np.int64)
            + POPCOUNT[(values >> 8) & 0xFF]
            + POPCOUNT[(values >> 16) & 0xFF])


def _all_subset_deviations(g: Graph, p: float) -> Tuple[np.ndarray, np.ndarray]:
    """Deviation of every subset, indexed by vertex bitmask, and subset sizes."""
    n = g.n
    lower = np.zeros(n, dtype=np.int64)
    if g.edge_count:
        np.bitwise_or.at(lower, g.edges[:, 1], np.left_shift(1, g.edges[:, 0]))
    edges = np.zeros(1 << n, dtype=np.int64)
    for v in range(n):
        base = np.arange(1 << v, dtype=np.int64)
        # subsets whose highest vertex is v extend a subset of 0..v-1
        edges[(1 << v) + base] = edges[base] + _popcount(base & lower[v])
    sizes = _popcount(np.arange(1 << n, dtype=np.int64))
    return np.abs(edges - sizes * (sizes - 1) / 2 * p), sizes


def _mask_to_vertices(mask: int, n: int) -> List[int]:
    return [v + 1 for v in range(n) if mask >> v & 1]


def _exact_subgraphs(g: Graph, p: float, bound: float) -> SubgraphClause:
    deviations, _ = _all_subset_deviations(g, p)
    worst = int(np.argmax(deviations))
    return SubgraphClause(
        mode=CheckMode.Exact,
        worst_violation=float(deviations[worst]),
        bound=bound,
        passed=bool(deviations[worst] <= bound),
        samples=int(deviations.size),
        worst_subset=_mask_to_vertices(worst, g.n),
    )


def _inside_edge_counts(weights: np.ndarray, adjacency: np.ndarray) -> np.ndarray:
    """
    Edges inside each 0/1 row of ``weights``.

    Per-vertex degrees stay below 2^24 and are exact in float32; the totals
    can pass it and are summed in int64.
    """
    degrees = (weights @ adjacency).astype(np.int64)
    return (degrees * weights.astype(np.int64)).sum(axis=1) // 2


def _sampled_subgraphs(g: Graph, p: float, bound: float, samples: int, seed: Seed) -> SubgraphClause:
    n = g.n
    later = np.bincount(g.edges[:, 1], minlength=n) if g.edge_count else np.zeros(n, dtype=np.int64)
    # prefix {1..k} holds every edge whose larger endpoint is below k
    prefix_edges = np.concatenate([[0], np.cumsum(later)])
    k = np.arange(n + 1)
    prefix_dev = np.abs(prefix_edges - k * (k - 1) / 2 * p)
    worst_k = int(np.argmax(prefix_dev))
    worst = float(prefix_dev[worst_k])
    worst_subset = list(range(1, worst_k + 1))

    rng = seed.generator()
    adjacency = g.dense().astype(np.float32)
    remaining = samples
    while remaining > 0:
        batch = min(SUBSET_BATCH, remaining)
        remaining -= batch
        members = rng.random((batch, n)) < 0.5
        weights = members.astype(np.float32)
        inside = _inside_edge_counts(weights, adjacency)
        sizes = members.sum(axis=1)
        deviations = np.abs(inside - sizes * (sizes - 1) / 2 * p)
        row = int(np.argmax(deviations))
        if deviations[row] > worst:
            worst = float(deviations[row])
            worst_subset = (np.flatnonzero(members[row]) + 1).tolist()
    return SubgraphClause(
        mode=CheckMode.MonteCarlo,
        worst_violation=worst,
        bound=bound,
        passed=bool(worst <= bound),
        samples=samples + n + 1,
        worst_subset=worst_subset,
    )


def check_induced_subgraphs(g: Graph, p: float, mode: CheckMode = CheckMode.MonteCarlo,
                            samples: int = 10_000, seed: Seed = Seed(0)) -> SubgraphClause:
    """
    Largest deviation of an induced edge count from C(k, 2) p.

    Raises
    ------
    CapExceededError
        Exact mode with n above 20.
    """
    _check_inputs(g, p)
    n = g.n
    bound = subgraph_bound(n, p)
    if mode is CheckMode.Exact:
        if n > SUBSET_EXACT_CAP:
            raise CapExceededError(f"Exact subgraph check needs n <= {SUBSET_EXACT_CAP}, got {n}")
        return _exact_subgraphs(g, p, bound)
    if n <= SUBSET_EXACT_CAP and samples >= 1 << n:
        logger.debug(f"{samples} samples cover all {1 << n} subsets, enumerating")
        clause = _exact_subgraphs(g, p, bound)
        clause.mode = CheckMode.MonteCarlo
        return clause
    return _sampled_subgraphs(g, p, bound, samples, seed)


def _ol_ratios(g: Graph, p: float, perms: np.ndarray) -> np.ndarray:
    n = g.n
    rows = np.arange(perms.shape[0])[:, None]
    counts = batch_overlaps(perms, g.edges, g.dense())
    points = np.arange(n)
    fixed = (perms == points).sum(axis=1)
    squared = perms[rows, perms]
    transpositions = ((squared == points) & (perms != points)).sum(axis=1) // 2
    expected = np.array([expected_ol(n, p, int(f), int(t)) for f, t in zip(fixed, transpositions)])
    return np.abs(counts - expected) / ol_bound(n, p, fixed)


def _clause_from_batches(g: Graph, p: float, batches, mode: CheckMode) -> OLClause:
    worst = -1.0
    worst_perm: List[int] = []
    checked = 0
    for perms in batches:
        ratios = _ol_ratios(g, p, perms)
        checked += perms.shape[0]
        row = int(np.argmax(ratios))
        if ratios[row] > worst:
            worst = float(ratios[row])
            worst_perm = (perms[row].astype(np.int64) + 1).tolist()
    return OLClause(
        mode=mode,
        worst_violation=worst,
        passed=bool(worst <= 1.0),
        samples=checked,
        worst_permutation=worst_perm,
    )


def _table_batches(n: int):
    table = permutation_table(n)
    for start in range(0, table.shape[0], PERMUTATION_BATCH * 16):
        yield table[start:start + PERMUTATION_BATCH * 16]


def _random_batches(n: int, samples: int, seed: Seed):
    rng = seed.generator()
    yield np.arange(n)[None, :]
    remaining = samples
    while remaining > 0:
        batch = min(PERMUTATION_BATCH, remaining)
        remaining -= batch
        yield rng.permuted(np.tile(np.arange(n), (batch, 1)), axis=1)


def check_ol_concentration(g: Graph, p: float, mode: CheckMode = CheckMode.MonteCarlo,
                           samples: int = 1_000, seed: Seed = Seed(0)) -> OLClause:
    """
    Largest ratio of | |OL(G, pi)| - E|OL| | to its bound over the tested
    permutations; the clause passes when the ratio is at most one.

    Raises
    ------
    CapExceededError
        Exact mode with n above 8.
    """
    _check_inputs(g, p)
    n = g.n
    if mode is CheckMode.Exact:
        if n > OL_EXACT_CAP:
            raise CapExceededError(f"Exact OL check needs n <= {OL_EXACT_CAP}, got {n}")
        return _clause_from_batches(g, p, _table_batches(n), CheckMode.Exact)
    if n <= TABLE_CAP and samples >= math.factorial(n):
        logger.debug(f"{samples} samples cover all {math.factorial(n)} permutations, enumerating")
        return _clause_from_batches(g, p, _table_batches(n), CheckMode.MonteCarlo)
    return _clause_from_batches(g, p, _random_batches(n, samples, seed), CheckMode.MonteCarlo)
