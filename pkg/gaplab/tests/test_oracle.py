import itertools
import math

import numpy as np
import pytest

from gaplab.correlated.coupled import coupled_greedy_runs
from gaplab.correlated.schedule import choose_schedule
from gaplab.correlated.tree_family import sample_tree_family
from gaplab.exceptions import CapExceededError, DomainError
from gaplab.graph_core.graph import Graph, pair_count
from gaplab.graph_core.overlap import overlap
from gaplab.graph_core.permutation import Permutation
from gaplab.graph_core.sampling import sample_er
from gaplab.graph_core.seed import Seed
from gaplab.greedy.align import greedy_align
from gaplab.greedy.config import GreedyConfig
from gaplab.oracle.branching import (detect_forbidden_branching,
                                     is_forbidden_structure)
from gaplab.oracle.brute import brute_max_overlap
from gaplab.oracle.enumeration import (batch_overlaps, branch_table,
                                       minimal_change_branch,
                                       minimal_change_overlaps,
                                       minimal_change_table, permutation_table)
from gaplab.oracle.solution_set import (SolutionThreshold,
                                        enumerate_solution_set,
                                        in_solution_set)
from gaplab.thresholds.regime import Regime
from gaplab.thresholds.scales import e_np

from .conftest import er_pair


def naive_max_overlap(g: Graph, gs: Graph):
    # reverse lexicographic, independent of the table order
    values = [
        overlap(g, gs, Permutation(np.array(word)))
        for word in reversed(list(itertools.permutations(range(g.n))))
    ]
    return max(values), values.count(max(values))


def test_permutation_table_order():
    table = permutation_table(4)
    assert table.shape == (24, 4)
    assert [tuple(row) for row in table] == list(itertools.permutations(range(4)))
    assert np.array_equal(branch_table(4, 2), table[12:18])
    with pytest.raises(CapExceededError):
        permutation_table(11)


def test_minimal_change_order():
    for k in range(1, 7):
        table = minimal_change_table(k).astype(np.int64)
        assert table.shape == (math.factorial(k), k)
        assert table[0].tolist() == list(range(k))
        assert len({tuple(row) for row in table}) == math.factorial(k)
        changed = table[1:] != table[:-1]
        # exactly one adjacent pair swaps between consecutive rows
        assert np.all(changed.sum(axis=1) == 2)
        at = np.argmax(changed, axis=1)
        assert np.all(changed[np.arange(at.size), at + 1])
    assert minimal_change_table(3).tolist() == [
        [0, 1, 2], [0, 2, 1], [2, 0, 1], [2, 1, 0], [1, 2, 0], [1, 0, 2]
    ]
    with pytest.raises(CapExceededError):
        minimal_change_table(11)


@pytest.mark.parametrize("root", range(30))
def test_minimal_change_overlaps_match_direct(root: int):
    n = 2 + root % 6
    g, gs = er_pair(n, (0.3, 0.5, 0.7)[root % 3], root=root)
    for first in range(n):
        block = minimal_change_branch(n, first)
        assert block[:, 0].tolist() == [first] * block.shape[0]
        direct = batch_overlaps(block, g.edges, gs.dense())
        # small chunks carry the running count across chunk boundaries
        incremental = minimal_change_overlaps(block, g.dense(), gs.dense(), rows=17)
        assert np.array_equal(incremental, direct)


def test_brute_path_vs_star():
    g = Graph.from_edges(4, [(1, 2), (2, 3), (3, 4)])
    gs = Graph.from_edges(4, [(1, 2), (1, 3), (1, 4)])
    result = brute_max_overlap(g, gs)
    assert result.value == 2
    assert overlap(g, gs, result.argmax) == 2
    assert result.argmax_count == naive_max_overlap(g, gs)[1]


def test_brute_empty_and_complete():
    empty = brute_max_overlap(Graph.empty(5), sample_er(5, 0.5, Seed(1)))
    assert empty.value == 0
    assert empty.argmax == Permutation.identity(5)
    assert empty.argmax_count == math.factorial(5)
    complete = brute_max_overlap(Graph.complete(5), Graph.complete(5))
    assert complete.value == pair_count(5)
    assert complete.argmax_count == math.factorial(5)


@pytest.mark.parametrize("root", range(50))
def test_brute_matches_naive(root: int):
    n = 4 + root % 4
    g, gs = er_pair(n, (0.2, 0.5, 0.8)[root % 3], root=root)
    result = brute_max_overlap(g, gs)
    assert (result.value, result.argmax_count) == naive_max_overlap(g, gs)
    # first maximizer in lexicographic order
    first = next(
        word for word in itertools.permutations(range(n))
        if overlap(g, gs, Permutation(np.array(word))) == result.value
    )
    assert result.argmax.forward.tolist() == list(first)


def test_brute_worker_count_irrelevant():
    g, gs = er_pair(7, 0.4, root=3)
    assert brute_max_overlap(g, gs, workers=1) == brute_max_overlap(g, gs, workers=2)


@pytest.mark.parametrize("root", range(20))
def test_brute_symmetric(root: int):
    n = 4 + root % 4
    g, gs = er_pair(n, (0.3, 0.5, 0.7)[root % 3], root=root)
    forward = brute_max_overlap(g, gs)
    backward = brute_max_overlap(gs, g)
    assert forward.value == backward.value
    assert forward.argmax_count == backward.argmax_count
    assert overlap(gs, g, forward.argmax.inverse()) == forward.value


def test_brute_cap():
    with pytest.raises(CapExceededError):
        brute_max_overlap(Graph.empty(11), Graph.empty(11))
    with pytest.raises(CapExceededError):
        brute_max_overlap(Graph.empty(6), Graph.empty(6), cap=5)


@pytest.mark.parametrize("n", range(4, 9))
@pytest.mark.parametrize("p", [0.2, 0.5, 0.8])
def test_greedy_dominated_by_brute(n: int, p: float):
    for root in range(14):
        g, gs = er_pair(n, p, root=root)
        eta = (0.0, 0.1, 0.2)[root % 3]
        greedy = greedy_align(g, gs, GreedyConfig(eta=eta, seed=Seed(root)))
        assert greedy.overlap_value <= brute_max_overlap(g, gs).value


def test_solution_set_extremes():
    g, gs = er_pair(5, 0.5, root=2)
    everything = enumerate_solution_set(g, gs, 0.0, Regime.Dense, p=0.5,
                                        absolute_threshold=-e_np(5, 0.5))
    assert everything.count == math.factorial(5)
    assert everything.required_overlap == 0
    nothing = enumerate_solution_set(g, gs, 0.0, Regime.Dense, p=0.5, absolute_threshold=100.0)
    assert len(nothing) == 0
    assert list(nothing) == []


def test_solution_set_scaled_threshold():
    g, gs = er_pair(6, 0.5, root=1)
    low = enumerate_solution_set(g, gs, -100.0, Regime.Dense, p=0.5)
    assert low.count == math.factorial(6)
    assert low.scale is not None
    high = enumerate_solution_set(g, gs, 100.0, Regime.Dense, p=0.5)
    assert high.count == 0


@pytest.mark.parametrize("root", range(4))
def test_solution_set_at_brute_max(root: int):
    g, gs = er_pair(6, 0.5, root=root)
    brute = brute_max_overlap(g, gs)
    members = enumerate_solution_set(g, gs, 0.0, Regime.Dense, p=0.5,
                                     absolute_threshold=brute.value - e_np(6, 0.5))
    assert members.required_overlap == brute.value
    assert members.count == brute.argmax_count
    assert next(iter(members)) == brute.argmax
    assert all(overlap(g, gs, pi) == brute.value for pi in members)


def test_in_solution_set_matches_enumeration():
    g, gs = er_pair(5, 0.6, root=4)
    threshold = SolutionThreshold(p=0.6, absolute=0.0)
    members = enumerate_solution_set(g, gs, 0.0, Regime.Dense, p=0.6, absolute_threshold=0.0)
    for word in itertools.permutations(range(5)):
        pi = Permutation(np.array(word))
        assert in_solution_set(g, gs, pi, threshold) == (pi in members)


def test_solution_set_critical_regime():
    g, gs = er_pair(5, 0.5)
    with pytest.raises(DomainError):
        enumerate_solution_set(g, gs, 0.5, Regime.Critical)


def _family(n: int, p: float, root: int = 0, branching: int = 2, depth: int = 2):
    return sample_tree_family(n, p, choose_schedule(0.3), Seed(root).child("family"),
                              d_override=branching, n_override=depth)


def test_branching_on_complete_graphs():
    family = _family(5, 1.0)
    gs = Graph.complete(5)
    witness = detect_forbidden_branching(family, gs, 0.0, Regime.Dense, absolute_threshold=0.0)
    assert witness is not None
    assert all(pi == Permutation.identity(5) for pi in witness.values())
    assert is_forbidden_structure(family, gs, witness, 0.0, Regime.Dense, absolute_threshold=0.0)


def test_branching_above_brute_max():
    family = _family(6, 0.5, root=1)
    gs = sample_er(6, 0.5, Seed(1).child("Gs"))
    best = brute_max_overlap(family.leaf_graph((0, 0)), gs).value
    above = best + 1 - e_np(6, 0.5)
    assert detect_forbidden_branching(family, gs, 0.0, Regime.Dense,
                                      absolute_threshold=above) is None


@pytest.mark.parametrize("root", range(3))
def test_branching_confirms_coupled_greedy(root: int):
    n, p = 6, 0.5
    family = _family(n, p, root=root)
    gs = sample_er(n, p, Seed(root).child("Gs"))
    results = coupled_greedy_runs(family, gs, GreedyConfig(seed=Seed(root).child("align")))
    assignment = {leaf: result.pi_star for leaf, result in results.items()}
    absolute = min(result.overlap_value for result in results.values()) - e_np(n, p)
    assert is_forbidden_structure(family, gs, assignment, 0.0, Regime.Dense,
                                  absolute_threshold=absolute)
    witness = detect_forbidden_branching(family, gs, 0.0, Regime.Dense,
                                         absolute_threshold=absolute)
    assert witness is not None
    assert is_forbidden_structure(family, gs, witness, 0.0, Regime.Dense,
                                  absolute_threshold=absolute)


def test_forbidden_structure_rejections():
    family = _family(5, 1.0)
    gs = Graph.complete(5)
    identity = Permutation.identity(5)
    partial = {leaf: identity for leaf in family.leaves[:3]}
    assert not is_forbidden_structure(family, gs, partial, 0.0, Regime.Dense,
                                      absolute_threshold=0.0)
    inconsistent = {leaf: identity for leaf in family.leaves}
    inconsistent[(0, 1)] = Permutation.from_cycles(5, [(1, 2)])
    assert not is_forbidden_structure(family, gs, inconsistent, 0.0, Regime.Dense,
                                      absolute_threshold=0.0)


def test_branching_caps():
    gs = Graph.complete(5)
    with pytest.raises(CapExceededError):
        detect_forbidden_branching(_family(5, 1.0, branching=3), gs, 0.0, Regime.Dense,
                                   absolute_threshold=0.0)
    with pytest.raises(CapExceededError):
        detect_forbidden_branching(_family(5, 1.0), gs, 0.0, Regime.Dense, cap=4,
                                   absolute_threshold=0.0)
