import io
import math

import numpy as np
import pytest
import scipy.stats

from gaplab.exceptions import (DomainError, MissingTrajectoryError,
                               PreconditionError, SizeMismatchError)
from gaplab.graph_core.graph import Graph, pair_count
from gaplab.graph_core.overlap import overlap
from gaplab.graph_core.seed import Seed
from gaplab.greedy.align import (STANDALONE_OWNER, greedy_align,
                                 greedy_align_perturbed)
from gaplab.greedy.config import GreedyConfig, TieBreak
from gaplab.greedy.trajectory import (dense_good_event, step_events,
                                      trajectory, write_trajectory_csv)
from gaplab.thresholds.regime import Regime
from gaplab.thresholds.scales import p_c

from .conftest import er_pair


def replay_uniform(g: Graph, gs: Graph, seed: Seed):
    """Step-by-step greedy with eta = 0, drawing ties from the same streams."""
    n = g.n
    adjacency = g.dense()
    second = gs.dense().astype(int)
    pi = []
    remaining = set(range(n))
    for step in range(1, n + 1):
        v = step - 1
        prior = [j for j in range(v) if adjacency[j, v]]
        scores = {r: sum(second[pi[j], r] for j in prior) for r in remaining}
        best = max(scores.values())
        ties = sorted(r for r, score in scores.items() if score == best)
        if len(ties) == 1:
            choice = ties[0]
        else:
            rng = seed.child("tie-break", STANDALONE_OWNER, step).generator()
            choice = ties[rng.integers(len(ties))]
        pi.append(choice)
        remaining.remove(choice)
    return [value + 1 for value in pi]


def integer_argmax_holds(g: Graph, gs: Graph, result, window) -> bool:
    a_eta, b_eta = window
    adjacency = g.dense()
    second = gs.dense().astype(int)
    pi = result.pi_star.forward
    used = set(pi[:a_eta].tolist())
    for v in range(a_eta, b_eta):
        prior = [j for j in range(v) if adjacency[j, v]]
        scores = second[pi[prior]].sum(axis=0) if prior else np.zeros(g.n, dtype=int)
        best = max(scores[r] for r in range(g.n) if r not in used)
        if scores[pi[v]] != best:
            return False
        used.add(int(pi[v]))
    return True


def test_hand_trace():
    g = Graph.from_edges(4, [(1, 2), (1, 3), (2, 4)])
    gs = Graph.from_edges(4, [(1, 2), (1, 4), (3, 4)])
    for root in range(5):
        seed = Seed(root)
        result = greedy_align(g, gs, GreedyConfig(eta=0.0, seed=seed))
        assert result.pi_star.one_line() == replay_uniform(g, gs, seed)
        assert result.overlap_value == overlap(g, gs, result.pi_star)


def test_empty_first_graph():
    g = Graph.empty(10)
    _, gs = er_pair(10, 0.5)
    result = greedy_align(g, gs, GreedyConfig(capture_trajectory=True))
    assert sorted(result.pi_star.one_line()) == list(range(1, 11))
    assert result.overlap_value == 0
    assert all(record.o_s == 0 for record in trajectory(result))


@pytest.mark.parametrize("eta", [0.0, 0.1, 0.3])
def test_complete_graphs(eta: float):
    n = 9
    g = Graph.complete(n)
    result = greedy_align(g, g, GreedyConfig(eta=eta, capture_trajectory=True))
    assert result.overlap_value == pair_count(n)
    assert [record.o_s for record in result.trajectory] == list(range(n))
    assert [record.n_s for record in result.trajectory] == list(range(n))


@pytest.mark.parametrize("tie_break", [TieBreak.UniformSample, TieBreak.Perturbation])
def test_window_invariants(tie_break: TieBreak):
    n, eta = 50, 0.2
    g, gs = er_pair(n, 0.3, root=3)
    cfg = GreedyConfig(eta=eta, tie_break=tie_break, seed=Seed(11))
    result = greedy_align(g, gs, cfg)
    a_eta, b_eta = cfg.window(n)
    assert (a_eta, b_eta) == (10, 40)
    forward = result.pi_star.forward
    assert np.array_equal(np.sort(forward), np.arange(n))
    assert np.array_equal(forward[:a_eta], np.arange(a_eta))
    assert np.all(np.diff(forward[b_eta:]) > 0)
    assert result.overlap_value == overlap(g, gs, result.pi_star)


def test_window_floor_tolerance():
    assert GreedyConfig(eta=0.29).window(100) == (29, 71)
    assert GreedyConfig(eta=0.0).window(7) == (0, 7)


def test_deterministic():
    g, gs = er_pair(60, 0.2, root=1)
    cfg = GreedyConfig(eta=0.1, seed=Seed(4))
    first = greedy_align(g, gs, cfg)
    second = greedy_align(g, gs, cfg)
    assert first.pi_star == second.pi_star
    assert first.overlap_value == second.overlap_value
    assert first.accumulation_ops == second.accumulation_ops


def test_dense_and_sparse_kernels_agree():
    g, gs = er_pair(40, 0.25, root=2)
    sparse = greedy_align(g, gs, GreedyConfig(seed=Seed(5), dense_threshold=1.0))
    dense = greedy_align(g, gs, GreedyConfig(seed=Seed(5), dense_threshold=0.0))
    assert sparse.pi_star == dense.pi_star
    assert sparse.accumulation_ops == dense.accumulation_ops


def test_operation_counts():
    n = 30
    g, gs = er_pair(n, 0.3, root=6)
    result = greedy_align(g, gs, GreedyConfig(seed=Seed(1)))
    assert result.naive_ops == sum((s - 1) * (n - s + 1) for s in range(1, n + 1))
    pi = result.pi_star.forward
    degrees = gs.dense().sum(axis=0)
    adjacency = g.dense()
    expected = sum(int(degrees[pi[j]]) for v in range(n) for j in range(v) if adjacency[j, v])
    assert result.accumulation_ops == expected


def test_accumulation_operations_cubic():
    # about n^3 p^2 / 2 increments at fixed p
    small = sum(greedy_align(*er_pair(100, 0.2, root=root), GreedyConfig()).accumulation_ops
                for root in range(3))
    large = sum(greedy_align(*er_pair(200, 0.2, root=root), GreedyConfig()).accumulation_ops
                for root in range(3))
    assert 6.0 <= large / small <= 10.0


def test_sparse_accumulation_below_reference():
    result = greedy_align(*er_pair(400, 0.02, root=4), GreedyConfig())
    assert 0 < result.accumulation_ops < result.naive_ops / 10


@pytest.mark.parametrize("root", range(10))
def test_perturbed_choice_in_integer_argmax(root: int):
    g, gs = er_pair(25, 0.3, root=root)
    for literal in (False, True):
        cfg = GreedyConfig(eta=0.1, seed=Seed(root), literal_perturbation=literal)
        result = greedy_align_perturbed(g, gs, cfg)
        assert integer_argmax_holds(g, gs, result, cfg.window(g.n))


def test_uniform_choice_in_integer_argmax():
    g, gs = er_pair(25, 0.3, root=8)
    cfg = GreedyConfig(seed=Seed(8))
    assert integer_argmax_holds(g, gs, greedy_align(g, gs, cfg), cfg.window(25))


def test_perturbed_empty_graph():
    g = Graph.empty(8)
    _, gs = er_pair(8, 0.5)
    cfg = GreedyConfig(literal_perturbation=True)
    result = greedy_align_perturbed(g, gs, cfg)
    assert sorted(result.pi_star.one_line()) == list(range(1, 9))
    assert result.overlap_value == 0
    assert result.algorithm == "greedy-perturbed-literal"


def test_literal_perturbation_uniform_on_ties():
    # with eta = 0.2 step 1 is the identity and step 2 ties over {2, 3, 4}
    g = Graph.from_edges(6, [(1, 2), (2, 5), (3, 6)])
    gs = Graph.from_edges(6, [(1, 2), (1, 3), (1, 4), (5, 6)])
    counts = {2: 0, 3: 0, 4: 0}
    for root in range(10_000):
        cfg = GreedyConfig(eta=0.2, seed=Seed(root), literal_perturbation=True)
        result = greedy_align_perturbed(g, gs, cfg)
        assert result.pi_star(1) == 1
        counts[result.pi_star(2)] += 1
    assert sum(counts.values()) == 10_000
    assert scipy.stats.chisquare(list(counts.values())).pvalue > 0.01


def test_literal_perturbation_cap():
    g = Graph.empty(4001)
    cfg = GreedyConfig(literal_perturbation=True)
    with pytest.raises(PreconditionError):
        greedy_align_perturbed(g, g, cfg)


def test_greedy_tail():
    g, gs = er_pair(30, 0.3, root=4)
    plain = greedy_align(g, gs, GreedyConfig(seed=Seed(2)))
    tail = greedy_align(g, gs, GreedyConfig(seed=Seed(2), greedy_tail=True))
    # with eta = 0 there is no final segment
    assert tail.pi_star == plain.pi_star
    assert tail.algorithm == "greedy-tail"
    windowed = greedy_align(g, gs, GreedyConfig(eta=0.2, seed=Seed(2), greedy_tail=True))
    assert np.array_equal(windowed.pi_star.forward[:6], np.arange(6))
    assert integer_argmax_holds(g, gs, windowed, (6, 30))


def test_bad_inputs():
    with pytest.raises(DomainError):
        GreedyConfig(eta=0.5)
    with pytest.raises(DomainError):
        GreedyConfig(eta=-0.1)
    with pytest.raises(DomainError):
        GreedyConfig(p=1.5)
    with pytest.raises(SizeMismatchError):
        greedy_align(Graph.empty(4), Graph.empty(5), GreedyConfig())
    with pytest.raises(PreconditionError):
        greedy_align(Graph.empty(1), Graph.empty(1), GreedyConfig())


def test_centering_and_ratio():
    g, gs = er_pair(200, 0.4, root=9)
    result = greedy_align(g, gs, GreedyConfig(p=0.4))
    assert result.p == 0.4
    assert result.regime is Regime.Dense
    assert result.centered_value == pytest.approx(result.overlap_value - pair_count(200) * 0.16)
    assert result.ratio == pytest.approx(result.centered_value / result.scale)


def test_degenerate_p_ratio():
    g = Graph.empty(20)
    result = greedy_align(g, g, GreedyConfig(p=0.0))
    assert result.centered_value == 0
    assert result.ratio == 0


def test_missing_trajectory():
    g, gs = er_pair(10, 0.3)
    with pytest.raises(MissingTrajectoryError):
        trajectory(greedy_align(g, gs, GreedyConfig()))


def test_trajectory_sums_to_overlap():
    g, gs = er_pair(80, 0.2, root=5)
    result = greedy_align(g, gs, GreedyConfig(eta=0.1, capture_trajectory=True))
    records = trajectory(result)
    assert [record.s for record in records] == list(range(1, 81))
    assert sum(record.o_s for record in records) == result.overlap_value
    assert sum(record.n_s for record in records) == g.edge_count
    assert all(0 <= record.o_s <= record.n_s for record in records)


def test_trajectory_csv():
    g = Graph.from_edges(3, [(1, 2), (2, 3)])
    result = greedy_align(g, g, GreedyConfig(p=0.0, capture_trajectory=True))
    buffer = io.StringIO()
    write_trajectory_csv(result.trajectory, buffer)
    lines = buffer.getvalue().splitlines()
    assert lines[0] == "s,n_s,o_s,standardized_gain"
    assert len(lines) == 4
    # p = 0 leaves every standardized gain undefined
    assert all(line.endswith(",") for line in lines[1:])
    assert lines[1] == "1,0,0,"


def test_trajectory_csv_file(tmp_path):
    g, gs = er_pair(20, 0.4)
    result = greedy_align(g, gs, GreedyConfig(capture_trajectory=True))
    target = tmp_path / "trajectory.csv"
    write_trajectory_csv(result.trajectory, target)
    assert len(target.read_text().splitlines()) == 21


def test_step_events_without_edges():
    g = Graph.empty(20)
    cfg = GreedyConfig(eta=0.1, p=0.0, capture_trajectory=True)
    result = greedy_align(g, g, cfg)
    events = step_events(result.trajectory, 0.0, 0.1, 0.5, cfg.window(20))
    assert events.middle_steps == 16
    assert events.middle_fraction == 0.0
    assert events.first_holds
    assert events.last_holds
    assert events.mean_middle_gain is None


def test_good_event_on_empty_graph():
    event = dense_good_event(Graph.empty(30), 0.0, (3, 27))
    assert event.holds
    assert event.max_intersection == 0


def test_good_event_common_neighbors():
    # vertices 5 and 6 share earlier neighbors 1..4
    g = Graph.from_edges(6, [(i, j) for i in range(1, 5) for j in (5, 6)])
    event = dense_good_event(g, 0.1, (0, 6))
    assert event.max_intersection == 4
    assert not event.intersection_holds
    assert not event.holds


@pytest.mark.slow
def test_dense_trajectory_gains():
    n = 2000
    p = 3 * p_c(n)
    g, gs = er_pair(n, p, root=21)
    cfg = GreedyConfig(eta=0.05, p=p, capture_trajectory=True)
    result = greedy_align(g, gs, cfg)
    events = step_events(result.trajectory, p, 0.05, 0.5, cfg.window(n))
    assert 0.7 <= events.mean_middle_gain <= 1.6
    assert events.first_holds
    assert events.last_holds
    assert dense_good_event(g, p, cfg.window(n)).degree_holds
    assert math.isfinite(result.ratio)
