import itertools

import numpy as np
import pytest

from gaplab.correlated.pairs import sample_2alpha
from gaplab.exceptions import CapExceededError, DomainError
from gaplab.graph_core.graph import Graph
from gaplab.graph_core.overlap import overlap
from gaplab.graph_core.permutation import Permutation, permutation_overlap
from gaplab.graph_core.sampling import sample_er
from gaplab.graph_core.seed import Seed
from gaplab.greedy.align import greedy_align
from gaplab.greedy.config import GreedyConfig
from gaplab.oracle.brute import brute_max_overlap
from gaplab.oracle.ogp import (BETA0_MIN, ForbiddenBandConfig, band_excess,
                               detect_forbidden_2ogp, interpolation_ogp_scan)
from gaplab.thresholds.regime import Regime
from gaplab.thresholds.scales import e_np


def reference_pair(g1: Graph, g2: Graph, gs: Graph, required: int, band: ForbiddenBandConfig):
    words = [Permutation(np.array(word)) for word in itertools.permutations(range(g1.n))]
    first = [pi for pi in words if overlap(g1, gs, pi) >= required]
    second = [pi for pi in words if overlap(g2, gs, pi) >= required]
    for pi1 in first:
        for pi2 in second:
            if band.in_band(permutation_overlap(pi1, pi2), g1.n):
                return pi1, pi2
    return None


def test_band_validation():
    band = ForbiddenBandConfig(beta0=0.999, eta=0.05)
    assert band.rho0 == pytest.approx(1 / 3)
    assert band_excess(band.rho0, 0.999, 0.05) < 0
    assert band.bounds(30) == pytest.approx(((1 / 3 - 0.05) * 30, (1 / 3 + 0.05) * 30))
    assert band.in_band(10, 30)
    assert not band.in_band(12, 30)
    with pytest.raises(DomainError):
        ForbiddenBandConfig(beta0=0.95, eta=0.01)
    with pytest.raises(DomainError):
        ForbiddenBandConfig(beta0=0.999, eta=0.0)
    with pytest.raises(DomainError):
        ForbiddenBandConfig(beta0=0.999, eta=0.3)
    ForbiddenBandConfig(beta0=0.5, eta=0.0, rho0=0.5, strict=False)


def test_max_eta():
    largest = ForbiddenBandConfig.max_eta(0.999)
    assert 0.05 < largest < 0.1
    assert band_excess(1 / 3, 0.999, largest) == pytest.approx(0.0, abs=1e-12)
    ForbiddenBandConfig(beta0=0.999, eta=0.99 * largest)
    with pytest.raises(DomainError):
        ForbiddenBandConfig(beta0=0.999, eta=1.01 * largest)
    # at the lower end of beta0 the band closes
    assert ForbiddenBandConfig.max_eta(BETA0_MIN) == pytest.approx(0.0, abs=1e-6)


def test_witness_on_complete_graphs():
    n = 6
    complete = Graph.complete(n)
    # open band (1.4, 2.6) holds exactly overlap 2
    band = ForbiddenBandConfig(beta0=0.0, eta=0.1, rho0=1 / 3, strict=False)
    witness = detect_forbidden_2ogp(complete, complete, complete, band, Regime.Dense,
                                    p=1.0, absolute_threshold=0.0)
    assert witness is not None
    first, second = witness
    assert first == Permutation.identity(n)
    assert permutation_overlap(first, second) == 2
    assert second.one_line() == [1, 2, 4, 3, 6, 5]


def test_no_witness_on_empty_graphs():
    empty = Graph.empty(6)
    band = ForbiddenBandConfig(beta0=0.999, eta=0.05)
    assert detect_forbidden_2ogp(empty, empty, empty, band, Regime.Dense, p=0.5) is None


def test_zero_width_band():
    complete = Graph.complete(5)
    band = ForbiddenBandConfig(beta0=0.0, eta=0.0, rho0=0.4, strict=False)
    assert detect_forbidden_2ogp(complete, complete, complete, band, Regime.Dense,
                                 p=1.0, absolute_threshold=0.0) is None


@pytest.mark.parametrize("root", range(50))
def test_detector_matches_double_loop(root: int):
    n, p = 4 + root % 3, 0.5
    g1, g2 = sample_2alpha(n, p, 0.5, Seed(root).child("pair"))
    gs = sample_er(n, p, Seed(root).child("Gs"))
    required = brute_max_overlap(g1, gs).value - 1
    band = ForbiddenBandConfig(beta0=0.0, eta=0.2, rho0=0.4, strict=False)
    found = detect_forbidden_2ogp(g1, g2, gs, band, Regime.Dense, p=p,
                                  absolute_threshold=required - e_np(n, p))
    assert found == reference_pair(g1, g2, gs, required, band)


def test_detector_cap():
    empty = Graph.empty(11)
    band = ForbiddenBandConfig(beta0=0.999, eta=0.05)
    with pytest.raises(CapExceededError):
        detect_forbidden_2ogp(empty, empty, empty, band, Regime.Dense, p=0.5)


def test_scan_identical_endpoints():
    n = 6
    g = sample_er(n, 0.5, Seed(1).child("G"))
    gs = sample_er(n, 0.5, Seed(1).child("Gs"))
    band = ForbiddenBandConfig(beta0=0.999, eta=0.05)
    report = interpolation_ogp_scan(g, g, gs, band, greedy_align, GreedyConfig(seed=Seed(1)),
                                    p=0.5)
    assert report.path_length == 15
    assert report.distances == [0] * 15
    assert report.overlaps_with_start == [n] * 16
    assert report.stable_holds
    assert not report.ends_holds
    assert report.ogp_holds is not None
    assert not report.all_hold


def test_scan_threshold_above_brute_max():
    n, p = 6, 0.5
    g = sample_er(n, p, Seed(2).child("G"))
    g_prime = sample_er(n, p, Seed(2).child("G'"))
    gs = sample_er(n, p, Seed(2).child("Gs"))
    best = max(brute_max_overlap(g, gs).value, brute_max_overlap(g_prime, gs).value)
    band = ForbiddenBandConfig(beta0=0.999, eta=0.05)
    report = interpolation_ogp_scan(g, g_prime, gs, band, greedy_align, GreedyConfig(),
                                    p=p, absolute_threshold=best + 1 - e_np(n, p))
    assert not report.suc_holds
    # no solutions anywhere, so no forbidden pair either
    assert report.ogp_holds
    assert report.forbidden_step is None


@pytest.mark.parametrize("root", range(5))
def test_scan_is_descriptive(root: int):
    n, p = 7, 0.5
    seed = Seed(root)
    g = sample_er(n, p, seed.child("G"))
    g_prime = sample_er(n, p, seed.child("G'"))
    gs = sample_er(n, p, seed.child("Gs"))
    band = ForbiddenBandConfig(beta0=0.999, eta=0.05)
    report = interpolation_ogp_scan(g, g_prime, gs, band, greedy_align,
                                    GreedyConfig(seed=seed.child("align")), cap=6, p=p)
    assert report.ogp_holds is None
    assert report.path_length == 21
    assert len(report.distances) == 21
    assert report.overlaps_with_start[0] == n
    assert all(0 <= d <= n for d in report.distances)
    assert report.stable_holds == all(d <= 0.05 * n for d in report.distances)
    assert report.ends_holds == (report.overlaps_with_start[-1] <= (1 / 3 - 0.05) * n)
    assert not report.all_hold
